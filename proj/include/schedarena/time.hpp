#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace schedarena {

/// Fixed-point simulation time. All clocks, costs and durations are counted
/// in integer ticks so that schedules and metrics are exactly reproducible.
/// The tick resolution is one microsecond of model time by default
/// (SCHEDARENA_TICKS_PER_UNIT), i.e. one "time unit" = 1e6 ticks.
#ifndef SCHEDARENA_TICKS_PER_UNIT
#define SCHEDARENA_TICKS_PER_UNIT 1000000LL
#endif

class Time {
  public:
    static constexpr std::int64_t ticks_per_unit = SCHEDARENA_TICKS_PER_UNIT;

    constexpr Time() = default;

    static constexpr Time from_ticks(std::int64_t t) { return Time(t); }

    /// Nearest-tick rounding; deterministic for IEEE doubles.
    static Time of(double units) {
        return Time(static_cast<std::int64_t>(std::llround(units * static_cast<double>(ticks_per_unit))));
    }

    static constexpr Time zero() { return Time(0); }
    static constexpr Time infinity() { return Time(std::numeric_limits<std::int64_t>::max()); }

    constexpr std::int64_t ticks() const { return ticks_; }
    constexpr bool is_infinite() const { return ticks_ == std::numeric_limits<std::int64_t>::max(); }

    constexpr double units() const { return static_cast<double>(ticks_) / static_cast<double>(ticks_per_unit); }

    /// One tick: the clock resolution used by "within one resolution" rules.
    static constexpr Time resolution() { return Time(1); }

    friend constexpr Time operator+(Time a, Time b) { return Time(a.ticks_ + b.ticks_); }
    friend constexpr Time operator-(Time a, Time b) { return Time(a.ticks_ - b.ticks_); }
    constexpr Time& operator+=(Time o) { ticks_ += o.ticks_; return *this; }
    constexpr Time& operator-=(Time o) { ticks_ -= o.ticks_; return *this; }
    friend constexpr Time operator*(Time a, std::int64_t k) { return Time(a.ticks_ * k); }

    friend constexpr auto operator<=>(Time, Time) = default;

    /// Duration of `work` executed at combined rate `speed * frequency`,
    /// rounded to the nearest tick (exact whenever the division is exact).
    static Time stretch(Time work, double rate) {
        return Time(static_cast<std::int64_t>(std::llround(static_cast<double>(work.ticks_) / rate)));
    }

    /// Work processed during `span` at combined rate `speed * frequency`.
    static Time work_done(Time span, double rate) {
        return Time(static_cast<std::int64_t>(std::llround(static_cast<double>(span.ticks_) * rate)));
    }

    std::string str() const;

  private:
    constexpr explicit Time(std::int64_t t) : ticks_(t) {}
    std::int64_t ticks_ = 0;
};

inline std::string Time::str() const {
    if (is_infinite()) return "inf";
    // trim trailing zeros of the fractional part
    std::int64_t ip = ticks_ / ticks_per_unit;
    std::int64_t fp = ticks_ % ticks_per_unit;
    if (fp < 0) { ip -= 1; fp += ticks_per_unit; }
    std::string s = std::to_string(ip);
    if (fp != 0) {
        std::string frac = std::to_string(fp);
        frac.insert(0, 6 - frac.size(), '0');
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        s += "." + frac;
    }
    return s;
}

} // namespace schedarena
