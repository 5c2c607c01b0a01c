#pragma once

#include <stdexcept>
#include <string>

namespace schedarena {

enum class Errc {
    CycleDetected,
    DanglingEdge,
    NoEntryOrExit,
    DuplicateEdge,
    UnknownTask,
    NoDeadline,
    BelowMandatory,
    InvalidDistributionParams,
    OverlappingSlots,
    Overlap,
    DataNotReady,
    PolicyWorkloadMismatch,
    EmptySet,
    NeedTwoProcessors,
    Infeasible,
    MandatoryOverload,
    GangTooLarge,
    BadConfig,
    InvariantViolated,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::CycleDetected: return "CycleDetected";
        case Errc::DanglingEdge: return "DanglingEdge";
        case Errc::NoEntryOrExit: return "NoEntryOrExit";
        case Errc::DuplicateEdge: return "DuplicateEdge";
        case Errc::UnknownTask: return "UnknownTask";
        case Errc::NoDeadline: return "NoDeadline";
        case Errc::BelowMandatory: return "BelowMandatory";
        case Errc::InvalidDistributionParams: return "InvalidDistributionParams";
        case Errc::OverlappingSlots: return "OverlappingSlots";
        case Errc::Overlap: return "Overlap";
        case Errc::DataNotReady: return "DataNotReady";
        case Errc::PolicyWorkloadMismatch: return "PolicyWorkloadMismatch";
        case Errc::EmptySet: return "EmptySet";
        case Errc::NeedTwoProcessors: return "NeedTwoProcessors";
        case Errc::Infeasible: return "Infeasible";
        case Errc::MandatoryOverload: return "MandatoryOverload";
        case Errc::GangTooLarge: return "GangTooLarge";
        case Errc::BadConfig: return "BadConfig";
        case Errc::InvariantViolated: return "InvariantViolated";
    }
    return "Unknown";
}

/// Library-wide error type; `code()` identifies the contract violation.
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void expect(bool cond, Errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

} // namespace schedarena
