#pragma once

#include <stdexcept>
#include <string>

namespace gtrel {

enum class ErrorCode {
    ParseError,
    ValidationError,
    SeedViolatesRelations,
    NotARealization,
    StructureViolation,
    NotAdmissible,
    CriticalDenominator,
    UnsupportedGenerator,
    NotCaseA,
    NotCaseB,
    NotRelation,
    PreconditionViolated,
    NotInjective,
    IncompatiblePair,
    WrongShape,
    NonSquareGamma,
    DegenerateDense,
    BranchNotLocalizable,
    BadTwist,
};

inline const char* code_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::SeedViolatesRelations: return "SeedViolatesRelations";
    case ErrorCode::NotARealization: return "NotARealization";
    case ErrorCode::StructureViolation: return "StructureViolation";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::CriticalDenominator: return "CriticalDenominator";
    case ErrorCode::UnsupportedGenerator: return "UnsupportedGenerator";
    case ErrorCode::NotCaseA: return "NotCaseA";
    case ErrorCode::NotCaseB: return "NotCaseB";
    case ErrorCode::NotRelation: return "NotRelation";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotInjective: return "NotInjective";
    case ErrorCode::IncompatiblePair: return "IncompatiblePair";
    case ErrorCode::WrongShape: return "WrongShape";
    case ErrorCode::NonSquareGamma: return "NonSquareGamma";
    case ErrorCode::DegenerateDense: return "DegenerateDense";
    case ErrorCode::BranchNotLocalizable: return "BranchNotLocalizable";
    case ErrorCode::BadTwist: return "BadTwist";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(code_name(code)) + ": " + detail), code_(code), detail_(detail) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

} // namespace gtrel
