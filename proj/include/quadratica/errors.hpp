#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quadratica {

/// Domain error categories. The names are stable and appear verbatim in the
/// CLI's JSON error envelope.
enum class ErrorCode {
    PerfectSquareRadicand,
    MixedRadicands,
    DivisionByZero,
    DegenerateLeadingCoefficient,
    NonPositiveParameter,
    NegativeIndex,
    UnitRatio,
    CompositeModulus,
    EvenModulusUnsupported,
    DegenerateLeading,
    NotRepresentable,
    ZeroDifference,
    EmptyInterval,
    EvenInput,
    NoWitnessFound,
    InvalidPair,
    NotCoprime,
    NonPositiveLength,
    InvalidAngle,
    RadicandTooLarge,
    InvalidArgument,
    ParseError,
};

constexpr std::string_view error_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::PerfectSquareRadicand: return "PerfectSquareRadicand";
    case ErrorCode::MixedRadicands: return "MixedRadicands";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DegenerateLeadingCoefficient: return "DegenerateLeadingCoefficient";
    case ErrorCode::NonPositiveParameter: return "NonPositiveParameter";
    case ErrorCode::NegativeIndex: return "NegativeIndex";
    case ErrorCode::UnitRatio: return "UnitRatio";
    case ErrorCode::CompositeModulus: return "CompositeModulus";
    case ErrorCode::EvenModulusUnsupported: return "EvenModulusUnsupported";
    case ErrorCode::DegenerateLeading: return "DegenerateLeading";
    case ErrorCode::NotRepresentable: return "NotRepresentable";
    case ErrorCode::ZeroDifference: return "ZeroDifference";
    case ErrorCode::EmptyInterval: return "EmptyInterval";
    case ErrorCode::EvenInput: return "EvenInput";
    case ErrorCode::NoWitnessFound: return "NoWitnessFound";
    case ErrorCode::InvalidPair: return "InvalidPair";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NonPositiveLength: return "NonPositiveLength";
    case ErrorCode::InvalidAngle: return "InvalidAngle";
    case ErrorCode::RadicandTooLarge: return "RadicandTooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what)
{
    throw Error(code, what);
}

} // namespace quadratica
