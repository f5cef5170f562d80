#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace superroot {

enum class ErrorCode {
    ZeroMatrix,
    NotNormalized,
    DimensionMismatch,
    IndexOutOfRange,
    NotSymmetrizable,
    NotARoot,
    NotIsotropicOdd,
    NotRegularInBase,
    IsotropicReflector,
    NonRegularBaseEncountered,
    UnsupportedType,
    InvalidType,
    NotInLattice,
    RankMismatch,
    PairingNotIntegral,
    NotClosed,
    Inconclusive,
    WindowExhausted,
    BrokenString,
    PatternViolation,
    TruncationHit,
    ProblemTooLarge,
    ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace superroot
