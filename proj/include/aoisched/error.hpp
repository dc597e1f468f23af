#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aoisched {

enum class ErrorCode {
    LengthMismatch,
    DecisionAtOffSlot,
    NonIntegerDelta,
    IrrationalDelta,
    InvalidInstance,
    OutOfOrderSlot,
    EmptyObservationWindow,
    LambdaOutOfRange,
    UOutOfRange,
    HorizonTooLarge,
    GridEmpty,
    ZeroThresholdWithNoise,
    InvalidArgument,
    ParseError,
    ConfigError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and tests) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what)
        , code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
    if (!cond) fail(code, what);
}

} // namespace aoisched
