#pragma once

#include <stdexcept>
#include <string>

namespace offhex {

enum class ErrorKind {
    Parse,
    ParityViolation,
    YBelowMinimum,
    FernOverflow,
    PositionUnsupported,
    YNotMinimal,
    NegativeArgument,
    NonIntegral,
    NoTheoremRow,
    ResourceLimit,
    ColorPatternViolation,
    ConditionMismatch,
    UnknownId,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind k, const std::string& msg)
        : std::runtime_error(msg), kind_(k) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace offhex
