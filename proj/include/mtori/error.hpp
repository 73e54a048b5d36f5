#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mtori {

enum class ErrorKind {
    NotUnimodular,
    IncompatibleAutomorphism,
    InvalidAutomorphism,
    UnsupportedDescription,
    GenusMismatch,
    NotSymplectic,
    InconsistentCharacteristicNumbers,
    UnknownVirtualFibering,
    InvalidArgument,
    ParseError,
    ValidationError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-checkable kind.
/// The message is prefixed with the kind name, e.g. "NotUnimodular: det = 0".
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail);

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& detail);

}  // namespace mtori
