#include "mtori/error.hpp"

namespace mtori {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::IncompatibleAutomorphism: return "IncompatibleAutomorphism";
    case ErrorKind::InvalidAutomorphism: return "InvalidAutomorphism";
    case ErrorKind::UnsupportedDescription: return "UnsupportedDescription";
    case ErrorKind::GenusMismatch: return "GenusMismatch";
    case ErrorKind::NotSymplectic: return "NotSymplectic";
    case ErrorKind::InconsistentCharacteristicNumbers: return "InconsistentCharacteristicNumbers";
    case ErrorKind::UnknownVirtualFibering: return "UnknownVirtualFibering";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind), detail_(detail)
{
}

void raise(ErrorKind kind, const std::string& detail)
{
    throw Error(kind, detail);
}

}  // namespace mtori
