#include "offhex/errors.hpp"

namespace offhex {

const char* error_kind_name(ErrorKind k)
{
    switch (k) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::YBelowMinimum: return "YBelowMinimum";
    case ErrorKind::FernOverflow: return "FernOverflow";
    case ErrorKind::PositionUnsupported: return "PositionUnsupported";
    case ErrorKind::YNotMinimal: return "YNotMinimal";
    case ErrorKind::NegativeArgument: return "NegativeArgument";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::NoTheoremRow: return "NoTheoremRow";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::ColorPatternViolation: return "ColorPatternViolation";
    case ErrorKind::ConditionMismatch: return "ConditionMismatch";
    case ErrorKind::UnknownId: return "UnknownId";
    }
    return "Unknown";
}

}  // namespace offhex
