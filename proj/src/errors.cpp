#include "nullsatz/errors.hpp"

namespace nullsatz {

std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::SmallCharacteristic: return "SmallCharacteristic";
    case ErrorKind::NotSplit: return "NotSplit";
    case ErrorKind::NotAzumaya: return "NotAzumaya";
    case ErrorKind::TooLargeForExhaustion: return "TooLargeForExhaustion";
    case ErrorKind::NotSimpleModule: return "NotSimpleModule";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::DegreeBudgetExceeded: return "DegreeBudgetExceeded";
    case ErrorKind::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorKind::InfiniteBaseField: return "InfiniteBaseField";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::MixedParents: return "MixedParents";
    case ErrorKind::FactorIndexOutOfRange: return "FactorIndexOutOfRange";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::DegreeBoundTooSmall: return "DegreeBoundTooSmall";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::IdentityFailed: return "IdentityFailed";
    case ErrorKind::NotSupported: return "NotSupported";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_unsupported_regime(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SmallCharacteristic:
    case ErrorKind::NotSplit:
    case ErrorKind::NotAzumaya:
    case ErrorKind::TooLargeForExhaustion:
    case ErrorKind::DegreeBudgetExceeded:
    case ErrorKind::NotZeroDimensional:
    case ErrorKind::InfiniteBaseField:
    case ErrorKind::DegreeBoundTooSmall:
    case ErrorKind::NotSupported:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorKind kind, std::string where, const std::string& message)
    : std::runtime_error("[" + where + "] " + std::string(kind_name(kind)) + ": " + message),
      kind_(kind),
      where_(std::move(where)),
      message_(message) {}

ParseError::ParseError(std::string where, std::size_t offset, const std::string& message)
    : Error(ErrorKind::ParseError, std::move(where),
            message + " at offset " + std::to_string(offset)),
      offset_(offset) {}

void fail(ErrorKind kind, std::string where, const std::string& message) {
  throw Error(kind, std::move(where), message);
}

}  // namespace nullsatz
