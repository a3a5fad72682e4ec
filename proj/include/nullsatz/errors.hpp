#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nullsatz {

enum class ErrorKind {
  NotIrreducible,
  NotMonic,
  DimensionMismatch,
  DivisionByZero,
  SmallCharacteristic,
  NotSplit,
  NotAzumaya,
  TooLargeForExhaustion,
  NotSimpleModule,
  ZeroVector,
  DegreeBudgetExceeded,
  NotZeroDimensional,
  InfiniteBaseField,
  RankMismatch,
  MixedParents,
  FactorIndexOutOfRange,
  NotSurjective,
  DegreeBoundTooSmall,
  InternalInconsistency,
  IdentityFailed,
  NotSupported,
  InvalidArgument,
  ParseError,
};

std::string_view kind_name(ErrorKind kind);

// Input-side problems map to exit code 2, regime limits to 3.
bool is_unsupported_regime(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string where, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  // "module::operation"
  const std::string& where() const noexcept { return where_; }
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string where_;
  std::string message_;
};

class ParseError : public Error {
 public:
  ParseError(std::string where, std::size_t offset, const std::string& message);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

[[noreturn]] void fail(ErrorKind kind, std::string where, const std::string& message);

}  // namespace nullsatz
