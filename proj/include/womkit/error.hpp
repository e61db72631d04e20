#pragma once

#include <stdexcept>
#include <string>

namespace womkit {

enum class ErrorCode {
  // structural / schema
  SchemaError,
  ParseError,
  StateMismatch,
  // codec
  GenerationOutOfRange,
  MessageOutOfRange,
  NoCoveringCodeword,
  NotInImage,
  NotInAnyImage,
  NotSynchronous,
  WriteSequenceFailed,
  // compose
  PreconditionViolation,
  InconsistentBlocks,
  BeyondLastGeneration,
  NothingWritten,
  AllZeroAlreadyPresent,
  MergedCodeInvalid,
  SplitCodeInvalid,
  GenerationCountMismatch,
  StateLimitExceeded,
  // search
  Infeasible,
  BudgetExhausted,
  NoSuchReorganization,
  TooManyWrites,
  // catalog
  CatalogCorrupt,
  UnknownEntry,
};

const char* to_string(ErrorCode code);

// Every domain failure raised by the library. The code identifies the
// failure class; the message carries the location (generation, class,
// state, step) in human-readable form.
class WomError : public std::runtime_error {
 public:
  WomError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  // The message without the error-code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace womkit
