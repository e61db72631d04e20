#include "womkit/error.hpp"

namespace womkit {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::StateMismatch: return "StateMismatch";
    case ErrorCode::GenerationOutOfRange: return "GenerationOutOfRange";
    case ErrorCode::MessageOutOfRange: return "MessageOutOfRange";
    case ErrorCode::NoCoveringCodeword: return "NoCoveringCodeword";
    case ErrorCode::NotInImage: return "NotInImage";
    case ErrorCode::NotInAnyImage: return "NotInAnyImage";
    case ErrorCode::NotSynchronous: return "NotSynchronous";
    case ErrorCode::WriteSequenceFailed: return "WriteSequenceFailed";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::InconsistentBlocks: return "InconsistentBlocks";
    case ErrorCode::BeyondLastGeneration: return "BeyondLastGeneration";
    case ErrorCode::NothingWritten: return "NothingWritten";
    case ErrorCode::AllZeroAlreadyPresent: return "AllZeroAlreadyPresent";
    case ErrorCode::MergedCodeInvalid: return "MergedCodeInvalid";
    case ErrorCode::SplitCodeInvalid: return "SplitCodeInvalid";
    case ErrorCode::GenerationCountMismatch: return "GenerationCountMismatch";
    case ErrorCode::StateLimitExceeded: return "StateLimitExceeded";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::NoSuchReorganization: return "NoSuchReorganization";
    case ErrorCode::TooManyWrites: return "TooManyWrites";
    case ErrorCode::CatalogCorrupt: return "CatalogCorrupt";
    case ErrorCode::UnknownEntry: return "UnknownEntry";
  }
  return "UnknownError";
}

}  // namespace womkit
