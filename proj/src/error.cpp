#include <hyperlab/error.hpp>

namespace hyperlab {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::NonUniformEdge: return "NonUniformEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::DuplicateVertexInEdge: return "DuplicateVertexInEdge";
    case ErrorCode::EmptyPartition: return "EmptyPartition";
    case ErrorCode::NonPositivePart: return "NonPositivePart";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ROutOfRange: return "ROutOfRange";
    case ErrorCode::SigmaTotalMismatch: return "SigmaTotalMismatch";
    case ErrorCode::TooFewClasses: return "TooFewClasses";
    case ErrorCode::SizeGuardExceeded: return "SizeGuardExceeded";
    case ErrorCode::InvalidT: return "InvalidT";
    case ErrorCode::InvalidPQ: return "InvalidPQ";
    case ErrorCode::EdgeIndexOutOfRange: return "EdgeIndexOutOfRange";
    case ErrorCode::TOutOfRange: return "TOutOfRange";
    case ErrorCode::ImproperInput: return "ImproperInput";
    case ErrorCode::PartialColouring: return "PartialColouring";
    case ErrorCode::BadAlphaBeta: return "BadAlphaBeta";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace hyperlab
