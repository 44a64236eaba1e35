#ifndef HYPERLAB_ERROR_HPP
#define HYPERLAB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperlab {

enum class ErrorCode {
    NonUniformEdge,
    VertexOutOfRange,
    DuplicateVertexInEdge,
    EmptyPartition,
    NonPositivePart,
    IndexOutOfRange,
    ROutOfRange,
    SigmaTotalMismatch,
    TooFewClasses,
    SizeGuardExceeded,
    InvalidT,
    InvalidPQ,
    EdgeIndexOutOfRange,
    TOutOfRange,
    ImproperInput,
    PartialColouring,
    BadAlphaBeta,
    ParseError,
    IoError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace hyperlab

#endif  // HYPERLAB_ERROR_HPP
