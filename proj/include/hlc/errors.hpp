#ifndef HLC_ERRORS_HPP
#define HLC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hlc {

enum class ErrorKind {
    // instance validation
    EmptyList,
    ListTooSmall,
    VertexOutOfRange,
    DuplicateVertexInEdge,
    BadColor,
    KTooLarge,
    NoVertices,
    // operation contracts
    ImproperInput,
    PreconditionViolated,
    EmptyActive,
    EmptyPart,
    Eps2TooLarge,
    CNotRespected,
    // generator
    TooManyEdges,
    Infeasible,
    // runtime
    InternalInvariantViolation,
    BudgetExceeded,
    // file I/O
    SyntaxError,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

const char* error_kind_name(ErrorKind k);

} // namespace hlc

#endif
