#pragma once

#include <stdexcept>
#include <string>

namespace treespec {

enum class ErrorKind {
    LoopEdge,
    DuplicateEdge,
    VertexOutOfRange,
    MalformedGraph6,
    OrderTooLarge,
    EmptyEdgeSet,
    OrientationLengthMismatch,
    InvalidOrder,
    NotUnicyclic,
    NotSquare,
    InexactDivision,
    NotSymmetric,
    NotMonic,
    IndexOutOfRange,
    TooLarge,
    ZeroTrees,
    SizeMismatch,
    InvalidArgument,
    IoError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace treespec
