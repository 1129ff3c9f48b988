#include "treespec/error.hpp"

namespace treespec {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::LoopEdge: return "LoopEdge";
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorKind::MalformedGraph6: return "MalformedGraph6";
        case ErrorKind::OrderTooLarge: return "OrderTooLarge";
        case ErrorKind::EmptyEdgeSet: return "EmptyEdgeSet";
        case ErrorKind::OrientationLengthMismatch: return "OrientationLengthMismatch";
        case ErrorKind::InvalidOrder: return "InvalidOrder";
        case ErrorKind::NotUnicyclic: return "NotUnicyclic";
        case ErrorKind::NotSquare: return "NotSquare";
        case ErrorKind::InexactDivision: return "InexactDivision";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
        case ErrorKind::NotMonic: return "NotMonic";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::ZeroTrees: return "ZeroTrees";
        case ErrorKind::SizeMismatch: return "SizeMismatch";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::IoError: return "IoError";
    }
    return "UnknownError";
}

}  // namespace treespec
