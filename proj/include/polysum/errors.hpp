#pragma once

#include <stdexcept>
#include <string>

namespace polysum {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };

// Polytope construction failures.
struct Unbounded : Error { using Error::Error; };
struct EmptyPolytope : Error { using Error::Error; };
struct NotFullDimensional : Error { using Error::Error; };

// Cone and Minkowski operation failures.
struct ApexMismatch : Error { using Error::Error; };
struct NotMinkowskiVertex : Error { using Error::Error; };
struct NoParallelEdge : Error { using Error::Error; };

// Bug signals: these fire only when an exact-arithmetic invariant breaks.
struct InternalInconsistency : Error { using Error::Error; };
struct CapDisconnected : Error { using Error::Error; };
struct TraversalIncomplete : Error { using Error::Error; };

struct ParseError : Error {
    ParseError(const std::string& msg, int line_, int col_)
        : Error("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                ": " + msg),
          line(line_), col(col_) {}
    int line;
    int col;
};

struct RayNotSupported : ParseError {
    using ParseError::ParseError;
};

}  // namespace polysum
