#pragma once

#include <stdexcept>
#include <string>

namespace index3d {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Text input that does not follow a documented format.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = 0, int column = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what
                         : what),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Matrix or vector dimensions that disagree with the declared shape.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// An isomorphism signature that cannot be decoded.
class MalformedSignature : public Error {
public:
    using Error::Error;
};

/// A triangulation that violates the ideal-triangulation invariants.
class InvalidTriangulation : public Error {
public:
    using Error::Error;
};

/// A Pachner move requested on a target where it is not legal.
class IllegalMove : public Error {
public:
    using Error::Error;
};

/// An operation needing meridian and longitude rows was given edge rows only.
class MissingCuspRows : public Error {
public:
    using Error::Error;
};

/// Peripheral coefficients whose base class cannot be made integral.
class NonIntegerBaseClass : public Error {
public:
    using Error::Error;
};

/// The edge-solution lattice does not have the expected rank.
class RankMismatch : public Error {
public:
    using Error::Error;
};

/// Vertex enumeration refused because the ambient dimension exceeds the cap.
class DimensionTooLarge : public Error {
public:
    using Error::Error;
};

/// Internal consistency check failed; indicates corrupted input data.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

/// A Pachner path step produced a signature different from the expected one.
class StepMismatch : public Error {
public:
    StepMismatch(int step, std::string got, std::string expected)
        : Error("step " + std::to_string(step) + ": got '" + got + "', expected '" + expected + "'"),
          step_(step), got_(std::move(got)), expected_(std::move(expected)) {}
    int step() const { return step_; }
    const std::string& got() const { return got_; }
    const std::string& expected() const { return expected_; }

private:
    int step_;
    std::string got_;
    std::string expected_;
};

/// Raised by callers that demand convergence when the engine suspects divergence.
class DivergenceSuspected : public Error {
public:
    using Error::Error;
};

}  // namespace index3d
