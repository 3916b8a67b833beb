#pragma once

#include <stdexcept>
#include <string>

namespace whtk {

// Domain errors carry a stable name used by the CLI for exit-code mapping
// and diagnostics.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& what = "division by zero")
        : Error("DivisionByZero", what) {}
};

struct SizeMismatch : Error {
    explicit SizeMismatch(const std::string& what = "incompatible matrix sizes")
        : Error("SizeMismatch", what) {}
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& what = "determinant is identically zero")
        : Error("SingularMatrix", what) {}
};

struct ZeroDeterminant : Error {
    explicit ZeroDeterminant(const std::string& what = "rational matrix has identically zero determinant")
        : Error("ZeroDeterminant", what) {}
};

struct ReverseDegreeTooSmall : Error {
    explicit ReverseDegreeTooSmall(const std::string& what = "reversal degree below polynomial degree")
        : Error("ReverseDegreeTooSmall", what) {}
};

// Roots of an irreducible-over-Q(i) factor straddle the unit circle; an exact
// split would need an algebraic extension.
struct MixedLocationFactor : Error {
    explicit MixedLocationFactor(const std::string& what = "factor has roots in more than one region")
        : Error("MixedLocationFactor", what) {}
};

// A Schur-Cohn reflection coefficient of unit modulus makes the inside-count
// recursion degenerate; the caller must supply the polynomial pre-factored.
struct SingularSchurCohn : Error {
    explicit SingularSchurCohn(const std::string& what = "degenerate Schur-Cohn recursion")
        : Error("SingularSchurCohn", what) {}
};

struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& what) : Error("PreconditionViolated", what) {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& what) : Error("ShapeMismatch", what) {}
};

struct ConditionFailed : Error {
    explicit ConditionFailed(const std::string& what) : Error("ConditionFailed", what) {}
};

struct InvalidFactorization : Error {
    explicit InvalidFactorization(const std::string& what) : Error("InvalidFactorization", what) {}
};

struct ParseError : Error {
    ParseError(std::size_t offset, const std::string& what)
        : Error("ParseError", what + " (at offset " + std::to_string(offset) + ")"), offset(offset) {}
    std::size_t offset;
};

}  // namespace whtk
