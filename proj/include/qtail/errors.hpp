#pragma once

#include <stdexcept>
#include <string>

namespace qtail {

/// Base class for every error raised by the library. Callers that only care
/// about "computation failed" catch this; tests match the concrete kinds.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Algebra
class NonDivisible : public Error {
public:
    explicit NonDivisible(const std::string& what) : Error("not divisible: " + what) {}
};
class NonUnitLeadingTerm : public Error {
public:
    explicit NonUnitLeadingTerm(const std::string& what) : Error("non-unit leading term: " + what) {}
};
class DivergentProduct : public Error {
public:
    explicit DivergentProduct(const std::string& what) : Error("divergent product: " + what) {}
};
class DivergentSeries : public Error {
public:
    explicit DivergentSeries(const std::string& what) : Error("divergent series: " + what) {}
};
class OutOfRange : public Error {
public:
    explicit OutOfRange(const std::string& what) : Error("out of range: " + what) {}
};

// Braid input
class SyntaxError : public Error {
public:
    explicit SyntaxError(const std::string& what) : Error("syntax error: " + what) {}
};
class RangeError : public Error {
public:
    explicit RangeError(const std::string& what) : Error("range error: " + what) {}
};
class NotAKnot : public Error {
public:
    explicit NotAKnot(const std::string& what) : Error("not a knot: " + what) {}
};

// Skein / torus formulas
class NotAdmissible : public Error {
public:
    explicit NotAdmissible(const std::string& what) : Error("not admissible: " + what) {}
};
class NotCoprime : public Error {
public:
    explicit NotCoprime(const std::string& what) : Error("not coprime: " + what) {}
};
class MethodMismatch : public Error {
public:
    explicit MethodMismatch(const std::string& what) : Error("method mismatch: " + what) {}
};

} // namespace qtail
