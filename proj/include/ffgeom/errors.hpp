#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ffgeom {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrime : Error {
    explicit NotPrime(unsigned long p)
        : Error("modulus " + std::to_string(p) + " is not a prime in [2, 2^16)") {}
};

struct ZeroInput : Error {
    ZeroInput() : Error("zero input where a nonzero value is required") {}
};

struct ZeroDivisor : Error {
    ZeroDivisor() : Error("division by zero") {}
};

struct ZeroDenominator : Error {
    ZeroDenominator() : Error("denominator is the zero polynomial") {}
};

struct NotFiniteTail : Error {
    NotFiniteTail() : Error("fractional part has a denominator other than a power of x") {}
};

struct EmptyVector : Error {
    EmptyVector() : Error("empty coordinate vector") {}
};

struct ParseError : Error {
    std::size_t offset;
    std::string expected;
    ParseError(std::size_t off, std::string exp)
        : Error("parse error at byte " + std::to_string(off) + ": expected " + exp),
          offset(off), expected(std::move(exp)) {}
};

struct FieldMismatch : Error {
    FieldMismatch() : Error("operands belong to different prime fields") {}
};

struct NotSquare : Error {
    NotSquare() : Error("matrix is not square") {}
};

struct SingularMatrix : Error {
    SingularMatrix() : Error("matrix is singular") {}
};

struct DimensionMismatch : Error {
    DimensionMismatch() : Error("incompatible dimensions") {}
};

struct BadDimensions : Error {
    BadDimensions() : Error("invalid block dimensions") {}
};

struct NotUnimodular : Error {
    NotUnimodular() : Error("lattice is not unimodular") {}
};

struct BadWeight : Error {
    BadWeight() : Error("weight vector entries must sum to zero") {}
};

struct DependentVectors : Error {
    DependentVectors() : Error("vectors are linearly dependent") {}
};

struct PrecisionTooLow : Error {
    PrecisionTooLow() : Error("requested precision is below the exactness threshold") {}
};

struct BadThreshold : Error {
    BadThreshold() : Error("threshold below the trivial range") {}
};

struct NotFoundAtCap : Error {
    int cap;
    explicit NotFoundAtCap(int c)
        : Error("no well-rounded shift within sup-norm cap " + std::to_string(c)), cap(c) {}
};

}  // namespace ffgeom
