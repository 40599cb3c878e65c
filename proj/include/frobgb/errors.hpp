#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frobgb {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidModulus : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero in prime field") {}
};

struct ModulusMismatch : Error {
    ModulusMismatch() : Error("field elements have different moduli") {}
};

struct DimensionMismatch : Error {
    DimensionMismatch() : Error("monomials have different variable counts") {}
};

struct NotDivisible : Error {
    NotDivisible() : Error("monomial quotient is not exact") {}
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

struct Overflow : Error {
    Overflow() : Error("exponent arithmetic overflowed 64 bits") {}
};

struct CharMismatch : Error {
    CharMismatch() : Error("Frobenius prime differs from the coefficient characteristic") {}
};

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct NotComaximal : Error {
    NotComaximal() : Error("binomial pair does not generate the whole ring") {}
};

struct DomainNotCovered : Error {
    using Error::Error;
};

struct SameTypeUnsupported : Error {
    SameTypeUnsupported() : Error("generators of the same type are outside the transform's hypothesis") {}
};

struct UnknownFamily : Error {
    UnknownFamily(const std::string& name) : Error("unknown family: " + name) {}
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace frobgb
