// Exception types shared across the library.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sgb {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero in prime field") {}
};

struct NotPrime : std::invalid_argument {
  explicit NotPrime(unsigned long p)
      : std::invalid_argument("modulus " + std::to_string(p) + " is not prime") {}
};

struct ZeroPolynomial : std::domain_error {
  ZeroPolynomial() : std::domain_error("leading term of the zero polynomial") {}
};

struct RingMismatch : std::invalid_argument {
  RingMismatch() : std::invalid_argument("operands live in different rings") {}
};

struct DimensionMismatch : std::invalid_argument {
  DimensionMismatch() : std::invalid_argument("monomials have different variable counts") {}
};

struct ExponentOverflow : std::overflow_error {
  ExponentOverflow() : std::overflow_error("monomial exponent exceeds 16-bit range") {}
};

struct NotHomogenized : std::invalid_argument {
  NotHomogenized()
      : std::invalid_argument("ring carries no homogenization variable to eliminate") {}
};

// Input-file syntax and semantic errors, with 1-based position info.
struct ParseError : std::runtime_error {
  std::size_t line;
  std::size_t column;
  ParseError(std::size_t ln, std::size_t col, const std::string& what)
      : std::runtime_error("line " + std::to_string(ln) + ", column " + std::to_string(col) +
                           ": " + what),
        line(ln),
        column(col) {}
};

}  // namespace sgb
