// Signatures t*e_i of module elements and the two module orderings used to
// compare them: position-over-term and the Schreyer ordering induced by the
// leading monomials of the input generators.
#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "sgb/monomial.hpp"

namespace sgb {

// Module indices are 0-based internally.
struct Signature {
  Monomial mono;
  std::uint32_t idx = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

enum class SigOrderKind { pot, schreyer };

struct SigOrderSpec {
  SigOrderKind kind = SigOrderKind::pot;
  OrderKind base = OrderKind::grevlex;
  // lm(f_i) per generator; required (and only consulted) for Schreyer.
  std::vector<Monomial> lead_of_gen;
};

// POT: index decides, then the term under the base ordering. Schreyer:
// compares t_i*lm(f_i) against t_j*lm(f_j) under the base ordering, ties
// broken by the smaller index being smaller.
std::strong_ordering sig_cmp(const Signature& a, const Signature& b, const SigOrderSpec& spec);

// Same index and componentwise divisibility of the terms.
bool sig_divides(const Signature& d, const Signature& s);

Signature sig_mul(const Monomial& t, const Signature& s);

}  // namespace sgb
