// Arithmetic in GF(p) for word-sized odd primes. All coefficients used by the
// polynomial layers are canonical residues in [0, p).
#pragma once

#include <cstdint>

#include "sgb/errors.hpp"

namespace sgb {

// A canonical residue. Plain value type; the owning PrimeField supplies the
// modulus for every operation.
struct Fp {
  std::uint32_t v = 0;
  friend bool operator==(Fp, Fp) = default;
};

class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultModulus = 32003;

  // Verifies primality by trial division; requires 2 < p < 2^31.
  explicit PrimeField(std::uint32_t p = kDefaultModulus);

  std::uint32_t modulus() const { return p_; }

  Fp zero() const { return Fp{0}; }
  Fp one() const { return Fp{1}; }

  Fp add(Fp a, Fp b) const {
    std::uint32_t s = a.v + b.v;
    return Fp{s >= p_ ? s - p_ : s};
  }
  Fp sub(Fp a, Fp b) const { return Fp{a.v >= b.v ? a.v - b.v : a.v + p_ - b.v}; }
  Fp neg(Fp a) const { return Fp{a.v == 0 ? 0 : p_ - a.v}; }
  Fp mul(Fp a, Fp b) const {
    return Fp{static_cast<std::uint32_t>(std::uint64_t(a.v) * b.v % p_)};
  }

  // Inverse via extended Euclid; throws DivisionByZero on a = 0.
  Fp inv(Fp a) const;
  Fp div(Fp a, Fp b) const { return mul(a, inv(b)); }

  // Reduces an arbitrary signed integer to its canonical residue.
  Fp from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return Fp{static_cast<std::uint32_t>(r)};
  }

  static bool is_prime(std::uint32_t n);

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace sgb
