#include "sgb/field.hpp"

namespace sgb {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p <= 2 || p >= (1u << 31) || !is_prime(p)) throw NotPrime(p);
}

bool PrimeField::is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Fp PrimeField::inv(Fp a) const {
  if (a.v == 0) throw DivisionByZero();
  // Extended Euclid on (p, a); invariant r = t * a (mod p).
  std::int64_t t0 = 0, t1 = 1;
  std::int64_t r0 = p_, r1 = a.v;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t2 = t0 - q * t1;
    std::int64_t r2 = r0 - q * r1;
    t0 = t1;
    t1 = t2;
    r0 = r1;
    r1 = r2;
  }
  if (t0 < 0) t0 += p_;
  return Fp{static_cast<std::uint32_t>(t0)};
}

}  // namespace sgb
