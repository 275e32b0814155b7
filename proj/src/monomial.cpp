#include "sgb/monomial.hpp"

#include <algorithm>

namespace sgb {

namespace {
void check_dims(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw DimensionMismatch();
}
}  // namespace

MonomialBuilder& MonomialBuilder::raise(std::size_t var, std::uint32_t by) {
  std::uint32_t e = m_.exps_[var] + by;
  if (e > 0xFFFF) throw ExponentOverflow();
  m_.exps_[var] = static_cast<std::uint16_t>(e);
  m_.deg_ += by;
  return *this;
}

std::strong_ordering mono_cmp(const Monomial& a, const Monomial& b, OrderKind k) {
  check_dims(a, b);
  if (k == OrderKind::grevlex) {
    if (a.deg() != b.deg()) return a.deg() <=> b.deg();
    for (std::size_t i = a.nvars(); i-- > 0;) {
      if (a.exp(i) != b.exp(i))
        return a.exp(i) < b.exp(i) ? std::strong_ordering::greater
                                   : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a.exp(i) != b.exp(i)) return a.exp(i) <=> b.exp(i);
  return std::strong_ordering::equal;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  check_dims(a, b);
  Monomial r(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    std::uint32_t e = std::uint32_t(a.exps_[i]) + b.exps_[i];
    if (e > 0xFFFF) throw ExponentOverflow();
    r.exps_[i] = static_cast<std::uint16_t>(e);
  }
  r.deg_ = a.deg_ + b.deg_;
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  check_dims(a, b);
  Monomial r(a.nvars());
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    d += r.exps_[i];
  }
  r.deg_ = d;
  return r;
}

std::optional<Monomial> mono_div(const Monomial& a, const Monomial& b) {
  check_dims(a, b);
  Monomial r(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (a.exps_[i] < b.exps_[i]) return std::nullopt;
    r.exps_[i] = static_cast<std::uint16_t>(a.exps_[i] - b.exps_[i]);
  }
  r.deg_ = a.deg_ - b.deg_;
  return r;
}

bool mono_divides(const Monomial& d, const Monomial& m) {
  check_dims(d, m);
  if (d.deg() > m.deg()) return false;
  for (std::size_t i = 0; i < d.nvars(); ++i)
    if (d.exp(i) > m.exp(i)) return false;
  return true;
}

}  // namespace sgb
