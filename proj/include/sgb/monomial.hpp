// Monomials as inline exponent arrays with a cached total degree, plus the
// two supported monomial orderings. The inline cap keeps terms trivially
// copyable and monomial arithmetic allocation-free.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "sgb/errors.hpp"

namespace sgb {

enum class OrderKind { grevlex, lex };

// Degree-compatible means deg(a) < deg(b) implies a < b.
constexpr bool degree_compatible(OrderKind k) { return k == OrderKind::grevlex; }

struct TooManyVariables : std::invalid_argument {
  TooManyVariables() : std::invalid_argument("rings support at most 16 variables") {}
};

class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 16;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : nvars_(checked(nvars)) {}
  explicit Monomial(const std::vector<std::uint16_t>& exps) : nvars_(checked(exps.size())) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      exps_[i] = exps[i];
      deg_ += exps[i];
    }
  }

  std::size_t nvars() const { return nvars_; }
  std::uint32_t deg() const { return deg_; }
  std::uint16_t exp(std::size_t i) const { return exps_[i]; }
  std::vector<std::uint16_t> exps() const {
    return std::vector<std::uint16_t>(exps_.begin(), exps_.begin() + nvars_);
  }
  bool is_one() const { return deg_ == 0; }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  static std::uint8_t checked(std::size_t n) {
    if (n > kMaxVars) throw TooManyVariables();
    return static_cast<std::uint8_t>(n);
  }
  friend Monomial mono_mul(const Monomial&, const Monomial&);
  friend Monomial mono_lcm(const Monomial&, const Monomial&);
  friend std::optional<Monomial> mono_div(const Monomial&, const Monomial&);
  friend class MonomialBuilder;

  // Slots at and beyond nvars_ stay zero.
  std::array<std::uint16_t, kMaxVars> exps_{};
  std::uint8_t nvars_ = 0;
  std::uint32_t deg_ = 0;
};

// Mutable construction helper for generators and parsers.
class MonomialBuilder {
 public:
  explicit MonomialBuilder(std::size_t nvars) : m_(nvars) {}
  MonomialBuilder& raise(std::size_t var, std::uint32_t by);
  Monomial build() { return m_; }

 private:
  Monomial m_;
};

// Total-order comparison under the given ordering. grevlex: total degree
// first; ties scan from the last variable backwards, and the monomial with
// the smaller exponent at the first difference is the larger one.
std::strong_ordering mono_cmp(const Monomial& a, const Monomial& b, OrderKind k);

Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_lcm(const Monomial& a, const Monomial& b);

// Componentwise difference; nullopt when some component would go negative
// (a failed divisibility test, not a fault).
std::optional<Monomial> mono_div(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& d, const Monomial& m);

}  // namespace sgb
