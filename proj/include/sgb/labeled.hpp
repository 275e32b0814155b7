// Labeled polynomials, critical pairs, known-syzygy signatures, and the
// sig-safe reduction procedure.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sgb/polynomial.hpp"
#include "sgb/signature.hpp"
#include "sgb/stats.hpp"

namespace sgb {

struct LabeledPolynomial {
  Signature sig;
  Polynomial poly;
  // Tracked sugar degree of poly; >= deg(poly) whenever poly != 0.
  std::int32_t sugar = 0;
  // deg(f_idx), cached so sigdeg needs no lookup.
  std::int32_t gen_deg = 0;
  // Position of this element's signature in the per-index rule list
  // (f5 rewriter flavor); set on basis insertion.
  std::uint32_t rule_pos = 0;
};

// sigdeg(t*e_i, p) = deg(t) + deg(f_i).
inline std::int32_t sigdeg(const LabeledPolynomial& f) {
  return static_cast<std::int32_t>(f.sig.mono.deg()) + f.gen_deg;
}

// Sugar bookkeeping: multiplication adds the multiplier degree, sums take
// the max.
inline std::int32_t sugar_of_mul(const Monomial& t, std::int32_t sugar) {
  return static_cast<std::int32_t>(t.deg()) + sugar;
}
inline std::int32_t sugar_of_sum(std::int32_t a, std::int32_t b) { return a < b ? b : a; }

struct CriticalPair {
  std::uint32_t i = 0;  // entered the basis later
  std::uint32_t j = 0;
  Monomial lcm;
  Monomial u_i;  // lcm / lm(basis[i])
  Monomial u_j;  // lcm / lm(basis[j])
  Signature pair_sig;
  // Which side carries pair_sig (the larger multiplied signature).
  bool sig_from_i = true;
  std::int32_t pair_deg = 0;
  std::int32_t sig_deg = 0;
  std::int32_t sugar = 0;
  std::uint64_t entry_seq = 0;
};

// Builds the pair of basis[i] and basis[j]; nullopt when the two multiplied
// signatures coincide (the pair is non-minimal and never enters the queue).
std::optional<CriticalPair> make_pair(std::uint32_t i, std::uint32_t j,
                                      const std::vector<LabeledPolynomial>& basis,
                                      const SigOrderSpec& spec);

// spol(f,g) = lc(g)*u_f*poly(f) - lc(f)*u_g*poly(g), labeled with the pair
// signature and the pair sugar.
LabeledPolynomial spoly(const CriticalPair& pair, const std::vector<LabeledPolynomial>& basis);

struct ReduceOptions {
  // Continue below the leading term once it is irreducible.
  bool tail_reduce = true;
  // Experimental: try reducers in ascending signature order instead of
  // basis insertion order.
  bool sort_reducers_by_sig = false;
};

// Repeatedly cancels the current working term with the first basis element g
// whose lead divides it and whose multiplied signature stays strictly below
// sig(f). The signature field is never touched; reducers rejected purely by
// the signature condition bump stats.higher_sig_detections.
LabeledPolynomial sig_safe_reduce(const LabeledPolynomial& f,
                                  const std::vector<LabeledPolynomial>& basis,
                                  const SigOrderSpec& spec, const ReduceOptions& opt,
                                  RunStats& stats);

// True iff some h in G divides r in both coordinates: sig(h) | sig(r) and
// lm(h) | lm(r).
bool is_sig_redundant(const LabeledPolynomial& r, const std::vector<LabeledPolynomial>& basis);

// Leading monomials of syzygies known so far: the Koszul signatures of the
// input plus every signature that reduced to zero.
class SyzygySet {
 public:
  void add(Signature s) { sigs_.push_back(std::move(s)); }
  bool divides_some(const Signature& s) const {
    for (const auto& d : sigs_)
      if (sig_divides(d, s)) return true;
    return false;
  }
  const std::vector<Signature>& sigs() const { return sigs_; }

 private:
  std::vector<Signature> sigs_;
};

}  // namespace sgb
