#include "sgb/labeled.hpp"

#include <algorithm>

#include "sgb/geobucket.hpp"

namespace sgb {

std::optional<CriticalPair> make_pair(std::uint32_t i, std::uint32_t j,
                                      const std::vector<LabeledPolynomial>& basis,
                                      const SigOrderSpec& spec) {
  const LabeledPolynomial& f = basis[i];
  const LabeledPolynomial& g = basis[j];
  CriticalPair p;
  p.i = i;
  p.j = j;
  p.lcm = mono_lcm(f.poly.lm(), g.poly.lm());
  p.u_i = *mono_div(p.lcm, f.poly.lm());
  p.u_j = *mono_div(p.lcm, g.poly.lm());
  Signature si = sig_mul(p.u_i, f.sig);
  Signature sj = sig_mul(p.u_j, g.sig);
  auto ord = sig_cmp(si, sj, spec);
  if (ord == std::strong_ordering::equal) return std::nullopt;  // non-minimal
  p.sig_from_i = ord == std::strong_ordering::greater;
  p.pair_sig = p.sig_from_i ? std::move(si) : std::move(sj);
  p.pair_deg = static_cast<std::int32_t>(p.lcm.deg());
  p.sig_deg = p.sig_from_i ? sugar_of_mul(p.u_i, sigdeg(f)) : sugar_of_mul(p.u_j, sigdeg(g));
  p.sugar = sugar_of_sum(sugar_of_mul(p.u_i, f.sugar), sugar_of_mul(p.u_j, g.sugar));
  return p;
}

LabeledPolynomial spoly(const CriticalPair& pair, const std::vector<LabeledPolynomial>& basis) {
  // spol(f,g) with f the earlier basis element (index j) and g the later
  // one, matching the pair construction order.
  const LabeledPolynomial& f = basis[pair.j];
  const LabeledPolynomial& g = basis[pair.i];
  Polynomial lhs = term_times(f.poly, g.poly.lc(), pair.u_j);
  Polynomial res = poly_axpy(lhs, f.poly.lc(), pair.u_i, g.poly);

  LabeledPolynomial out;
  out.sig = pair.pair_sig;
  out.poly = std::move(res);
  out.sugar = pair.sugar;
  out.gen_deg = pair.sig_from_i ? g.gen_deg : f.gen_deg;
  return out;
}

LabeledPolynomial sig_safe_reduce(const LabeledPolynomial& f,
                                  const std::vector<LabeledPolynomial>& basis,
                                  const SigOrderSpec& spec, const ReduceOptions& opt,
                                  RunStats& stats) {
  LabeledPolynomial out = f;
  if (out.poly.is_zero()) return out;

  std::vector<std::uint32_t> order(basis.size());
  for (std::uint32_t k = 0; k < basis.size(); ++k) order[k] = k;
  if (opt.sort_reducers_by_sig) {
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      return sig_cmp(basis[a].sig, basis[b].sig, spec) == std::strong_ordering::less;
    });
  }

  const Ring& ring = out.poly.ring();
  Geobucket work(ring, out.poly.terms());
  std::vector<Term> done;  // frozen terms, strictly descending
  std::int32_t sugar = out.sugar;

  while (auto lead = work.pop_lead()) {
    bool stepped = false;
    for (std::uint32_t k : order) {
      const LabeledPolynomial& g = basis[k];
      if (g.poly.is_zero()) continue;
      if (!mono_divides(g.poly.lm(), lead->mono)) continue;
      Monomial t = *mono_div(lead->mono, g.poly.lm());
      if (sig_cmp(sig_mul(t, g.sig), out.sig, spec) != std::strong_ordering::less) {
        // Divisor fits but the multiplied signature is too large.
        ++stats.higher_sig_detections;
        continue;
      }
      // The reducer's leading term cancels the popped lead; only its tail
      // enters the bucket. Every added monomial is strictly below the
      // cancelled one, so the working lead strictly decreases per step.
      Fp c = g.poly.lc() == ring.field.one() ? lead->coeff
                                             : ring.field.div(lead->coeff, g.poly.lc());
      work.sub_mul(c, t, g.poly.terms().data() + 1,
                   g.poly.terms().data() + g.poly.term_count());
      ++stats.reduction_steps;
      sugar = sugar_of_sum(sugar, sugar_of_mul(t, g.sugar));
      stepped = true;
      break;
    }
    if (!stepped) {
      done.push_back(std::move(*lead));
      if (!opt.tail_reduce) {
        auto rest = work.drain();
        done.insert(done.end(), rest.begin(), rest.end());
        break;
      }
    }
  }

  out.poly = Polynomial::from_sorted_terms(ring, std::move(done));
  out.sugar = sugar;
  return out;
}

bool is_sig_redundant(const LabeledPolynomial& r,
                      const std::vector<LabeledPolynomial>& basis) {
  for (const auto& h : basis) {
    if (h.poly.is_zero()) continue;
    if (sig_divides(h.sig, r.sig) && mono_divides(h.poly.lm(), r.poly.lm())) return true;
  }
  return false;
}

}  // namespace sgb
