// Shared test builders and the independent term-multiset oracle used to
// cross-check axpy and s-polynomial construction.
#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <vector>

#include "sgb/polynomial.hpp"

namespace sgbtest {

inline sgb::Monomial mono(std::initializer_list<std::uint16_t> exps) {
  return sgb::Monomial(std::vector<std::uint16_t>(exps));
}

struct TermSpec {
  long long coeff;
  std::initializer_list<std::uint16_t> exps;
};

inline sgb::Polynomial poly(const sgb::Ring& ring, std::initializer_list<TermSpec> ts) {
  std::vector<sgb::Term> terms;
  for (const auto& t : ts)
    terms.push_back({sgb::Monomial(std::vector<std::uint16_t>(t.exps)),
                     ring.field.from_int(t.coeff)});
  return sgb::Polynomial::from_terms(ring, std::move(terms));
}

// Exponent-vector keyed coefficient map; a brute-force polynomial
// representation independent of the sorted term list implementation.
using TermMap = std::map<std::vector<std::uint16_t>, std::uint32_t>;

inline TermMap to_map(const sgb::Polynomial& p) {
  TermMap m;
  for (const auto& t : p.terms()) m[t.mono.exps()] = t.coeff.v;
  return m;
}

// r - c*t*g computed naively over the map representation.
inline TermMap axpy_oracle(const sgb::Polynomial& r, sgb::Fp c, const sgb::Monomial& t,
                           const sgb::Polynomial& g) {
  const sgb::PrimeField& F = r.ring().field;
  TermMap m = to_map(r);
  for (const auto& term : g.terms()) {
    std::vector<std::uint16_t> e = term.mono.exps();
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += t.exp(i);
    sgb::Fp delta = F.neg(F.mul(c, term.coeff));
    auto it = m.find(e);
    sgb::Fp cur = it == m.end() ? F.zero() : sgb::Fp{it->second};
    sgb::Fp next = F.add(cur, delta);
    if (next == F.zero())
      m.erase(e);
    else
      m[e] = next.v;
  }
  return m;
}

}  // namespace sgbtest
