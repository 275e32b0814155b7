#include "sgb/polynomial.hpp"

#include <algorithm>

namespace sgb {

Polynomial Polynomial::from_terms(const Ring& ring, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return mono_cmp(a.mono, b.mono, ring.order) == std::strong_ordering::greater;
  });
  Polynomial p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = ring.field.add(p.terms_.back().coeff, t.coeff);
      if (p.terms_.back().coeff == ring.field.zero()) p.terms_.pop_back();
    } else if (!(t.coeff == ring.field.zero())) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

std::int32_t Polynomial::deg() const {
  std::int32_t d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<std::int32_t>(t.mono.deg()));
  return d;
}

const Term& Polynomial::lt() const {
  if (terms_.empty()) throw ZeroPolynomial();
  return terms_.front();
}

Polynomial Polynomial::monic() const {
  if (is_zero() || lc() == ring_.field.one()) return *this;
  return scaled(ring_.field.inv(lc()));
}

Polynomial Polynomial::scaled(Fp c) const {
  if (c == ring_.field.zero()) return Polynomial(ring_);
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono, ring_.field.mul(t.coeff, c)});
  return p;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.deg() != terms_.front().mono.deg()) return false;
  return true;
}

Polynomial Polynomial::from_sorted_terms(Ring ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
#ifndef NDEBUG
  if (!poly_valid(p)) throw std::logic_error("from_sorted_terms given an invalid term list");
#endif
  return p;
}

std::vector<Term> axpy_merge(const Ring& ring, const Term* ri, const Term* re, Fp c,
                             const Monomial& t, const Polynomial& g) {
  const PrimeField& F = ring.field;
  std::vector<Term> out;
  out.reserve(static_cast<std::size_t>(re - ri) + g.term_count());
  auto gi = g.terms().begin(), ge = g.terms().end();
  while (ri != re && gi != ge) {
    Monomial gm = mono_mul(t, gi->mono);
    auto ord = mono_cmp(ri->mono, gm, ring.order);
    if (ord == std::strong_ordering::greater) {
      out.push_back(*ri++);
    } else if (ord == std::strong_ordering::less) {
      out.push_back({std::move(gm), F.neg(F.mul(c, gi->coeff))});
      ++gi;
    } else {
      Fp v = F.sub(ri->coeff, F.mul(c, gi->coeff));
      if (!(v == F.zero())) out.push_back({ri->mono, v});
      ++ri;
      ++gi;
    }
  }
  for (; ri != re; ++ri) out.push_back(*ri);
  for (; gi != ge; ++gi) out.push_back({mono_mul(t, gi->mono), F.neg(F.mul(c, gi->coeff))});
  return out;
}

Polynomial poly_axpy(const Polynomial& r, Fp c, const Monomial& t, const Polynomial& g) {
  if (!(r.ring() == g.ring())) throw RingMismatch();
  if (c == r.ring().field.zero()) return r;
  Polynomial out(r.ring());
  out.terms_ = axpy_merge(r.ring(), r.terms().data(), r.terms().data() + r.term_count(), c, t, g);
#ifndef NDEBUG
  if (!poly_valid(out)) throw std::logic_error("poly_axpy produced an invalid term list");
#endif
  return out;
}

Polynomial term_times(const Polynomial& p, Fp c, const Monomial& t) {
  const PrimeField& F = p.ring().field;
  if (c == F.zero()) return Polynomial(p.ring());
  Polynomial out(p.ring());
  out.terms_.reserve(p.term_count());
  for (const auto& term : p.terms())
    out.terms_.push_back({mono_mul(t, term.mono), F.mul(c, term.coeff)});
  return out;
}

bool poly_valid(const Polynomial& p) {
  for (std::size_t i = 0; i < p.term_count(); ++i) {
    const Term& t = p.terms()[i];
    if (t.coeff == p.ring().field.zero()) return false;
    if (t.mono.nvars() != p.ring().nvars) return false;
    std::uint32_t d = 0;
    for (std::size_t k = 0; k < t.mono.nvars(); ++k) d += t.mono.exp(k);
    if (d != t.mono.deg()) return false;
    if (i > 0 && mono_cmp(p.terms()[i - 1].mono, t.mono, p.ring().order) !=
                     std::strong_ordering::greater)
      return false;
  }
  return true;
}

std::vector<Polynomial> homogenize(const std::vector<Polynomial>& fs) {
  std::vector<Polynomial> out;
  out.reserve(fs.size());
  for (const auto& f : fs) {
    Ring ext = f.ring();
    ext.nvars += 1;
    ext.homogenized = true;
    std::vector<Term> terms;
    terms.reserve(f.term_count());
    const std::int32_t top = f.deg();
    for (const auto& t : f.terms()) {
      std::vector<std::uint16_t> e = t.mono.exps();
      e.push_back(static_cast<std::uint16_t>(top - static_cast<std::int32_t>(t.mono.deg())));
      terms.push_back({Monomial(e), t.coeff});
    }
    out.push_back(Polynomial::from_terms(ext, std::move(terms)));
  }
  return out;
}

std::vector<Polynomial> dehomogenize(const std::vector<Polynomial>& gs) {
  std::vector<Polynomial> out;
  out.reserve(gs.size());
  for (const auto& g : gs) {
    if (!g.ring().homogenized || g.ring().nvars == 0) throw NotHomogenized();
    Ring base = g.ring();
    base.nvars -= 1;
    base.homogenized = false;
    std::vector<Term> terms;
    terms.reserve(g.term_count());
    for (const auto& t : g.terms()) {
      std::vector<std::uint16_t> e = t.mono.exps();
      e.pop_back();
      terms.push_back({Monomial(e), t.coeff});
    }
    out.push_back(Polynomial::from_terms(base, std::move(terms)));
  }
  return out;
}

}  // namespace sgb
