// Sparse polynomials over GF(p): strictly descending term lists under the
// ring's monomial ordering, never a zero coefficient. The zero polynomial is
// the empty list and has degree -1.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sgb/field.hpp"
#include "sgb/monomial.hpp"

namespace sgb {

// Shared context for all polynomials of a computation. Cheap value type.
// `homogenized` marks rings whose last variable is the homogenization
// variable (always the ordering-smallest one under grevlex).
struct Ring {
  std::size_t nvars = 0;
  PrimeField field{PrimeField::kDefaultModulus};
  OrderKind order = OrderKind::grevlex;
  bool homogenized = false;

  friend bool operator==(const Ring&, const Ring&) = default;
};

struct Term {
  Monomial mono;
  Fp coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  // Normalizes an arbitrary term soup: sorts descending, merges equal
  // monomials mod p, drops zero coefficients.
  static Polynomial from_terms(const Ring& ring, std::vector<Term> terms);

  // Trusted constructor for term lists already in normal form (strictly
  // descending, nonzero coefficients). Validated in debug builds only.
  static Polynomial from_sorted_terms(Ring ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Max total degree over all terms; -1 for the zero polynomial.
  std::int32_t deg() const;

  // Leading data; throws ZeroPolynomial on the zero polynomial.
  const Term& lt() const;
  const Monomial& lm() const { return lt().mono; }
  Fp lc() const { return lt().coeff; }

  Polynomial monic() const;
  Polynomial scaled(Fp c) const;

  // True when every term has the same total degree (vacuously for 0).
  bool is_homogeneous() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  friend Polynomial poly_axpy(const Polynomial& r, Fp c, const Monomial& t,
                              const Polynomial& g);
  friend Polynomial term_times(const Polynomial& p, Fp c, const Monomial& t);
  Ring ring_;
  std::vector<Term> terms_;
};

// Returns r - c*t*g with terms merged and cancellations removed.
Polynomial poly_axpy(const Polynomial& r, Fp c, const Monomial& t, const Polynomial& g);

// The merge kernel behind poly_axpy: [ri, re) - c*t*g over a sorted term
// range. Reduction loops use it to rewrite only the tail of their working
// polynomial.
std::vector<Term> axpy_merge(const Ring& ring, const Term* ri, const Term* re, Fp c,
                             const Monomial& t, const Polynomial& g);

// Returns c*t*p. Multiplicativity of the ordering keeps the term list sorted.
Polynomial term_times(const Polynomial& p, Fp c, const Monomial& t);

// Structural invariant check (sorted strictly descending, no zero
// coefficients, degree caches consistent). Used by tests and debug builds.
bool poly_valid(const Polynomial& p);

// Pads every term of every input to the polynomial's top degree using a new
// last variable, which grevlex makes smaller than all the others. The output
// ring has nvars+1 and is flagged homogenized.
std::vector<Polynomial> homogenize(const std::vector<Polynomial>& fs);

// Sets the homogenization variable to 1 and drops it; throws NotHomogenized
// when the ring carries no marker variable.
std::vector<Polynomial> dehomogenize(const std::vector<Polynomial>& gs);

}  // namespace sgb
