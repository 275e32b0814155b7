#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "sgb/polynomial.hpp"

using namespace sgb;
using sgbtest::poly;

namespace {
const Ring R7{2, PrimeField(7), OrderKind::grevlex, false};
}

TEST_CASE("from_terms normalizes") {
  // 2x + 5x merges to zero over GF(7).
  Polynomial z = poly(R7, {{2, {1, 0}}, {5, {1, 0}}});
  CHECK(z.is_zero());
  CHECK(z.deg() == -1);

  Polynomial p = poly(R7, {{1, {0, 1}}, {1, {2, 0}}, {3, {0, 1}}});
  CHECK(p.term_count() == 2);
  CHECK(p.lm() == sgbtest::mono({2, 0}));
  CHECK(poly_valid(p));
}

TEST_CASE("leading data") {
  Polynomial p = poly(R7, {{1, {2, 0}}, {-1, {0, 1}}});  // x^2 - y
  CHECK(p.lm() == sgbtest::mono({2, 0}));
  CHECK(p.lc() == Fp{1});

  Ring lexring{2, PrimeField(7), OrderKind::lex, false};
  Polynomial q = poly(lexring, {{3, {0, 1}}, {1, {1, 0}}});  // 3y + x
  CHECK(q.lm() == sgbtest::mono({1, 0}));

  CHECK_THROWS_AS(Polynomial(R7).lt(), ZeroPolynomial);
}

TEST_CASE("axpy worked examples") {
  // (xy - 1) - 1*1*(xy - 1) = 0
  Polynomial f = poly(R7, {{1, {1, 1}}, {-1, {0, 0}}});
  CHECK(poly_axpy(f, Fp{1}, Monomial(2), f).is_zero());

  // (x^2 - y) - 1*x*(x - 1) = x - y over GF(7)
  Polynomial r = poly(R7, {{1, {2, 0}}, {-1, {0, 1}}});
  Polynomial g = poly(R7, {{1, {1, 0}}, {-1, {0, 0}}});
  Polynomial expect = poly(R7, {{1, {1, 0}}, {-1, {0, 1}}});
  Polynomial got = poly_axpy(r, Fp{1}, sgbtest::mono({1, 0}), g);
  CHECK(got == expect);
  CHECK(sgbtest::to_map(got) == sgbtest::axpy_oracle(r, Fp{1}, sgbtest::mono({1, 0}), g));

  // 0 - 3*y*x = -3xy, i.e. coefficient p-3
  Polynomial x = poly(R7, {{1, {1, 0}}});
  Polynomial got2 = poly_axpy(Polynomial(R7), Fp{3}, sgbtest::mono({0, 1}), x);
  CHECK(got2 == poly(R7, {{-3, {1, 1}}}));
  CHECK(got2.lc() == Fp{4});
}

TEST_CASE("axpy agrees with the term-multiset oracle on random inputs") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> coeff(0, 6);
  std::uniform_int_distribution<int> expd(0, 4);
  std::uniform_int_distribution<int> nterms(0, 8);
  auto random_poly = [&] {
    std::vector<Term> ts;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i)
      ts.push_back({sgb::Monomial(std::vector<std::uint16_t>{
                        static_cast<std::uint16_t>(expd(rng)),
                        static_cast<std::uint16_t>(expd(rng))}),
                    Fp{static_cast<std::uint32_t>(coeff(rng))}});
    return Polynomial::from_terms(R7, std::move(ts));
  };
  for (int iter = 0; iter < 2000; ++iter) {
    Polynomial r = random_poly();
    Polynomial g = random_poly();
    Fp c{static_cast<std::uint32_t>(coeff(rng))};
    Monomial t(std::vector<std::uint16_t>{static_cast<std::uint16_t>(expd(rng)),
                                          static_cast<std::uint16_t>(expd(rng))});
    Polynomial got = poly_axpy(r, c, t, g);
    CHECK(poly_valid(got));
    CHECK(sgbtest::to_map(got) == sgbtest::axpy_oracle(r, c, t, g));
  }
}

TEST_CASE("homogenize worked examples") {
  Polynomial p = poly(R7, {{1, {2, 0}}, {-1, {0, 1}}});  // x^2 - y
  auto H = homogenize({p});
  REQUIRE(H.size() == 1);
  CHECK(H[0].ring().nvars == 3);
  CHECK(H[0].ring().homogenized);
  Ring R3 = H[0].ring();
  CHECK(H[0] == poly(R3, {{1, {2, 0, 0}}, {-1, {0, 1, 1}}}));  // x^2 - y*h

  auto back = dehomogenize(H);
  REQUIRE(back.size() == 1);
  CHECK(back[0] == p);

  Polynomial q = poly(R7, {{1, {1, 0}}, {1, {0, 0}}});  // x + 1
  auto Hq = homogenize({q});
  CHECK(Hq[0] == poly(R3, {{1, {1, 0, 0}}, {1, {0, 0, 1}}}));  // x + h
}

TEST_CASE("dehomogenize requires a marker variable") {
  Polynomial p = poly(R7, {{1, {1, 0}}});
  CHECK_THROWS_AS(dehomogenize({p}), NotHomogenized);
}

TEST_CASE("homogenize round trip and homogeneity on random inputs") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> coeff(1, 6);
  std::uniform_int_distribution<int> expd(0, 3);
  std::uniform_int_distribution<int> nterms(1, 6);
  for (int iter = 0; iter < 2000; ++iter) {
    std::vector<Term> ts;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i)
      ts.push_back({sgb::Monomial(std::vector<std::uint16_t>{
                        static_cast<std::uint16_t>(expd(rng)),
                        static_cast<std::uint16_t>(expd(rng)),
                        static_cast<std::uint16_t>(expd(rng))}),
                    Fp{static_cast<std::uint32_t>(coeff(rng))}});
    Ring R3{3, PrimeField(7), OrderKind::grevlex, false};
    Polynomial f = Polynomial::from_terms(R3, std::move(ts));
    auto H = homogenize({f});
    CHECK(H[0].is_homogeneous());
    if (!f.is_zero()) CHECK(H[0].deg() == f.deg());
    CHECK(dehomogenize(H)[0] == f);
  }
}
