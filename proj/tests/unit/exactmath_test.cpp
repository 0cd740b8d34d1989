#include <random>

#include "doctest.h"

#include "ratext/exactmath.hpp"
#include "support/oracles.hpp"

using namespace ratext::exact;

namespace {

const Rational kHalf(1, 2);

// z^2 + 2(1 - lambda) z + 1
Polynomial seed_222(const Rational& lambda) { return {Rational(1), Rational(2) * (Rational(1) - lambda), Rational(1)}; }

}  // namespace

TEST_CASE("rational stays in lowest terms with positive denominator") {
  const Rational r(6, -8);
  CHECK(r.str() == "-3/4");
  CHECK(Rational(10, 5).str() == "2");
  CHECK(Rational::parse("-12/18") == Rational(-2, 3));
  CHECK(Rational::parse("5").str() == "5");
  CHECK(Rational::parse_decimal("1.25") == Rational(5, 4));
  CHECK(Rational::parse_decimal("-0.5") == Rational(-1, 2));
  CHECK(Rational::parse_decimal("2e-3") == Rational(1, 500));
  CHECK(Rational::from_double(0.375) == Rational(3, 8));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse_decimal("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("poly_arith examples") {
  const Polynomial zp1{Rational(1), Rational(1)};
  const Polynomial zm1{Rational(-1), Rational(1)};
  CHECK(poly_arith(zp1, zm1, PolyOp::mul) == Polynomial{Rational(-1), Rational(0), Rational(1)});

  const Polynomial p = seed_222(kHalf);
  CHECK(poly_arith(p, Polynomial{}, PolyOp::add) == p);
  CHECK(poly_arith(p, p, PolyOp::sub).is_zero());

  // lambda = 1: (z^2 + 1)^2 = z^4 + 2 z^2 + 1
  const Polynomial q = seed_222(Rational(1));
  CHECK(poly_arith(q, q, PolyOp::mul) == Polynomial{Rational(1), Rational(0), Rational(2), Rational(0), Rational(1)});
}

TEST_CASE("canonical zero and degree") {
  const Polynomial zero{Rational(0), Rational(0)};
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK(zero == Polynomial{});
  CHECK(Polynomial{Rational(3), Rational(0), Rational(0)}.degree() == 0);
}

TEST_CASE("poly_diff examples") {
  const Rational lambda(7, 3);
  CHECK(seed_222(lambda).derivative() == Polynomial{Rational(2) * (Rational(1) - lambda), Rational(2)});
  CHECK(Polynomial::constant(Rational(5)).derivative().is_zero());
  const Polynomial sq = pow(Polynomial{Rational(1), Rational(1)}, 2) * Rational(1, 8);
  CHECK(sq.derivative() == Polynomial{Rational(1, 4), Rational(1, 4)});
}

TEST_CASE("poly_eval examples") {
  // p(-1) = 2 lambda at lambda = 1/2
  CHECK(seed_222(kHalf)(Rational(-1)) == Rational(1));
  const Polynomial p{Rational(7, 3), Rational(-2), Rational(9)};
  CHECK(p(Rational(0)) == Rational(7, 3));
  CHECK(Polynomial{Rational(-1), Rational(0), Rational(1)}(Rational(1)).is_zero());
}

TEST_CASE("poly_reflect examples") {
  const Rational lambda(3, 5);
  const Rational c = Rational(2) * (Rational(1) - lambda);
  CHECK(seed_222(lambda).reflect() == Polynomial{Rational(1), -c, Rational(1)});
  const Polynomial even{Rational(1), Rational(0), Rational(-4), Rational(0), Rational(2)};
  CHECK(even.reflect() == even);
  CHECK(Polynomial::monomial(Rational(1), 3).reflect() == Polynomial::monomial(Rational(-1), 3));
}

TEST_CASE("divmod and gcd") {
  const Polynomial a = Polynomial{Rational(-1), Rational(0), Rational(1)} * Polynomial{Rational(2), Rational(1)};
  const Polynomial b{Rational(-1), Rational(1)};
  const auto [q, r] = divmod(a, b);
  CHECK(r.is_zero());
  CHECK(q * b == a);
  CHECK(gcd(a, Polynomial{Rational(1), Rational(1)} * Rational(3)) == Polynomial{Rational(1), Rational(1)});
  CHECK(gcd(Polynomial{}, Polynomial{}).is_zero());
  CHECK_THROWS_AS(divmod(a, Polynomial{}), std::domain_error);
}

TEST_CASE("sturm_root_count examples") {
  const Rational lo(-1);
  const Rational hi(1);
  CHECK(sturm_root_count(Polynomial{Rational(1), Rational(1), Rational(1)}, lo, hi) == 0);
  CHECK(sturm_root_count(Polynomial{Rational(-1, 4), Rational(0), Rational(1)}, lo, hi) == 2);
  // z^2 - 4z + 1 has roots 2 +- sqrt(3); only 2 - sqrt(3) lies in (-1, 1).
  CHECK(sturm_root_count(seed_222(Rational(3)), lo, hi) == 1);
  // repeated roots count once
  CHECK(sturm_root_count(pow(Polynomial{Rational(-1, 3), Rational(1)}, 3), lo, hi) == 1);
  CHECK(sturm_root_count(Polynomial::constant(Rational(2)), lo, hi) == 0);
}

TEST_CASE("sturm_root_count errors") {
  CHECK_THROWS_AS(sturm_root_count(Polynomial{}, Rational(-1), Rational(1)), zero_polynomial_error);
  CHECK_THROWS_AS(sturm_root_count(Polynomial{Rational(-1), Rational(0), Rational(1)}, Rational(-1), Rational(1)),
                  endpoint_root_error);
  CHECK_THROWS_AS(sturm_root_count(Polynomial{Rational(1), Rational(1)}, Rational(1), Rational(-1)), std::domain_error);
}

TEST_CASE("rf_canonicalize examples") {
  const RationalFunction a = rf_canonicalize({Rational(-1), Rational(0), Rational(1)}, {Rational(-1), Rational(1)});
  CHECK(a.num() == Polynomial{Rational(1), Rational(1)});
  CHECK(a.den() == Polynomial::constant(Rational(1)));

  const RationalFunction zero = rf_canonicalize(Polynomial{}, {Rational(3), Rational(1)});
  CHECK(zero.is_zero());
  CHECK(zero.den() == Polynomial::constant(Rational(1)));

  const RationalFunction s = rf_canonicalize({Rational(2), Rational(2)}, Polynomial::constant(Rational(4)));
  CHECK(s.num() == Polynomial{kHalf, kHalf});
  CHECK(s.den() == Polynomial::constant(Rational(1)));

  CHECK_THROWS_AS(rf_canonicalize({Rational(1)}, Polynomial{}), zero_denominator_error);
}

TEST_CASE("rational function arithmetic is exact") {
  const RationalFunction f({Rational(1)}, {Rational(1), Rational(-1)});  // 1/(1-z)
  const RationalFunction g({Rational(1)}, {Rational(1), Rational(1)});   // 1/(1+z)
  const RationalFunction sum = f + g;                                    // 2/(1-z^2)
  CHECK(sum == RationalFunction({Rational(2)}, {Rational(1), Rational(0), Rational(-1)}));
  CHECK((sum - f - g).is_zero());
  CHECK((f * f.reciprocal()) == RationalFunction(Rational(1)));
  CHECK(f.derivative() == f * f);
  CHECK(sum(Rational(0)) == Rational(2));
  CHECK_THROWS_AS(static_cast<void>(f(Rational(1))), std::domain_error);
}

TEST_CASE("property: ring laws and Leibniz rule on random polynomials") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial a = ratext::testing::random_polynomial(rng, 8);
    const Polynomial b = ratext::testing::random_polynomial(rng, 8);
    const Polynomial c = ratext::testing::random_polynomial(rng, 8);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    CHECK(a.reflect().reflect() == a);
  }
}

TEST_CASE("property: canonicalization cancels common factors and is idempotent") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial p = ratext::testing::random_polynomial(rng, 6);
    Polynomial q = ratext::testing::random_polynomial(rng, 5);
    if (q.is_zero()) q = Polynomial::constant(Rational(1));
    const RationalFunction lhs = rf_canonicalize(p * q, q);
    CHECK(lhs == rf_canonicalize(p, Polynomial::constant(Rational(1))));
    CHECK(rf_canonicalize(lhs.num(), lhs.den()) == lhs);
    if (!lhs.is_zero()) CHECK(lhs.den().leading() == Rational(1));
  }
}

TEST_CASE("property: Sturm count dominates grid sign changes on random cubics and quartics") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> root_num(-95, 95);
  int exact_matches = 0;
  for (int trial = 0; trial < 100; ++trial) {
    // Build from known rational roots spread over (-1, 1) plus a random
    // quadratic factor, so the simple-root case is well represented.
    const int degree = 3 + trial % 2;
    Polynomial p = Polynomial::constant(Rational(1));
    std::vector<Rational> roots;
    for (int i = 0; i < degree - 2; ++i) {
      Rational r(root_num(rng), 97);
      roots.push_back(r);
      p *= Polynomial{-r, Rational(1)};
    }
    p *= Polynomial{Rational(root_num(rng), 50), Rational(root_num(rng), 60), Rational(1)};
    if (p(Rational(-1)).is_zero() || p(Rational(1)).is_zero()) continue;

    const int sturm = sturm_root_count(p, Rational(-1), Rational(1));
    const int scan = ratext::testing::grid_sign_changes(p, Rational(-1), Rational(1), 10000);
    CHECK(scan <= sturm);
    if (scan == sturm) ++exact_matches;
  }
  // The grid resolves almost every instance; a miss needs two roots within 2e-4.
  CHECK(exact_matches >= 90);
}
