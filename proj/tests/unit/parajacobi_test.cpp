#include <vector>

#include "doctest.h"

#include "ratext/parajacobi.hpp"
#include "ratext/tdpt.hpp"
#include "support/oracles.hpp"

using namespace ratext::parajacobi;

namespace {

const Rational kHalf(1, 2);

const std::vector<Rational>& sweep_lambdas() {
  static const std::vector<Rational> v{Rational(-3), Rational(-1), Rational(-1, 2), kHalf, Rational(1), Rational(3)};
  return v;
}

std::vector<ParaJacobiIndex> valid_indices(int max_nm) {
  std::vector<ParaJacobiIndex> out;
  for (int N = 1; N <= max_nm; ++N)
    for (int M = 1; M <= max_nm; ++M)
      for (int n = 1; n < N + M; ++n)
        if (is_valid_index(n, N, M)) out.emplace_back(n, N, M);
  return out;
}

bool lambda_hits_boundary(const ParaJacobiIndex& idx, const Rational& lambda) {
  const Polynomial p = para_jacobi(idx, lambda);
  return p(Rational(-1)).is_zero() || p(Rational(1)).is_zero();
}

}  // namespace

TEST_CASE("index validation") {
  CHECK_NOTHROW(ParaJacobiIndex(2, 2, 2));
  auto violation_of = [](int n, int N, int M) {
    try {
      ParaJacobiIndex idx(n, N, M);
    } catch (const invalid_index& e) {
      return e.violation();
    }
    FAIL("expected invalid_index");
    return IndexViolation::nonpositive;
  };
  CHECK(violation_of(0, 2, 2) == IndexViolation::nonpositive);
  CHECK(violation_of(2, 0, 2) == IndexViolation::nonpositive);
  CHECK(violation_of(4, 2, 2) == IndexViolation::outside_polynomial_range);
  CHECK(violation_of(1, 2, 2) == IndexViolation::outside_polynomial_range);
  CHECK(violation_of(3, 2, 4) == IndexViolation::below_max_nm);
  CHECK(is_valid_index(3, 3, 2));
  CHECK_FALSE(is_valid_index(5, 3, 2));
  CHECK(ParaJacobiIndex(3, 3, 2).swapped() == ParaJacobiIndex(3, 2, 3));
}

TEST_CASE("theta examples") {
  const ParaJacobiIndex idx(2, 2, 2);
  CHECK(theta(idx, 1) == Polynomial{Rational(1, 8), Rational(1, 4), Rational(1, 8)});
  CHECK(theta(idx, 2) == Polynomial{Rational(0), -kHalf});
  CHECK(theta(idx, 2)(Rational(-1)) == kHalf);
  CHECK_THROWS_AS(theta(idx, 3), std::invalid_argument);
}

TEST_CASE("theta boundary values") {
  for (const auto& idx : valid_indices(5)) {
    CHECK(theta(idx, 1)(Rational(-1)).is_zero());
    const Rational expected = ratext::exact::factorial(idx.M() - 1) /
                              (ratext::exact::factorial(idx.N() + idx.M() - idx.n() - 1) *
                               ratext::exact::factorial(idx.n()));
    CHECK(theta(idx, 2)(Rational(-1)) == expected);
  }
}

TEST_CASE("para_jacobi examples") {
  const ParaJacobiIndex idx(2, 2, 2);
  for (const Rational& lambda : {Rational(0), kHalf, Rational(1), Rational(3, 2), Rational(-7, 3)})
    CHECK(para_jacobi(idx, lambda) == Polynomial{Rational(1), Rational(2) * (Rational(1) - lambda), Rational(1)});
  CHECK(para_jacobi(idx, Rational(0)) == pow(Polynomial{Rational(1), Rational(1)}, 2));

  const Rational l(5, 7);
  CHECK(para_jacobi(ParaJacobiIndex(3, 2, 2), l) ==
        Polynomial{Rational(-2) * (Rational(4) * l + Rational(1)), Rational(-3), Rational(0), Rational(1)});
  CHECK(para_jacobi(ParaJacobiIndex(3, 3, 2), l) ==
        Polynomial{(Rational(4) * l - Rational(15)) / Rational(3), Rational(4) * l - Rational(9), Rational(-3),
                   Rational(1)});
  CHECK(para_jacobi(ParaJacobiIndex(4, 3, 3), l) ==
        Polynomial{Rational(-3), Rational(-8) * (l + Rational(1)), Rational(-6), Rational(0), Rational(1)});
}

TEST_CASE("lambda transforms") {
  const Rational l(3, 5);
  CHECK(lambda_prime(2, 2, 2, l) == l / Rational(2));
  CHECK(lambda_prime(3, 2, 2, l).is_zero());
  CHECK(lambda_prime(4, 3, 3, l) == l / Rational(4));
  CHECK(lambda_double_prime(2, 2, 2, l).is_zero());
  CHECK(lambda_double_prime(4, 3, 3, l).is_zero());
  CHECK(lambda_double_prime(5, 3, 3, l).is_zero());
  CHECK(lambda_double_prime(4, 4, 3, l) == Rational(2 * 1, 12) * l);
  CHECK_THROWS_AS(lambda_double_prime(1, 1, 1, l), std::domain_error);

  const ParaJacobiIndex idx(2, 2, 2);
  CHECK(lambda_tilde(idx, l) == Rational(2) - l);
  CHECK(lambda_tilde(idx, Rational(1)) == Rational(1));
  for (const auto& i : valid_indices(5))
    for (const auto& lam : sweep_lambdas()) CHECK(lambda_tilde(i.swapped(), lambda_tilde(i, lam)) == lam);
}

TEST_CASE("lambda_threshold examples") {
  CHECK(lambda_threshold(ParaJacobiIndex(2, 2, 2)) == Rational(2));
  CHECK(lambda_threshold(ParaJacobiIndex(3, 2, 2)) == kHalf);
  CHECK(lambda_threshold(ParaJacobiIndex(4, 3, 3)) == Rational(2));
  CHECK(lambda_threshold(ParaJacobiIndex(3, 3, 2)) == Rational(3));
  for (const auto& idx : valid_indices(5)) CHECK(lambda_threshold(idx) > Rational(0));
}

TEST_CASE("nodeless_window examples") {
  using ER = ExtendedRational;
  const LambdaWindow w222 = nodeless_window(ParaJacobiIndex(2, 2, 2));
  CHECK(w222.window_case == WindowCase::ii);
  CHECK(w222.threshold == Rational(2));
  CHECK(w222.intervals == std::vector<Interval>{{ER::finite(Rational(0)), ER::finite(Rational(2))}});

  const LambdaWindow w322 = nodeless_window(ParaJacobiIndex(3, 2, 2));
  CHECK(w322.window_case == WindowCase::i);
  CHECK(w322.intervals == std::vector<Interval>{{ER::neg_inf(), ER::finite(-kHalf)}, {ER::finite(Rational(0)), ER::pos_inf()}});

  const LambdaWindow w332 = nodeless_window(ParaJacobiIndex(3, 3, 2));
  CHECK(w332.window_case == WindowCase::ii);
  CHECK(w332.intervals == std::vector<Interval>{{ER::finite(Rational(0)), ER::finite(Rational(3))}});

  CHECK(w222.contains(Rational(1)));
  CHECK_FALSE(w222.contains(Rational(2)));
  CHECK_FALSE(w222.contains(Rational(0)));
  CHECK(w322.contains(Rational(-100)));
  CHECK_FALSE(w322.contains(Rational(-1, 4)));
}

TEST_CASE("window structure invariants") {
  for (const auto& idx : valid_indices(5)) {
    const LambdaWindow w = nodeless_window(idx);
    for (const auto& iv : w.intervals) {
      for (const auto& e : {iv.lo, iv.hi})
        if (e.is_finite()) CHECK((e.value.is_zero() || abs(e.value) == w.threshold));
      // each interval sits on one side of 0
      const bool nonneg = iv.lo.is_finite() && iv.lo.value >= Rational(0);
      const bool nonpos = iv.hi.is_finite() && iv.hi.value <= Rational(0);
      CHECK((nonneg || nonpos));
    }
  }
}

TEST_CASE("is_nodeless examples") {
  const ParaJacobiIndex idx(2, 2, 2);
  CHECK(is_nodeless(idx, Rational(1)));
  CHECK_FALSE(is_nodeless(idx, Rational(3)));
  CHECK_FALSE(is_nodeless(idx, Rational(-1)));
  CHECK_THROWS_AS(is_nodeless(idx, Rational(0)), boundary_lambda_error);
  CHECK_THROWS_AS(is_nodeless(idx, Rational(2)), boundary_lambda_error);
}

TEST_CASE("boundary_values examples") {
  const Rational l(4, 9);
  const auto [left, right] = boundary_values(ParaJacobiIndex(2, 2, 2), l);
  CHECK(left == Rational(2) * l);
  CHECK(right == Rational(2) * (Rational(2) - l));
  CHECK(boundary_values(ParaJacobiIndex(3, 3, 2), Rational(0)).first.is_zero());
}

TEST_CASE("property: monic, degree n, solves the Jacobi ODE, matches the double sum") {
  for (const auto& idx : valid_indices(5))
    for (const auto& lambda : sweep_lambdas()) {
      const Polynomial p = para_jacobi(idx, lambda);
      CHECK(p.degree() == idx.n());
      CHECK(p.leading() == Rational(1));
      CHECK(ratext::tdpt::jacobi_ode_residual(p, Rational(idx.n()), {Rational(-idx.N()), Rational(-idx.M())}).is_zero());
      CHECK(para_jacobi_double_sum(idx, lambda) == p);
    }
}

TEST_CASE("property: derivative identity") {
  int checked = 0;
  for (const auto& idx : valid_indices(5)) {
    const int n = idx.n();
    const int N = idx.N();
    const int M = idx.M();
    if (N < 2 || M < 2 || !is_valid_index(n - 1, N - 1, M - 1)) continue;
    for (const auto& lambda : sweep_lambdas()) {
      const Polynomial lhs = para_jacobi(idx, lambda).derivative();
      const Polynomial rhs =
          Rational(n) * para_jacobi(ParaJacobiIndex(n - 1, N - 1, M - 1), lambda_prime(n, N, M, lambda));
      CHECK(lhs == rhs);
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("property: second derivative through the chain constructor") {
  for (const auto& idx : valid_indices(5)) {
    const int n = idx.n();
    if (n < 2 || idx.N() < 2 || idx.M() < 2) continue;
    for (const auto& lambda : sweep_lambdas()) {
      const Rational l2 = lambda_double_prime(n, idx.N(), idx.M(), lambda);
      CHECK(para_jacobi(idx, lambda).derivative().derivative() ==
            Rational(n * (n - 1)) * detail::para_jacobi_chain(n - 2, idx.N() - 2, idx.M() - 2, l2));
    }
  }
}

TEST_CASE("property: reflection identity") {
  for (const auto& idx : valid_indices(5))
    for (const auto& lambda : sweep_lambdas()) {
      const Rational sign = idx.n() % 2 == 0 ? Rational(1) : Rational(-1);
      CHECK(para_jacobi(idx, lambda).reflect() == sign * para_jacobi(idx.swapped(), lambda_tilde(idx, lambda)));
    }
}

TEST_CASE("property: boundary values match evaluation and sign(p(-1)) = (-1)^n sign(lambda)") {
  for (const auto& idx : valid_indices(5))
    for (const auto& lambda : sweep_lambdas()) {
      const Polynomial p = para_jacobi(idx, lambda);
      const auto [left, right] = boundary_values(idx, lambda);
      CHECK(left == p(Rational(-1)));
      CHECK(right == p(Rational(1)));
      CHECK(left.sign() == (idx.n() % 2 == 0 ? 1 : -1) * lambda.sign());
    }
}

TEST_CASE("property: Sturm oracle agrees with the parity window") {
  int probes = 0;
  for (const auto& idx : valid_indices(5)) {
    const LambdaWindow w = nodeless_window(idx);
    std::vector<Rational> lambdas;
    for (const auto& iv : w.intervals) {
      for (const auto& e : {iv.lo, iv.hi})
        if (e.is_finite()) {
          lambdas.push_back(e.value - Rational(1, 1000));
          lambdas.push_back(e.value + Rational(1, 1000));
        }
      for (const auto& x : interior_points(iv, 3, w.threshold)) lambdas.push_back(x);
    }
    for (const auto& lambda : lambdas) {
      if (lambda_hits_boundary(idx, lambda)) continue;
      CHECK_MESSAGE(is_nodeless(idx, lambda) == w.contains(lambda), idx.str(), " lambda=", lambda.str());
      // the grid scan can only under-count roots
      if (is_nodeless(idx, lambda))
        CHECK(ratext::testing::grid_sign_changes(para_jacobi(idx, lambda), Rational(-1), Rational(1), 2000) == 0);
      ++probes;
    }
  }
  CHECK(probes > 100);
}

TEST_CASE("interior_points stays inside") {
  using ER = ExtendedRational;
  const Interval finite{ER::finite(Rational(0)), ER::finite(Rational(2))};
  CHECK(interior_points(finite, 1, Rational(2)) == std::vector<Rational>{Rational(1)});
  const Interval left{ER::neg_inf(), ER::finite(-kHalf)};
  for (const auto& x : interior_points(left, 4, kHalf)) CHECK(left.contains(x));
  const Interval right{ER::finite(Rational(3)), ER::pos_inf()};
  CHECK(interior_points(right, 2, Rational(3)) == std::vector<Rational>{Rational(6), Rational(9)});
}

TEST_CASE("extended rational and case strings round-trip") {
  for (const auto& s : {"-inf", "+inf", "-1/2", "3"}) CHECK(ExtendedRational::parse(s).str() == s);
  for (auto c : {WindowCase::i, WindowCase::ii, WindowCase::iii, WindowCase::iv})
    CHECK(window_case_from_string(to_string(c)) == c);
  CHECK_THROWS(window_case_from_string("v"));
}
