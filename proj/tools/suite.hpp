#pragma once

// Verification suites shared by `ratext verify` and the acceptance runner.

#include <map>
#include <string>
#include <vector>

#include "ratext/exactmath.hpp"
#include "ratext/numverify.hpp"
#include "ratext/parajacobi.hpp"

namespace ratext::cli {

struct Failure {
  std::string check;
  parajacobi::ParaJacobiIndex index;
  exact::Rational lambda;
  int level = 0;  // only meaningful for per-level checks
  std::string detail;
};

struct SuiteReport {
  std::map<std::string, int> checks_run;  // by check name
  std::vector<Failure> failures;

  [[nodiscard]] int total() const;
  [[nodiscard]] int failures_in(const std::string& check) const;
  [[nodiscard]] bool passed() const { return failures.empty(); }
};

/// Indices with N, M in [2, max_nm] and max(N, M) <= n < N + M.
std::vector<parajacobi::ParaJacobiIndex> extendable_indices(int max_nm);

/// Three interior points per window interval.
std::vector<exact::Rational> window_sample(const parajacobi::ParaJacobiIndex& idx);

/// Exact identities over the sweep:
///   jacobi_ode, derivative, reflection, boundary_values,
///   potential_forms, schrodinger_residual (k = -(n+1), 0..3), wronskian.
SuiteReport exact_identity_suite(int max_nm);

/// Sturm count against window membership at every finite endpoint +- 1/1000
/// and one midpoint per interval.
SuiteReport window_oracle_suite(int max_nm);

/// Largest relative error of the Gauss-Jacobi rule for (1-z)^a (1+z)^b z^d,
/// d <= max_degree, against exact Beta moments.
double quadrature_self_test(int a, int b, int order, int max_degree);

struct NumericReport {
  double quadrature_error = 0.0;
  bool quadrature_passed = false;
  numverify::GramMatrix gram;
  int quadrature_order = 0;
  bool gram_passed = false;
  numverify::StateAddingCheck fd;

  [[nodiscard]] bool passed() const { return quadrature_passed && gram_passed && fd.passed; }
};

NumericReport numeric_suite(const parajacobi::ParaJacobiIndex& idx, const exact::Rational& lambda, int kmax,
                            int quad_order, int grid_points, const numverify::Tolerances& tol);

}  // namespace ratext::cli
