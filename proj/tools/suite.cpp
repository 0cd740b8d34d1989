#include "suite.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "ratext/extension.hpp"
#include "ratext/tdpt.hpp"

namespace ratext::cli {

using exact::Polynomial;
using exact::Rational;
using parajacobi::ParaJacobiIndex;

int SuiteReport::total() const {
  int n = 0;
  for (const auto& [name, count] : checks_run) n += count;
  return n;
}

int SuiteReport::failures_in(const std::string& check) const {
  return static_cast<int>(std::count_if(failures.begin(), failures.end(), [&](const Failure& f) { return f.check == check; }));
}

std::vector<ParaJacobiIndex> extendable_indices(int max_nm) {
  std::vector<ParaJacobiIndex> out;
  for (int N = 2; N <= max_nm; ++N)
    for (int M = 2; M <= max_nm; ++M)
      for (int n = std::max(N, M); n < N + M; ++n) out.emplace_back(n, N, M);
  return out;
}

std::vector<Rational> window_sample(const ParaJacobiIndex& idx) {
  const auto w = parajacobi::nodeless_window(idx);
  std::vector<Rational> out;
  for (const auto& iv : w.intervals)
    for (auto& x : parajacobi::interior_points(iv, 3, w.threshold)) out.push_back(std::move(x));
  return out;
}

namespace {

class Recorder {
public:
  explicit Recorder(SuiteReport& report) : report_(report) {}

  void check(const std::string& name, bool ok, const ParaJacobiIndex& idx, const Rational& lambda, int level = 0,
             std::string detail = {}) {
    ++report_.checks_run[name];
    if (!ok) report_.failures.push_back({name, idx, lambda, level, std::move(detail)});
  }

  // An exception inside a check is a failure of that check, not of the run.
  template <typename F>
  void guarded(const std::string& name, const ParaJacobiIndex& idx, const Rational& lambda, int level, F&& f) {
    try {
      check(name, f(), idx, lambda, level);
    } catch (const std::exception& e) {
      check(name, false, idx, lambda, level, e.what());
    }
  }

private:
  SuiteReport& report_;
};

}  // namespace

SuiteReport exact_identity_suite(int max_nm) {
  SuiteReport report;
  Recorder rec(report);
  for (const auto& idx : extendable_indices(max_nm)) {
    const int n = idx.n();
    const int N = idx.N();
    const int M = idx.M();
    for (const auto& lambda : window_sample(idx)) {
      const Polynomial p = parajacobi::para_jacobi(idx, lambda);

      rec.guarded("jacobi_ode", idx, lambda, 0, [&] {
        return tdpt::jacobi_ode_residual(p, Rational(n), {Rational(-N), Rational(-M)}).is_zero();
      });
      rec.guarded("derivative", idx, lambda, 0, [&] {
        const Rational lp = parajacobi::lambda_prime(n, N, M, lambda);
        return p.derivative() == Rational(n) * parajacobi::detail::para_jacobi_chain(n - 1, N - 1, M - 1, lp);
      });
      rec.guarded("reflection", idx, lambda, 0, [&] {
        const Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
        return p.reflect() == sign * parajacobi::para_jacobi(idx.swapped(), parajacobi::lambda_tilde(idx, lambda));
      });
      rec.guarded("boundary_values", idx, lambda, 0, [&] {
        const auto [left, right] = parajacobi::boundary_values(idx, lambda);
        return left == p(Rational(-1)) && right == p(Rational(1));
      });

      std::optional<extension::ExtendedModel> model;
      try {
        model = extension::ExtendedModel::build(idx, lambda, 3);
      } catch (const std::exception& e) {
        rec.check("potential_forms", false, idx, lambda, 0, e.what());
        continue;
      }
      rec.guarded("potential_forms", idx, lambda, 0,
                  [&] { return model->potential == extension::extended_potential_explicit(idx, lambda); });
      for (const auto& level : model->spectrum) {
        rec.guarded("schrodinger_residual", idx, lambda, level.k, [&] {
          const auto psi = extension::eigenstate(level.k, idx, lambda);
          return extension::schrodinger_residual(psi, level.energy, model->potential).is_zero();
        });
        rec.guarded("wronskian", idx, lambda, level.k, [&] {
          return tdpt::projectively_equal(extension::eigenstate(level.k, idx, lambda),
                                          extension::eigenstate_wronskian(level.k, idx, lambda));
        });
      }
    }
  }
  return report;
}

SuiteReport window_oracle_suite(int max_nm) {
  SuiteReport report;
  Recorder rec(report);
  const Rational offset(1, 1000);
  for (const auto& idx : extendable_indices(max_nm)) {
    const auto w = parajacobi::nodeless_window(idx);
    std::vector<Rational> probes;
    for (const auto& iv : w.intervals) {
      for (const auto& end : {iv.lo, iv.hi})
        if (end.is_finite()) {
          probes.push_back(end.value - offset);
          probes.push_back(end.value + offset);
        }
      probes.push_back(parajacobi::interior_points(iv, 1, w.threshold).front());
    }
    std::sort(probes.begin(), probes.end());
    probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
    for (const auto& lambda : probes)
      rec.guarded("window_sturm", idx, lambda, 0, [&] { return parajacobi::is_nodeless(idx, lambda) == w.contains(lambda); });
  }
  return report;
}

double quadrature_self_test(int a, int b, int order, int max_degree) {
  const auto rule = numverify::gauss_jacobi(order, a, b);
  double worst = 0.0;
  for (int d = 0; d <= max_degree; ++d) {
    // z^d = ((1+z) - 1)^d against the Beta integral 2^(a+e+1) a! e! / (a+e+1)!
    Rational exact(0);
    Rational binom(1);
    for (int j = 0; j <= d; ++j) {
      const int e = b + j;
      const Rational beta =
          exact::pow(Rational(2), a + e + 1) * exact::factorial(a) * exact::factorial(e) / exact::factorial(a + e + 1);
      exact += ((d - j) % 2 == 0 ? binom : -binom) * beta;
      binom = binom * Rational(d - j, j + 1);
    }
    const double got = rule.integrate([d](double z) { return std::pow(z, d); });
    const double ref = exact.to_double();
    worst = std::max(worst, ref == 0.0 ? std::abs(got) : std::abs(got - ref) / std::abs(ref));
  }
  return worst;
}

NumericReport numeric_suite(const ParaJacobiIndex& idx, const Rational& lambda, int kmax, int quad_order,
                            int grid_points, const numverify::Tolerances& tol) {
  NumericReport r;
  r.quadrature_order = std::max(quad_order, idx.n() + kmax + 1 + numverify::kQuadratureMargin);
  r.quadrature_error = quadrature_self_test(idx.N() - 1, idx.M() - 1, r.quadrature_order, 10);
  r.quadrature_passed = r.quadrature_error < tol.quadrature;
  r.gram = numverify::gram_matrix(idx, lambda, kmax, numverify::gauss_jacobi(r.quadrature_order, idx.N() - 1, idx.M() - 1));
  r.gram_passed = r.gram.max_normalized_offdiag() < tol.orthogonality;
  r.fd = numverify::check_state_adding(idx, lambda, numverify::GridSpec(grid_points), tol.fd_relative);
  return r;
}

}  // namespace ratext::cli
