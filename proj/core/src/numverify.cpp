#include "ratext/numverify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

namespace ratext::numverify {

QuadratureRule gauss_jacobi(int order, double a, double b) {
  if (order < 1) throw std::invalid_argument("quadrature order must be >= 1");
  if (!(a > -1.0) || !(b > -1.0)) throw std::invalid_argument("Jacobi weight exponents must exceed -1");

  Eigen::VectorXd diag(order);
  Eigen::VectorXd sub(std::max(order - 1, 1));
  for (int k = 0; k < order; ++k) {
    const double s = 2.0 * k + a + b;
    diag(k) = k == 0 ? (b - a) / (a + b + 2.0) : (b * b - a * a) / (s * (s + 2.0));
  }
  for (int k = 1; k < order; ++k) {
    const double s = 2.0 * k + a + b;
    const double beta = 4.0 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1.0) * (s - 1.0));
    sub(k - 1) = std::sqrt(beta);
  }
  const double mu0 =
      std::exp((a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(order - 1), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw numeric_error("Golub-Welsch eigensolve failed");

  QuadratureRule rule;
  rule.order = order;
  rule.exp_one_minus_z = a;
  rule.exp_one_plus_z = b;
  rule.nodes.resize(static_cast<std::size_t>(order));
  rule.weights.resize(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) {
    const double v0 = solver.eigenvectors()(0, i);
    rule.nodes[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    rule.weights[static_cast<std::size_t>(i)] = mu0 * v0 * v0;
  }
  return rule;
}

double GramMatrix::max_normalized_offdiag() const {
  double worst = 0.0;
  for (std::size_t j = 0; j < entries.size(); ++j)
    for (std::size_t k = 0; k < entries.size(); ++k)
      if (j != k) worst = std::max(worst, std::abs(entries[j][k]) / std::sqrt(entries[j][j] * entries[k][k]));
  return worst;
}

GramMatrix gram_matrix(const ParaJacobiIndex& idx, const Rational& lambda, int kmax, const QuadratureRule& rule,
                       std::optional<double> ceiling) {
  extension::require_extendable(idx, lambda);
  if (kmax < 0) throw std::invalid_argument("kmax must be >= 0");
  if (rule.exp_one_minus_z != idx.N() - 1 || rule.exp_one_plus_z != idx.M() - 1)
    throw std::invalid_argument("quadrature rule weight does not match (1-z)^(N-1) (1+z)^(M-1)");
  const int needed = idx.n() + kmax + 1 + kQuadratureMargin;
  if (rule.order < needed)
    throw numeric_error("quadrature order " + std::to_string(rule.order) + " below required " + std::to_string(needed));

  GramMatrix g;
  g.levels.push_back(-(idx.n() + 1));
  for (int k = 0; k <= kmax; ++k) g.levels.push_back(k);

  const exact::Polynomial p = parajacobi::para_jacobi(idx, lambda);
  std::vector<exact::Polynomial> qs;
  for (int level : g.levels) qs.push_back(extension::q_polynomial(level, idx, lambda).poly);

  // values[i][j] = Q_j(z_i) / p(z_i), rounded once.
  std::vector<std::vector<double>> values(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const Rational z = Rational::from_double(rule.nodes[i]);
    const Rational pz = p(z);
    for (const auto& q : qs) values[i].push_back((q(z) / pz).to_double());
  }

  const std::size_t L = g.levels.size();
  g.entries.assign(L, std::vector<double>(L, 0.0));
  for (std::size_t j = 0; j < L; ++j)
    for (std::size_t k = j; k < L; ++k) {
      double s = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * values[i][j] * values[i][k];
      g.entries[j][k] = s;
      g.entries[k][j] = s;
    }

  if (ceiling && g.max_normalized_offdiag() > *ceiling)
    throw numeric_error("Gram off-diagonal residual exceeds ceiling; increase the quadrature order");
  return g;
}

// ---------------------------------------------------------------------------

GridSpec::GridSpec(int points) : points_(points) {
  if (points < 16) throw std::invalid_argument("grid needs >= 16 points, got " + std::to_string(points));
}

double GridSpec::spacing() const { return (std::numbers::pi / 2.0) / points_; }

std::vector<double> GridSpec::interior_nodes() const {
  std::vector<double> x(static_cast<std::size_t>(points_ - 1));
  const double h = spacing();
  for (int i = 1; i < points_; ++i) x[static_cast<std::size_t>(i - 1)] = i * h;
  return x;
}

namespace {

// Number of eigenvalues of the symmetric tridiagonal (diag, off) below sigma.
int count_below(const std::vector<double>& diag, double off_sq, double sigma) {
  int count = 0;
  double d = 1.0;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    d = diag[i] - sigma - (i == 0 ? 0.0 : off_sq / d);
    if (d == 0.0) d = -1e-300;
    if (d < 0.0) ++count;
  }
  return count;
}

}  // namespace

std::vector<double> fd_spectrum(const PotentialSampler& potential, const GridSpec& grid, int count) {
  if (count < 1 || count > grid.points() / 4)
    throw std::invalid_argument("eigenvalue count must be in [1, points/4]");
  const double h = grid.spacing();
  const double inv_h2 = 1.0 / (h * h);
  const auto nodes = grid.interior_nodes();
  std::vector<double> diag(nodes.size());
  double lo = 0.0;
  double hi = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double v = potential(nodes[i]);
    if (!std::isfinite(v)) throw numeric_error("non-finite potential sample at x=" + std::to_string(nodes[i]));
    diag[i] = 2.0 * inv_h2 + v;
    lo = i == 0 ? diag[i] : std::min(lo, diag[i]);
    hi = i == 0 ? diag[i] : std::max(hi, diag[i]);
  }
  lo -= 2.0 * inv_h2;
  hi += 2.0 * inv_h2;
  const double off_sq = inv_h2 * inv_h2;

  std::vector<double> eig;
  for (int k = 0; k < count; ++k) {
    double a = lo;
    double b = hi;
    for (int it = 0; it < 200 && b - a > 1e-13 * std::max(1.0, std::abs(a) + std::abs(b)); ++it) {
      const double mid = 0.5 * (a + b);
      (count_below(diag, off_sq, mid) > k ? b : a) = mid;
    }
    eig.push_back(0.5 * (a + b));
  }
  return eig;
}

std::vector<double> fd_spectrum_richardson(const PotentialSampler& potential, const GridSpec& grid, int count) {
  const auto coarse = fd_spectrum(potential, grid, count);
  const auto fine = fd_spectrum(potential, grid.refined(), count);
  std::vector<double> out(coarse.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (4.0 * fine[i] - coarse[i]) / 3.0;
  return out;
}

double potential_at_x(const RationalFunction& potential, double x) {
  return potential(Rational::from_double(std::cos(2.0 * x))).to_double();
}

PotentialSampler sampler(const RationalFunction& potential) {
  return [potential](double x) { return potential_at_x(potential, x); };
}

StateAddingCheck check_state_adding(const ParaJacobiIndex& idx, const Rational& lambda, const GridSpec& grid,
                                    double tolerance) {
  const auto model = extension::ExtendedModel::build(idx, lambda, 2);
  StateAddingCheck check;
  for (const auto& level : model.spectrum) check.expected.push_back(level.energy);
  check.computed = fd_spectrum_richardson(sampler(model.potential), grid, static_cast<int>(check.expected.size()));

  const double scale = model.spectrum[2].energy.to_double();  // E_1
  for (std::size_t i = 0; i < check.expected.size(); ++i) {
    const double exact = check.expected[i].to_double();
    check.worst_scaled_error =
        std::max(check.worst_scaled_error, std::abs(check.computed[i] - exact) / std::max(std::abs(exact), scale));
  }
  const auto negatives = std::count_if(check.computed.begin(), check.computed.end(),
                                       [&](double e) { return e < -tolerance * scale; });
  check.passed = check.worst_scaled_error <= tolerance && negatives == 1;
  return check;
}

bool no_extra_states(const ParaJacobiIndex& idx, const Rational& lambda, const GridSpec& grid, double tolerance) {
  return check_state_adding(idx, lambda, grid, tolerance).passed;
}

std::vector<std::pair<double, double>> sample_potential(const RationalFunction& potential, const GridSpec& grid) {
  std::vector<std::pair<double, double>> out;
  for (double x : grid.interior_nodes()) out.emplace_back(x, potential_at_x(potential, x));
  return out;
}

std::vector<std::pair<double, double>> sample_potential(const extension::ExtendedModel& model, const GridSpec& grid) {
  return sample_potential(model.potential, grid);
}

}  // namespace ratext::numverify
