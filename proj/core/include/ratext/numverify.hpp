#pragma once

// Floating-point checks of the exact constructions: Gauss-Jacobi quadrature
// for the orthogonality of the Q family, a Dirichlet finite-difference
// eigensolver on (0, pi/2), and sampled potential curves.
//
// Exact objects are evaluated in rational arithmetic at the (double) sample
// point and rounded once, so the only numerical error is quadrature or
// discretization error.

#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ratext/exactmath.hpp"
#include "ratext/extension.hpp"
#include "ratext/parajacobi.hpp"

namespace ratext::numverify {

using exact::Rational;
using exact::RationalFunction;
using parajacobi::ParaJacobiIndex;

struct Tolerances {
  double orthogonality = 1e-10;  // normalized Gram off-diagonals
  double fd_relative = 0.01;     // FD eigenvalues, relative to max(|E|, E_1)
  double quadrature = 1e-12;     // quadrature self-tests
};

class numeric_error : public std::runtime_error {
public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

/// Gauss rule for the weight (1-z)^a (1+z)^b on (-1, 1); exact for
/// polynomials of degree <= 2 order - 1.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int order = 0;
  double exp_one_minus_z = 0.0;
  double exp_one_plus_z = 0.0;

  template <typename F>
  [[nodiscard]] double integrate(F&& f) const {
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
    return s;
  }
};

/// Golub-Welsch construction. Requires order >= 1, a, b > -1.
QuadratureRule gauss_jacobi(int order, double a, double b);

struct GramMatrix {
  std::vector<int> levels;
  std::vector<std::vector<double>> entries;

  /// max over j != k of |G_jk| / sqrt(G_jj G_kk)
  [[nodiscard]] double max_normalized_offdiag() const;
};

inline constexpr int kQuadratureMargin = 8;

/// G_jk = integral of Q_j Q_k (1-z)^(N-1) (1+z)^(M-1) / p^2 over levels
/// {-(n+1), 0, ..., kmax}. The rule must carry the (N-1, M-1) weight and have
/// order >= n + kmax + 1 + kQuadratureMargin. If `ceiling` is set, a normalized
/// off-diagonal above it raises numeric_error.
GramMatrix gram_matrix(const ParaJacobiIndex& idx, const Rational& lambda, int kmax, const QuadratureRule& rule,
                       std::optional<double> ceiling = std::nullopt);

/// `points` subintervals of (0, pi/2); interior nodes x_i = i h, i = 1..points-1.
class GridSpec {
public:
  explicit GridSpec(int points);
  [[nodiscard]] int points() const { return points_; }
  [[nodiscard]] double spacing() const;
  [[nodiscard]] std::vector<double> interior_nodes() const;
  [[nodiscard]] GridSpec refined() const { return GridSpec(2 * points_); }

private:
  int points_;
};

using PotentialSampler = std::function<double(double)>;

/// Lowest `count` eigenvalues (ascending) of -D2/h^2 + diag(V) with Dirichlet
/// ends. Requires count <= points/4. Throws numeric_error on non-finite V.
std::vector<double> fd_spectrum(const PotentialSampler& potential, const GridSpec& grid, int count);

/// (4 E(h/2) - E(h)) / 3 from grids `grid` and `grid.refined()`.
std::vector<double> fd_spectrum_richardson(const PotentialSampler& potential, const GridSpec& grid, int count);

/// V(z) at z = cos 2x, evaluated exactly then rounded.
double potential_at_x(const RationalFunction& potential, double x);
PotentialSampler sampler(const RationalFunction& potential);

struct StateAddingCheck {
  std::vector<Rational> expected;  // -(n+1), 0, 1, 2
  std::vector<double> computed;
  double worst_scaled_error = 0.0;  // max |fd - E| / max(|E|, E_1)
  bool passed = false;
};

/// Richardson FD spectrum of V~ compared level by level against the exact
/// extended spectrum: exactly one negative level at E_{-(n+1)}, then 0, E_1, E_2.
StateAddingCheck check_state_adding(const ParaJacobiIndex& idx, const Rational& lambda, const GridSpec& grid,
                                    double tolerance = Tolerances{}.fd_relative);

bool no_extra_states(const ParaJacobiIndex& idx, const Rational& lambda, const GridSpec& grid,
                     double tolerance = Tolerances{}.fd_relative);

/// (x, V(x)) over the grid's interior nodes.
std::vector<std::pair<double, double>> sample_potential(const RationalFunction& potential, const GridSpec& grid);
std::vector<std::pair<double, double>> sample_potential(const extension::ExtendedModel& model, const GridSpec& grid);

}  // namespace ratext::numverify
