#pragma once

// Para-Jacobi polynomials p_n^(-N,-M)(z; lambda): for negative integer Jacobi
// parameters (-N, -M) and (N+M)/2 <= n < N+M the general solution of the
// Jacobi equation at spectral parameter n is a polynomial. The free constant
// lambda mixes the two polynomial basis solutions Theta_{n,1}, Theta_{n,2}.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ratext/exactmath.hpp"

namespace ratext::parajacobi {

using exact::Polynomial;
using exact::Rational;

enum class IndexViolation {
  nonpositive,           ///< n, N or M < 1
  outside_polynomial_range,  ///< not (N+M)/2 <= n < N+M
  below_max_nm,          ///< n < max(N, M): factorial prefactors undefined
};

class invalid_index : public std::domain_error {
public:
  invalid_index(IndexViolation v, const std::string& what) : std::domain_error(what), violation_(v) {}
  [[nodiscard]] IndexViolation violation() const { return violation_; }

private:
  IndexViolation violation_;
};

/// Validated triple (n, N, M) with 1 <= N, M, max(N, M) <= n < N + M.
class ParaJacobiIndex {
public:
  /// Throws invalid_index naming the violated constraint.
  ParaJacobiIndex(int n, int N, int M);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int N() const { return N_; }
  [[nodiscard]] int M() const { return M_; }
  /// The same degree with N and M exchanged (always valid).
  [[nodiscard]] ParaJacobiIndex swapped() const { return {n_, M_, N_}; }
  [[nodiscard]] std::string str() const;

  friend bool operator==(const ParaJacobiIndex&, const ParaJacobiIndex&) = default;

private:
  int n_;
  int N_;
  int M_;
};

/// Null-checking constructor for sweeps: true iff (n, N, M) is valid.
bool is_valid_index(int n, int N, int M);

/// Theta_{n,1} (which = 1, vanishes at z = -1) or Theta_{n,2} (which = 2).
Polynomial theta(const ParaJacobiIndex& idx, int which);

/// Monic p_n^(-N,-M)(z; lambda) built from the Theta basis.
Polynomial para_jacobi(const ParaJacobiIndex& idx, const Rational& lambda);

/// The same polynomial from the double sum in powers of (1+z)/2.
Polynomial para_jacobi_double_sum(const ParaJacobiIndex& idx, const Rational& lambda);

/// lambda' with d/dz p_n^(-N,-M)(z; lambda) = n p_{n-1}^(-N+1,-M+1)(z; lambda').
Rational lambda_prime(int n, int N, int M, const Rational& lambda);

/// lambda'' with d^2/dz^2 p_n = n (n-1) p_{n-2}^(-N+2,-M+2)(z; lambda''). Requires n >= 2.
Rational lambda_double_prime(int n, int N, int M, const Rational& lambda);

/// lambda~ with p_n^(-N,-M)(-z; lambda) = (-1)^n p_n^(-M,-N)(z; lambda~).
Rational lambda_tilde(const ParaJacobiIndex& idx, const Rational& lambda);

/// lambda_n^(-N,-M) > 0, the finite endpoint of the nodeless window.
Rational lambda_threshold(const ParaJacobiIndex& idx);

/// (p(-1; lambda), p(1; lambda)) from the closed-form prefactors.
std::pair<Rational, Rational> boundary_values(const ParaJacobiIndex& idx, const Rational& lambda);

// ---------------------------------------------------------------------------
// Nodeless windows

/// Rational extended by -inf and +inf.
struct ExtendedRational {
  enum class Kind { neg_inf, finite, pos_inf };
  Kind kind = Kind::finite;
  Rational value;

  static ExtendedRational finite(Rational v) { return {Kind::finite, std::move(v)}; }
  static ExtendedRational neg_inf() { return {Kind::neg_inf, Rational(0)}; }
  static ExtendedRational pos_inf() { return {Kind::pos_inf, Rational(0)}; }
  [[nodiscard]] bool is_finite() const { return kind == Kind::finite; }
  /// "-inf", "+inf" or the rational string.
  [[nodiscard]] std::string str() const;
  static ExtendedRational parse(const std::string& text);

  friend bool operator==(const ExtendedRational&, const ExtendedRational&) = default;
};

/// Open interval (lo, hi).
struct Interval {
  ExtendedRational lo;
  ExtendedRational hi;

  [[nodiscard]] bool contains(const Rational& x) const;
  friend bool operator==(const Interval&, const Interval&) = default;
};

enum class WindowCase { i, ii, iii, iv };

std::string to_string(WindowCase c);
WindowCase window_case_from_string(const std::string& s);

struct LambdaWindow {
  WindowCase window_case;
  Rational threshold;
  std::vector<Interval> intervals;

  [[nodiscard]] bool contains(const Rational& lambda) const;
  friend bool operator==(const LambdaWindow&, const LambdaWindow&) = default;
};

/// lambda values for which p_n^(-N,-M)(.; lambda) has no zero on (-1, 1),
/// classified by the parities of M and n - N.
LambdaWindow nodeless_window(const ParaJacobiIndex& idx);

class boundary_lambda_error : public std::domain_error {
public:
  explicit boundary_lambda_error(const std::string& what) : std::domain_error(what) {}
};

/// Sturm-count oracle: true iff p has no root in (-1, 1).
/// Throws boundary_lambda_error when p(-1) = 0 or p(1) = 0.
bool is_nodeless(const ParaJacobiIndex& idx, const Rational& lambda);

/// `count` rationals strictly inside the interval, deterministic. Semi-infinite
/// intervals are sampled at offsets scaled by max(1, scale) from the finite end.
std::vector<Rational> interior_points(const Interval& interval, int count, const Rational& scale);

namespace detail {

/// Theta-basis recombination allowing the degenerate indices reached by
/// differentiating a valid p_n: N, M >= 0, n >= max(N, M), and n >= N + M only
/// when lambda = 0 (the Theta_{n,2} sum is then empty).
Polynomial para_jacobi_chain(int n, int N, int M, const Rational& lambda);

}  // namespace detail

}  // namespace ratext::parajacobi
