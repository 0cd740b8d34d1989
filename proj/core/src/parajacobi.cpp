#include "ratext/parajacobi.hpp"

#include <algorithm>

namespace ratext::parajacobi {

using exact::factorial;

namespace {

Polynomial one_plus_z() { return Polynomial{Rational(1), Rational(1)}; }

Rational neg_one_pow(int k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

Rational minus_two_pow(int n) { return pow(Rational(-2), n); }

Polynomial theta1_raw(int n, int N, int M) {
  Polynomial sum;
  for (int k = M; k <= n; ++k) {
    const Rational c = neg_one_pow(k) * factorial(n - M - N + k) /
                       (pow(Rational(2), k) * factorial(k) * factorial(k - M) * factorial(n - k));
    sum += c * pow(one_plus_z(), k);
  }
  return sum;
}

Polynomial theta2_raw(int n, int N, int M) {
  Polynomial sum;
  for (int k = 0; k <= N + M - n - 1; ++k) {
    const Rational c = neg_one_pow(k) * factorial(M - 1 - k) /
                       (pow(Rational(2), k) * factorial(k) * factorial(N + M - n - 1 - k) * factorial(n - k));
    sum += c * pow(one_plus_z(), k);
  }
  return sum;
}

// Prefactor of Theta_{n,1}.
Rational theta1_weight(int n, int N, int M) {
  return minus_two_pow(n) * factorial(n - M) * factorial(n) / factorial(2 * n - M - N);
}

// Prefactor of lambda * Theta_{n,2}.
Rational theta2_weight(int n, int N, int M) {
  return minus_two_pow(n) * factorial(2 * n - M - N + 1) * factorial(M + N - n - 1) / factorial(n - N);
}

}  // namespace

ParaJacobiIndex::ParaJacobiIndex(int n, int N, int M) : n_(n), N_(N), M_(M) {
  const std::string tag = "(n,N,M)=(" + std::to_string(n) + "," + std::to_string(N) + "," + std::to_string(M) + ")";
  if (n < 1 || N < 1 || M < 1)
    throw invalid_index(IndexViolation::nonpositive, tag + ": n, N and M must be positive integers");
  if (2 * n < N + M || n >= N + M)
    throw invalid_index(IndexViolation::outside_polynomial_range, tag + ": requires (N+M)/2 <= n < N+M");
  if (n < std::max(N, M))
    throw invalid_index(IndexViolation::below_max_nm, tag + ": requires n >= max(N,M)");
}

std::string ParaJacobiIndex::str() const {
  return "(" + std::to_string(n_) + "," + std::to_string(N_) + "," + std::to_string(M_) + ")";
}

bool is_valid_index(int n, int N, int M) {
  return n >= 1 && N >= 1 && M >= 1 && n < N + M && n >= std::max(N, M);
}

Polynomial theta(const ParaJacobiIndex& idx, int which) {
  switch (which) {
    case 1: return theta1_raw(idx.n(), idx.N(), idx.M());
    case 2: return theta2_raw(idx.n(), idx.N(), idx.M());
    default: throw std::invalid_argument("theta basis index must be 1 or 2, got " + std::to_string(which));
  }
}

namespace detail {

Polynomial para_jacobi_chain(int n, int N, int M, const Rational& lambda) {
  if (N < 0 || M < 0 || n < std::max(N, M))
    throw invalid_index(IndexViolation::below_max_nm,
                        "chain index (" + std::to_string(n) + "," + std::to_string(N) + "," + std::to_string(M) +
                            ") needs N, M >= 0 and n >= max(N,M)");
  Polynomial p = theta1_weight(n, N, M) * theta1_raw(n, N, M);
  if (N + M - n - 1 >= 0) {
    p += (lambda * theta2_weight(n, N, M)) * theta2_raw(n, N, M);
  } else if (!lambda.is_zero()) {
    throw invalid_index(IndexViolation::outside_polynomial_range,
                        "chain index with n >= N+M only admits lambda = 0");
  }
  return p;
}

}  // namespace detail

Polynomial para_jacobi(const ParaJacobiIndex& idx, const Rational& lambda) {
  return detail::para_jacobi_chain(idx.n(), idx.N(), idx.M(), lambda);
}

Polynomial para_jacobi_double_sum(const ParaJacobiIndex& idx, const Rational& lambda) {
  const int n = idx.n();
  const int N = idx.N();
  const int M = idx.M();
  const Polynomial half_one_plus_z{Rational(1, 2), Rational(1, 2)};

  Polynomial first;
  for (int k = 0; k <= n - M; ++k) {
    const Rational c =
        neg_one_pow(n - k) * factorial(2 * n - M - N - k) / (factorial(k) * factorial(n - M - k) * factorial(n - k));
    first += c * pow(half_one_plus_z, n - k);
  }
  Polynomial second;
  for (int k = 2 * n - M - N + 1; k <= n; ++k) {
    const Rational c = neg_one_pow(n - k) * factorial(k - n + M - 1) /
                       (factorial(k) * factorial(k + N + M - 2 * n - 1) * factorial(n - k));
    second += c * pow(half_one_plus_z, n - k);
  }
  return theta1_weight(n, N, M) * first + (lambda * theta2_weight(n, N, M)) * second;
}

Rational lambda_prime(int n, int N, int M, const Rational& lambda) {
  if (n < 1) throw std::domain_error("lambda_prime requires n >= 1");
  return Rational(M + N - n - 1, n) * lambda;
}

Rational lambda_double_prime(int n, int N, int M, const Rational& lambda) {
  if (n < 2) throw std::domain_error("lambda_double_prime requires n >= 2, got n=" + std::to_string(n));
  return Rational(static_cast<long>(M + N - n - 1) * (M + N - n - 2), static_cast<long>(n) * (n - 1)) * lambda;
}

Rational lambda_threshold(const ParaJacobiIndex& idx) {
  const int n = idx.n();
  const int N = idx.N();
  const int M = idx.M();
  return factorial(n) * factorial(n - M) * factorial(n - N) /
         (factorial(2 * n - N - M) * factorial(2 * n - N - M + 1) * factorial(N + M - n - 1));
}

Rational lambda_tilde(const ParaJacobiIndex& idx, const Rational& lambda) {
  const int n = idx.n();
  return neg_one_pow(2 * n - idx.N() - idx.M() + 1) * lambda + neg_one_pow(n - idx.M()) * lambda_threshold(idx);
}

std::pair<Rational, Rational> boundary_values(const ParaJacobiIndex& idx, const Rational& lambda) {
  const int n = idx.n();
  const int N = idx.N();
  const int M = idx.M();
  const Rational at_minus_one =
      lambda * minus_two_pow(n) * factorial(2 * n - N - M + 1) * factorial(M - 1) / (factorial(n - N) * factorial(n));
  // p(1; lambda) = (-1)^n p^(-M,-N)(-1; lambda~): the left-end formula with N and M exchanged.
  const Rational at_plus_one = neg_one_pow(n) * lambda_tilde(idx, lambda) * minus_two_pow(n) *
                               factorial(2 * n - N - M + 1) * factorial(N - 1) / (factorial(n - M) * factorial(n));
  return {at_minus_one, at_plus_one};
}

// ---------------------------------------------------------------------------

std::string ExtendedRational::str() const {
  switch (kind) {
    case Kind::neg_inf: return "-inf";
    case Kind::pos_inf: return "+inf";
    case Kind::finite: break;
  }
  return value.str();
}

ExtendedRational ExtendedRational::parse(const std::string& text) {
  if (text == "-inf") return neg_inf();
  if (text == "+inf" || text == "inf") return pos_inf();
  return finite(Rational::parse(text));
}

bool Interval::contains(const Rational& x) const {
  const bool above_lo = lo.kind == ExtendedRational::Kind::neg_inf || (lo.is_finite() && lo.value < x);
  const bool below_hi = hi.kind == ExtendedRational::Kind::pos_inf || (hi.is_finite() && x < hi.value);
  return above_lo && below_hi;
}

std::string to_string(WindowCase c) {
  switch (c) {
    case WindowCase::i: return "i";
    case WindowCase::ii: return "ii";
    case WindowCase::iii: return "iii";
    case WindowCase::iv: return "iv";
  }
  return "?";
}

WindowCase window_case_from_string(const std::string& s) {
  if (s == "i") return WindowCase::i;
  if (s == "ii") return WindowCase::ii;
  if (s == "iii") return WindowCase::iii;
  if (s == "iv") return WindowCase::iv;
  throw std::invalid_argument("unknown window case '" + s + "'");
}

bool LambdaWindow::contains(const Rational& lambda) const {
  return std::any_of(intervals.begin(), intervals.end(), [&](const Interval& iv) { return iv.contains(lambda); });
}

LambdaWindow nodeless_window(const ParaJacobiIndex& idx) {
  using ER = ExtendedRational;
  const Rational t = lambda_threshold(idx);
  const bool m_even = idx.M() % 2 == 0;
  const bool shift_even = (idx.n() - idx.N()) % 2 == 0;
  const ER zero = ER::finite(Rational(0));
  if (m_even && !shift_even)
    return {WindowCase::i, t, {{ER::neg_inf(), ER::finite(-t)}, {zero, ER::pos_inf()}}};
  if (m_even && shift_even) return {WindowCase::ii, t, {{zero, ER::finite(t)}}};
  if (!m_even && shift_even) return {WindowCase::iii, t, {{ER::neg_inf(), zero}, {ER::finite(t), ER::pos_inf()}}};
  return {WindowCase::iv, t, {{ER::finite(-t), zero}}};
}

bool is_nodeless(const ParaJacobiIndex& idx, const Rational& lambda) {
  const Polynomial p = para_jacobi(idx, lambda);
  if (p(Rational(-1)).is_zero() || p(Rational(1)).is_zero())
    throw boundary_lambda_error("lambda=" + lambda.str() + " is a window boundary for " + idx.str() +
                                ": p vanishes at z=-1 or z=1");
  return exact::sturm_root_count(p, Rational(-1), Rational(1)) == 0;
}

std::vector<Rational> interior_points(const Interval& interval, int count, const Rational& scale) {
  std::vector<Rational> out;
  const Rational step = std::max(Rational(1), abs(scale));
  for (int j = 1; j <= count; ++j) {
    if (interval.lo.is_finite() && interval.hi.is_finite()) {
      out.push_back(interval.lo.value + (interval.hi.value - interval.lo.value) * Rational(j, count + 1));
    } else if (interval.lo.is_finite()) {
      out.push_back(interval.lo.value + step * Rational(j));
    } else if (interval.hi.is_finite()) {
      out.push_back(interval.hi.value - step * Rational(j));
    } else {
      out.push_back(Rational(j - (count + 1) / 2));
    }
  }
  return out;
}

}  // namespace ratext::parajacobi
