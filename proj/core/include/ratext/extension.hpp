#pragma once

// State-adding Darboux-Bäcklund extension of V(x; N-1, M-1) generated by the
// nodeless seed psi_n(x; -N, -M; lambda) = psi_0(x; -N, -M) p_n^(-N,-M)(z; lambda).
//
// Everything is exact in z = cos 2x. Two independent constructors exist for
// the extended potential (log-derivative form and three-term explicit form)
// and for the eigenstates (Darboux-Crum Wronskian and Q-polynomial formula).

#include <string>
#include <vector>

#include "ratext/exactmath.hpp"
#include "ratext/parajacobi.hpp"
#include "ratext/tdpt.hpp"

namespace ratext::extension {

using exact::Polynomial;
using exact::Rational;
using exact::RationalFunction;
using parajacobi::ParaJacobiIndex;
using tdpt::QuasiRationalFunction;

inline constexpr int kDefaultSpectrumCutoff = 8;

struct Level {
  int k;
  Rational energy;
  friend bool operator==(const Level&, const Level&) = default;
};

struct QPolynomial {
  int level;
  Polynomial poly;
};

class window_violation : public std::domain_error {
public:
  explicit window_violation(const std::string& what) : std::domain_error(what) {}
};

class invalid_level : public std::domain_error {
public:
  explicit invalid_level(const std::string& what) : std::domain_error(what) {}
};

/// Throws invalid_index unless N, M >= 2, and window_violation unless lambda
/// lies in the nodeless window.
void require_extendable(const ParaJacobiIndex& idx, const Rational& lambda);

/// psi_0(z; -N, -M) p_n^(-N,-M)(z; lambda).
QuasiRationalFunction seed_function(const ParaJacobiIndex& idx, const Rational& lambda);

/// (log f)_xx from L = (log f)_z: 4 (1 - z^2) L_z - 4 z L.
RationalFunction second_log_derivative_x(const RationalFunction& log_derivative_z);

/// V - 2 (log seed)_xx, the raw Darboux partner of V.
RationalFunction darboux_partner(const RationalFunction& potential, const QuasiRationalFunction& seed);

/// V(N-1, M-1) - 4(N+M) - 2 (log p)_xx.
RationalFunction extended_potential_log_form(const ParaJacobiIndex& idx, const Rational& lambda);

/// Three-term form in p_{n-2}(lambda''), p_{n-1}(lambda'), p_n(lambda).
RationalFunction extended_potential_explicit(const ParaJacobiIndex& idx, const Rational& lambda);

/// Q_k^(n)(z; N, M; lambda) for k >= 0, or 1 for k = -(n+1).
QPolynomial q_polynomial(int k, const ParaJacobiIndex& idx, const Rational& lambda);

/// psi~_k = psi_0(x; N-1, M-1) Q_k / p, defined up to a constant factor.
QuasiRationalFunction eigenstate(int k, const ParaJacobiIndex& idx, const Rational& lambda);

/// The Darboux-Crum image W(seed, psi_k | x) / seed, or 1/seed for k = -(n+1).
QuasiRationalFunction eigenstate_wronskian(int k, const ParaJacobiIndex& idx, const Rational& lambda);

/// Levels -(n+1), 0, 1, ..., cutoff with E_k(N, M) = 4 k (N + M + 1 + k).
std::vector<Level> extended_spectrum(const ParaJacobiIndex& idx, int cutoff = kDefaultSpectrumCutoff);

/// psi''/psi + E - V in z (x-derivatives); zero iff psi is a formal eigenfunction.
RationalFunction schrodinger_residual(const QuasiRationalFunction& psi, const Rational& energy,
                                      const RationalFunction& potential);

/// (1-z)^(N-1) (1+z)^(M-1) / p^2.
QuasiRationalFunction orthogonality_measure(const ParaJacobiIndex& idx, const Rational& lambda);

struct ExtendedModel {
  ParaJacobiIndex index;
  Rational lambda;
  RationalFunction potential;
  QuasiRationalFunction seed;
  std::vector<Level> spectrum;

  /// Validates and builds the model. Throws like require_extendable.
  static ExtendedModel build(const ParaJacobiIndex& idx, const Rational& lambda,
                             int cutoff = kDefaultSpectrumCutoff);
};

// ---------------------------------------------------------------------------
// Closed form for the first nontrivial case n = N = M = 2, where
// p = z^2 + 2(1 - lambda) z + 1:
//
//   3/(1-z^2) - 16 ((lambda-1) z + 2 lambda^2 - 4 lambda - 1) / p
//             + 64 lambda (lambda - 2) ((1-lambda) z + 1) / p^2 - 25
//
// The middle terms carry independent signs so that candidate repairs of a
// mistranscribed version can be tried.

RationalFunction closed_form_potential_222(const Rational& lambda, int sign_first = 1, int sign_second = 1);

struct ReconciliationEntry {
  Rational lambda;
  bool matches_as_written;
};

struct ReconciliationReport {
  std::vector<ReconciliationEntry> entries;
  bool exact_agreement = false;
  /// Empty when no repair was needed or none was found.
  std::string repair;
  bool reconciled = false;
  [[nodiscard]] std::string summary() const;
};

/// Compares closed_form_potential_222 with the log-form constructor at each
/// lambda and, on a mismatch, searches the single sign repairs.
ReconciliationReport reconcile_closed_form_222(const std::vector<Rational>& lambdas);

}  // namespace ratext::extension
