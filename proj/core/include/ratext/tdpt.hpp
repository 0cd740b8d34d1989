#pragma once

// Trigonometric Darboux-Pöschl-Teller model in the variable z = cos 2x.
//
//   V(x; a, b) = (a^2 - 1/4)/sin^2 x + (b^2 - 1/4)/cos^2 x - (a + b + 1)^2
//
// with sin^2 x = (1 - z)/2 and cos^2 x = (1 + z)/2. Eigenfunctions are
// quasi-rational: a fixed gauge factor (1-z)^a (1+z)^b times a rational
// function of z.

#include <utility>

#include "ratext/exactmath.hpp"

namespace ratext::tdpt {

using exact::Polynomial;
using exact::Rational;
using exact::RationalFunction;

struct TdptParams {
  Rational alpha;
  Rational beta;

  /// |alpha| > 1/2 and |beta| > 1/2.
  [[nodiscard]] bool confining() const;
  friend bool operator==(const TdptParams&, const TdptParams&) = default;
};

/// f(z) = scale * (1-z)^a * (1+z)^b * rf(z) on (-1, 1).
class QuasiRationalFunction {
public:
  QuasiRationalFunction() = default;
  QuasiRationalFunction(Rational exp_one_minus_z, Rational exp_one_plus_z, RationalFunction rf,
                        Rational scale = Rational(1));

  [[nodiscard]] const Rational& exp_one_minus_z() const { return a_; }
  [[nodiscard]] const Rational& exp_one_plus_z() const { return b_; }
  [[nodiscard]] const RationalFunction& rf() const { return rf_; }
  [[nodiscard]] const Rational& scale() const { return scale_; }

  /// f_z / f = -a/(1-z) + b/(1+z) + rf'/rf. Requires rf != 0.
  [[nodiscard]] RationalFunction log_derivative() const;
  [[nodiscard]] QuasiRationalFunction reciprocal() const;
  /// Numerical value at z in (-1, 1); rf is evaluated exactly before rounding.
  [[nodiscard]] double operator()(double z) const;

  friend QuasiRationalFunction operator*(const QuasiRationalFunction& f, const QuasiRationalFunction& g);
  friend QuasiRationalFunction operator*(QuasiRationalFunction f, const Rational& c);
  friend bool operator==(const QuasiRationalFunction&, const QuasiRationalFunction&) = default;

private:
  Rational a_;
  Rational b_;
  RationalFunction rf_;
  Rational scale_{1};
};

/// Equality up to one nonzero constant factor.
bool projectively_equal(const QuasiRationalFunction& f, const QuasiRationalFunction& g);

/// z-space Wronskian W(u, v | z) = u v_z - u_z v.
QuasiRationalFunction wronskian_z(const QuasiRationalFunction& u, const QuasiRationalFunction& v);

/// dz/dx = -2 sqrt(1 - z^2), as a quasi-rational function.
QuasiRationalFunction dz_dx();

enum class SymmetryTag { GammaPlus, GammaMinus, Gamma3, Omega };

struct Eigenpair {
  Rational energy;
  QuasiRationalFunction psi;
};

class non_confining_error : public std::domain_error {
public:
  explicit non_confining_error(const TdptParams& p)
      : std::domain_error("TDPT parameters alpha=" + p.alpha.str() + ", beta=" + p.beta.str() +
                          " are not confining (need |alpha|, |beta| > 1/2)") {}
};

/// V(z) as a single canonical rational function, constant included.
RationalFunction tdpt_potential_z(const TdptParams& params);

/// P_n^(alpha,beta)(z) from the (1-z)^(n-k) (1+z)^k binomial sum.
Polynomial jacobi_poly(int n, const Rational& alpha, const Rational& beta);
/// Same polynomial from the expansion in powers of (1-z).
Polynomial jacobi_poly_one_minus_z(int n, const Rational& alpha, const Rational& beta);
/// Same polynomial from the expansion in powers of (1+z).
Polynomial jacobi_poly_one_plus_z(int n, const Rational& alpha, const Rational& beta);

/// E_nu = 4 nu (nu + alpha + beta + 1).
Rational energy(const Rational& nu, const TdptParams& params);

/// Zero-energy gauge factor psi_0 = sin^(alpha+1/2) x cos^(beta+1/2) x, in z
/// and up to a constant.
QuasiRationalFunction gauge_factor(const TdptParams& params);

/// (E_n, psi_0 P_n^(alpha,beta)). Throws non_confining_error.
Eigenpair bound_state(int n, const TdptParams& params);

/// Eigenfunctions of V(alpha, beta) obtained by flipping parameter signs:
/// GammaPlus (-alpha, beta), GammaMinus (alpha, -beta), Gamma3 (-alpha, -beta).
/// Omega returns the GammaMinus energy with (-1)^n phi_{n,-}, the image of
/// phi_{n,+}(pi/2 - x; beta, alpha).
Eigenpair apply_symmetry(SymmetryTag tag, int n, const TdptParams& params);

/// (1-z^2) y'' - [(alpha+beta+2) z + (alpha-beta)] y' + nu (nu+alpha+beta+1) y
Polynomial jacobi_ode_residual(const Polynomial& y, const Rational& nu, const TdptParams& params);

}  // namespace ratext::tdpt
