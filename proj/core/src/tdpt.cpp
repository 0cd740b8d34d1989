#include "ratext/tdpt.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ratext::tdpt {

namespace {

const Rational kHalf(1, 2);

Polynomial one_minus_z() { return Polynomial{Rational(1), Rational(-1)}; }
Polynomial one_plus_z() { return Polynomial{Rational(1), Rational(1)}; }

// x (x-1) ... (x-k+1) / k!
Rational binomial(const Rational& x, int k) {
  Rational r(1);
  for (int i = 0; i < k; ++i) r *= (x - Rational(i)) / Rational(i + 1);
  return r;
}

// x (x+1) ... (x+m-1)
Rational rising(const Rational& x, int m) {
  Rational r(1);
  for (int i = 0; i < m; ++i) r *= x + Rational(i);
  return r;
}

void require_degree(int n) {
  if (n < 0) throw std::domain_error("Jacobi degree must be >= 0, got " + std::to_string(n));
}

// (1-z)^(-k) (1+z)^(-j) folded into a rational function for integer k, j.
RationalFunction integer_gauge(const Rational& k, const Rational& j) {
  const auto ik = static_cast<int>(k.raw().get_num().get_si());
  const auto ij = static_cast<int>(j.raw().get_num().get_si());
  Polynomial num = Polynomial::constant(Rational(1));
  Polynomial den = Polynomial::constant(Rational(1));
  (ik >= 0 ? num : den) *= pow(one_minus_z(), ik >= 0 ? ik : -ik);
  (ij >= 0 ? num : den) *= pow(one_plus_z(), ij >= 0 ? ij : -ij);
  return RationalFunction(num, den);
}

}  // namespace

bool TdptParams::confining() const { return abs(alpha) > kHalf && abs(beta) > kHalf; }

QuasiRationalFunction::QuasiRationalFunction(Rational exp_one_minus_z, Rational exp_one_plus_z,
                                             RationalFunction rf, Rational scale)
    : a_(std::move(exp_one_minus_z)), b_(std::move(exp_one_plus_z)), rf_(std::move(rf)), scale_(std::move(scale)) {}

RationalFunction QuasiRationalFunction::log_derivative() const {
  if (rf_.is_zero() || scale_.is_zero())
    throw std::domain_error("logarithmic derivative of the zero function");
  const RationalFunction from_a(Polynomial::constant(-a_), one_minus_z());
  const RationalFunction from_b(Polynomial::constant(b_), one_plus_z());
  return from_a + from_b + rf_.derivative() / rf_;
}

QuasiRationalFunction QuasiRationalFunction::reciprocal() const {
  return {-a_, -b_, rf_.reciprocal(), Rational(1) / scale_};
}

double QuasiRationalFunction::operator()(double z) const {
  const double r = rf_(Rational::from_double(z)).to_double();
  return scale_.to_double() * std::pow(1.0 - z, a_.to_double()) * std::pow(1.0 + z, b_.to_double()) * r;
}

QuasiRationalFunction operator*(const QuasiRationalFunction& f, const QuasiRationalFunction& g) {
  return {f.a_ + g.a_, f.b_ + g.b_, f.rf_ * g.rf_, f.scale_ * g.scale_};
}

QuasiRationalFunction operator*(QuasiRationalFunction f, const Rational& c) {
  f.scale_ *= c;
  return f;
}

bool projectively_equal(const QuasiRationalFunction& f, const QuasiRationalFunction& g) {
  const bool f_zero = f.rf().is_zero() || f.scale().is_zero();
  const bool g_zero = g.rf().is_zero() || g.scale().is_zero();
  if (f_zero || g_zero) return f_zero && g_zero;
  const Rational da = f.exp_one_minus_z() - g.exp_one_minus_z();
  const Rational db = f.exp_one_plus_z() - g.exp_one_plus_z();
  if (!da.is_integer() || !db.is_integer()) return false;
  const RationalFunction ratio = f.rf() * integer_gauge(da, db) / g.rf();
  return ratio.is_constant();
}

QuasiRationalFunction wronskian_z(const QuasiRationalFunction& u, const QuasiRationalFunction& v) {
  return u * v * QuasiRationalFunction(Rational(0), Rational(0), v.log_derivative() - u.log_derivative());
}

QuasiRationalFunction dz_dx() { return {kHalf, kHalf, RationalFunction(Rational(1)), Rational(-2)}; }

RationalFunction tdpt_potential_z(const TdptParams& params) {
  const Rational quarter(1, 4);
  const Rational ga = Rational(2) * (params.alpha * params.alpha - quarter);
  const Rational gb = Rational(2) * (params.beta * params.beta - quarter);
  const Rational shift = params.alpha + params.beta + Rational(1);
  return RationalFunction(Polynomial::constant(ga), one_minus_z()) +
         RationalFunction(Polynomial::constant(gb), one_plus_z()) - RationalFunction(shift * shift);
}

Polynomial jacobi_poly(int n, const Rational& alpha, const Rational& beta) {
  require_degree(n);
  Polynomial sum;
  for (int k = 0; k <= n; ++k) {
    Rational c = binomial(Rational(n) + alpha, k) * binomial(Rational(n) + beta, n - k);
    if ((n - k) % 2 != 0) c = -c;
    sum += c * (pow(one_minus_z(), n - k) * pow(one_plus_z(), k));
  }
  return sum * pow(Rational(2), -n);
}

Polynomial jacobi_poly_one_minus_z(int n, const Rational& alpha, const Rational& beta) {
  require_degree(n);
  const Rational s = Rational(n) + alpha + beta + Rational(1);
  Polynomial sum;
  for (int k = 0; k <= n; ++k) {
    Rational c = binomial(Rational(n), k) * rising(s, k) * rising(alpha + Rational(1 + k), n - k) *
                 pow(Rational(2), -k);
    if (k % 2 != 0) c = -c;
    sum += c * pow(one_minus_z(), k);
  }
  return sum * (Rational(1) / exact::factorial(n));
}

Polynomial jacobi_poly_one_plus_z(int n, const Rational& alpha, const Rational& beta) {
  require_degree(n);
  const Rational s = Rational(n) + alpha + beta + Rational(1);
  Polynomial sum;
  for (int k = 0; k <= n; ++k) {
    Rational c = binomial(Rational(n), k) * rising(s, k) * rising(beta + Rational(1 + k), n - k) *
                 pow(Rational(2), -k);
    if (k % 2 != 0) c = -c;
    sum += c * pow(one_plus_z(), k);
  }
  const Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
  return sum * (sign / exact::factorial(n));
}

Rational energy(const Rational& nu, const TdptParams& params) {
  return Rational(4) * nu * (nu + params.alpha + params.beta + Rational(1));
}

QuasiRationalFunction gauge_factor(const TdptParams& params) {
  return {(params.alpha + kHalf) * kHalf, (params.beta + kHalf) * kHalf, RationalFunction(Rational(1))};
}

namespace {

QuasiRationalFunction unchecked_state(int n, const TdptParams& params) {
  QuasiRationalFunction g = gauge_factor(params);
  return {g.exp_one_minus_z(), g.exp_one_plus_z(), RationalFunction(jacobi_poly(n, params.alpha, params.beta))};
}

}  // namespace

Eigenpair bound_state(int n, const TdptParams& params) {
  require_degree(n);
  if (!params.confining()) throw non_confining_error(params);
  return {energy(Rational(n), params), unchecked_state(n, params)};
}

Eigenpair apply_symmetry(SymmetryTag tag, int n, const TdptParams& params) {
  require_degree(n);
  const Rational& a = params.alpha;
  const Rational& b = params.beta;
  const Rational rn(n);
  switch (tag) {
    case SymmetryTag::GammaPlus:
      return {Rational(4) * (rn - a) * (rn + b + Rational(1)), unchecked_state(n, {-a, b})};
    case SymmetryTag::GammaMinus:
      return {Rational(4) * (rn - b) * (rn + a + Rational(1)), unchecked_state(n, {a, -b})};
    case SymmetryTag::Gamma3:
      return {Rational(-4) * (rn + Rational(1)) * (a + b - rn), unchecked_state(n, {-a, -b})};
    case SymmetryTag::Omega: {
      Eigenpair minus = apply_symmetry(SymmetryTag::GammaMinus, n, params);
      minus.psi = minus.psi * (n % 2 == 0 ? Rational(1) : Rational(-1));
      return minus;
    }
  }
  throw std::invalid_argument("unknown symmetry tag");
}

Polynomial jacobi_ode_residual(const Polynomial& y, const Rational& nu, const TdptParams& params) {
  const Polynomial one_minus_z2{Rational(1), Rational(0), Rational(-1)};
  const Polynomial drift{params.alpha - params.beta, params.alpha + params.beta + Rational(2)};
  const Rational spectral = nu * (nu + params.alpha + params.beta + Rational(1));
  return one_minus_z2 * y.derivative().derivative() - drift * y.derivative() + spectral * y;
}

}  // namespace ratext::tdpt
