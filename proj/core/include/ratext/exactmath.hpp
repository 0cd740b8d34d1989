#pragma once

// Exact rational scalars, dense univariate polynomials over Q, rational
// functions in canonical form, and Sturm root counting.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ratext::exact {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
class Rational {
public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class value);

  /// Parses "p/q" or an integer "p". Throws std::invalid_argument.
  static Rational parse(std::string_view text);
  /// Parses a plain decimal ("1.25", "-0.5", "3") exactly.
  static Rational parse_decimal(std::string_view text);
  /// Exact value of a finite double.
  static Rational from_double(double value);

  /// "num/den", or "num" when the denominator is 1.
  [[nodiscard]] std::string str() const;
  [[nodiscard]] double to_double() const { return value_.get_d(); }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class value_;
};

Rational abs(const Rational& r);
/// r^e for integer e (negative allowed when r != 0).
Rational pow(const Rational& r, int e);
/// k! as a Rational; k >= 0.
Rational factorial(int k);

/// Dense polynomial in z with Rational coefficients, constant term first.
/// The zero polynomial has no coefficients.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  /// c * z^k
  static Polynomial monomial(const Rational& c, int k);
  static Polynomial z() { return monomial(Rational(1), 1); }

  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of z^k (zero past the degree).
  [[nodiscard]] Rational coeff(int k) const;
  [[nodiscard]] Rational leading() const;

  [[nodiscard]] Rational operator()(const Rational& z0) const;
  [[nodiscard]] Polynomial derivative() const;
  /// q(z) = p(-z)
  [[nodiscard]] Polynomial reflect() const;
  [[nodiscard]] Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial pow(const Polynomial& p, int e);

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division over Q. Throws std::domain_error on a zero divisor.
DivMod divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

enum class PolyOp { add, sub, mul };
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op);

class zero_polynomial_error : public std::domain_error {
public:
  zero_polynomial_error() : std::domain_error("zero polynomial has no finite root count") {}
};

class endpoint_root_error : public std::domain_error {
public:
  explicit endpoint_root_error(const std::string& which)
      : std::domain_error("polynomial vanishes at interval endpoint " + which) {}
};

/// Number of distinct real roots of p in the open interval (lo, hi).
/// Requires lo < hi, p nonzero, p(lo) != 0 and p(hi) != 0.
int sturm_root_count(const Polynomial& p, const Rational& lo, const Rational& hi);

class zero_denominator_error : public std::domain_error {
public:
  zero_denominator_error() : std::domain_error("rational function with zero denominator") {}
};

/// num/den with gcd(num, den) = 1 and den monic. Zero is 0/1.
class RationalFunction {
public:
  RationalFunction() : den_(Polynomial::constant(Rational(1))) {}
  RationalFunction(const Polynomial& p)  // NOLINT(google-explicit-constructor)
      : num_(p), den_(Polynomial::constant(Rational(1))) {}
  RationalFunction(const Rational& c)  // NOLINT(google-explicit-constructor)
      : RationalFunction(Polynomial::constant(c)) {}
  RationalFunction(Polynomial num, Polynomial den);

  [[nodiscard]] const Polynomial& num() const { return num_; }
  [[nodiscard]] const Polynomial& den() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  /// True when both num and den are constants.
  [[nodiscard]] bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  /// Throws std::domain_error at a pole.
  [[nodiscard]] Rational operator()(const Rational& z0) const;
  [[nodiscard]] RationalFunction derivative() const;
  [[nodiscard]] RationalFunction reciprocal() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
  Polynomial num_;
  Polynomial den_;
};

RationalFunction rf_canonicalize(const Polynomial& num, const Polynomial& den);

}  // namespace ratext::exact
