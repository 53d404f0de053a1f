#pragma once

#include "laurent.hpp"

#include <string>

namespace qbx {

// Exact element of Q(q): num/den in canonical form.
//
// Canonical form: gcd(num, den) = 1 after clearing powers of q, and den has
// lowest exponent 0 with coefficient 1 (any monomial factor lives in num).
// With that convention two scalars are equal iff their fields are equal.
class QScalar {
public:
  QScalar() = default;
  QScalar(long value) : num_(value) {}                   // NOLINT
  QScalar(const Rational& value) : num_(value) {}        // NOLINT
  QScalar(LaurentPoly poly) : num_(std::move(poly)) {}   // NOLINT

  static QScalar normalize(const LaurentPoly& num, const LaurentPoly& den);
  static QScalar q(int exponent = 1) { return QScalar(LaurentPoly::q(exponent)); }

  const LaurentPoly& num() const noexcept { return num_; }
  const LaurentPoly& den() const noexcept { return den_; }

  bool isZero() const noexcept { return num_.isZero(); }
  bool isOne() const { return num_.isOne() && den_.isOne(); }
  bool isPolynomial() const { return den_.isOne(); }

  QScalar operator-() const;
  QScalar inverse() const;
  QScalar pow(long exponent) const;

  QScalar& operator+=(const QScalar& rhs);
  QScalar& operator-=(const QScalar& rhs);
  QScalar& operator*=(const QScalar& rhs);
  QScalar& operator/=(const QScalar& rhs);

  friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
  friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
  friend QScalar operator*(QScalar a, const QScalar& b) { return a *= b; }
  friend QScalar operator/(QScalar a, const QScalar& b) { return a /= b; }

  friend bool operator==(const QScalar& a, const QScalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }
  friend bool operator<(const QScalar& a, const QScalar& b) {
    return a.den_ == b.den_ ? a.num_ < b.num_ : a.den_ < b.den_;
  }

  std::size_t hash() const { return num_.hash() * 1000003u ^ den_.hash(); }

  // Parseable text, e.g. "1/(q - q^-1)" or "q^2 + 1 + q^-2".
  std::string toString() const;

private:
  LaurentPoly num_;
  LaurentPoly den_ = LaurentPoly(1);
};

// Polynomial gcd of two Laurent polynomials after clearing q-powers; monic,
// lowest exponent 0. gcd(0, p) is p made monic.
LaurentPoly polyGcd(const LaurentPoly& a, const LaurentPoly& b);

// Exact division a / b where b divides a as a Laurent polynomial. Throws a
// domain error if the division is not exact.
LaurentPoly exactDivide(const LaurentPoly& a, const LaurentPoly& b);

// Factor m = ±q^s such that den*m reads symmetrically ("q - q^-1" rather than
// "1 - q^2") with positive leading coefficient. Display only.
LaurentPoly displayBalance(const LaurentPoly& den);

// [n]_q = (q^n - q^-n)/(q - q^-1) as a Laurent polynomial.
QScalar qint(long n);

enum class BinomialBase { Q, QInverse };

// Gaussian binomial [a choose r] in base q or q^-1. This is the closed
// formula; its agreement with the coproduct expansion of e0^a / f0^a is
// established in the tests.
QScalar qbinom(long a, long r, BinomialBase base);

} // namespace qbx
