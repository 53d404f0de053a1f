#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace qbx {

using Rational = mpq_class;

// Finitely supported Laurent polynomial in q with exact rational coefficients.
// Stored densely from the lowest exponent; both end coefficients are nonzero.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(long value);              // NOLINT: implicit constant
  LaurentPoly(const Rational& value);   // NOLINT: implicit constant

  static LaurentPoly monomial(const Rational& coeff, int exponent);
  static LaurentPoly q(int exponent = 1) { return monomial(1, exponent); }

  bool isZero() const noexcept { return coeffs_.empty(); }
  bool isOne() const;
  bool isConstant() const noexcept { return coeffs_.empty() || (coeffs_.size() == 1 && low_ == 0); }
  bool isMonomial() const noexcept { return coeffs_.size() == 1; }
  std::size_t termCount() const;

  // Exponent range; only meaningful for nonzero polynomials.
  int low() const noexcept { return low_; }
  int high() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }

  Rational coeff(int exponent) const;
  const Rational& lowCoeff() const { return coeffs_.front(); }
  const Rational& highCoeff() const { return coeffs_.back(); }

  // Dense view, index 0 is exponent low().
  const std::vector<Rational>& dense() const noexcept { return coeffs_; }

  LaurentPoly shifted(int by) const;
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Rational& s);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
  // Arbitrary but total order, used for deterministic containers.
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

  std::size_t hash() const;

  // Human-readable text in descending exponents, e.g. "q^2 + 1 + q^-2".
  std::string toString(const std::string& var = "q") const;

  // Build from dense coefficients starting at `low`, trimming zeros.
  static LaurentPoly fromDense(int low, std::vector<Rational> coeffs);

private:
  void trim();

  int low_ = 0;
  std::vector<Rational> coeffs_;
};

std::string rationalToString(const Rational& r);

} // namespace qbx
