#include "qscalar.hpp"

#include "errors.hpp"

#include <vector>

namespace qbx {

namespace {

using Dense = std::vector<Rational>;

void trimHigh(Dense& p) {
  while (!p.empty() && sgn(p.back()) == 0)
    p.pop_back();
}

// Strip factors of q; the dense vector then has a nonzero constant term.
Dense stripLow(const LaurentPoly& p) {
  return p.dense();
}

void stripLowInPlace(Dense& p) {
  std::size_t lead = 0;
  while (lead < p.size() && sgn(p[lead]) == 0)
    ++lead;
  p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(lead));
}

// Ordinary polynomial long division; returns remainder, writes quotient.
Dense divmod(Dense a, const Dense& b, Dense* quotient) {
  trimHigh(a);
  if (quotient)
    quotient->assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    Rational factor = a.back() / lead;
    if (quotient)
      (*quotient)[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] -= factor * b[i];
    a.pop_back();
    trimHigh(a);
  }
  return a;
}

} // namespace

LaurentPoly polyGcd(const LaurentPoly& a, const LaurentPoly& b) {
  Dense x = stripLow(a);
  Dense y = stripLow(b);
  if (x.size() < y.size())
    std::swap(x, y);
  while (!y.empty()) {
    Dense r = divmod(x, y, nullptr);
    stripLowInPlace(r);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.empty())
    return {};
  const Rational low = x.front();
  for (auto& c : x)
    c /= low;
  return LaurentPoly::fromDense(0, std::move(x));
}

LaurentPoly exactDivide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.isZero())
    fail(ErrorKind::Arithmetic, "division by zero polynomial");
  if (a.isZero())
    return {};
  if (b.isMonomial()) {
    LaurentPoly r = a.shifted(-b.low());
    return r * (1 / b.lowCoeff());
  }
  Dense quotient;
  Dense rem = divmod(a.dense(), b.dense(), &quotient);
  if (!rem.empty())
    fail(ErrorKind::Domain, "polynomial division is not exact");
  return LaurentPoly::fromDense(a.low() - b.low(), std::move(quotient));
}

QScalar QScalar::normalize(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.isZero())
    fail(ErrorKind::Arithmetic, "zero denominator");
  QScalar out;
  if (num.isZero())
    return out;
  if (den.isMonomial()) {
    out.num_ = num.shifted(-den.low()) * (1 / den.lowCoeff());
    return out;
  }
  LaurentPoly g = polyGcd(num, den);
  LaurentPoly n = exactDivide(num, g);
  LaurentPoly d = exactDivide(den, g);
  const int shift = d.low();
  const Rational scale = 1 / d.lowCoeff();
  out.num_ = n.shifted(-shift) * scale;
  out.den_ = d.shifted(-shift) * scale;
  return out;
}

QScalar QScalar::operator-() const {
  QScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

QScalar QScalar::inverse() const {
  if (num_.isZero())
    fail(ErrorKind::Arithmetic, "inverse of zero");
  return normalize(den_, num_);
}

QScalar QScalar::pow(long exponent) const {
  if (exponent < 0)
    return inverse().pow(-exponent);
  QScalar result(1);
  QScalar base = *this;
  while (exponent > 0) {
    if (exponent & 1)
      result *= base;
    exponent >>= 1;
    if (exponent)
      base *= base;
  }
  return result;
}

QScalar& QScalar::operator+=(const QScalar& rhs) {
  if (rhs.num_.isZero())
    return *this;
  if (num_.isZero())
    return *this = rhs;
  if (den_.isOne() && rhs.den_.isOne()) {
    num_ += rhs.num_;
    return *this;
  }
  if (den_ == rhs.den_) {
    *this = normalize(num_ + rhs.num_, den_);
    return *this;
  }
  *this = normalize(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  return *this;
}

QScalar& QScalar::operator-=(const QScalar& rhs) {
  return *this += -rhs;
}

QScalar& QScalar::operator*=(const QScalar& rhs) {
  if (num_.isZero() || rhs.num_.isZero()) {
    *this = QScalar();
    return *this;
  }
  if (rhs.den_.isOne() && den_.isOne()) {
    num_ = num_ * rhs.num_;
    return *this;
  }
  *this = normalize(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

QScalar& QScalar::operator/=(const QScalar& rhs) {
  return *this *= rhs.inverse();
}

LaurentPoly displayBalance(const LaurentPoly& den) {
  if (den.isZero())
    return LaurentPoly(1);
  const int sum = den.low() + den.high();
  const int s = -(sum >= 0 ? sum / 2 : -((-sum + 1) / 2));
  const LaurentPoly shifted = den.shifted(s);
  return LaurentPoly::monomial(sgn(shifted.highCoeff()) < 0 ? -1 : 1, s);
}

std::string QScalar::toString() const {
  if (den_.isOne())
    return num_.toString();
  const LaurentPoly m = displayBalance(den_);
  const LaurentPoly n = num_ * m;
  const LaurentPoly d = den_ * m;
  std::string numText = n.toString();
  if (n.termCount() > 1)
    numText = "(" + numText + ")";
  return numText + "/(" + d.toString() + ")";
}

QScalar qint(long n) {
  if (n < 0)
    return -qint(-n);
  LaurentPoly p;
  for (long k = 0; k < n; ++k)
    p += LaurentPoly::q(static_cast<int>(n - 1 - 2 * k));
  return QScalar(p);
}

QScalar qbinom(long a, long r, BinomialBase base) {
  if (a < 0 || r < 0 || r > a)
    fail(ErrorKind::Domain, "q-binomial requires 0 <= r <= a");
  const int sign = base == BinomialBase::Q ? 1 : -1;
  // Pascal: [n, k] = [n-1, k-1] + x^k [n-1, k]
  std::vector<LaurentPoly> row(static_cast<std::size_t>(r) + 1);
  row[0] = LaurentPoly(1);
  for (long n = 1; n <= a; ++n) {
    for (long k = std::min(n, r); k >= 1; --k) {
      row[static_cast<std::size_t>(k)] =
          row[static_cast<std::size_t>(k - 1)] +
          row[static_cast<std::size_t>(k)].shifted(sign * static_cast<int>(k));
    }
  }
  return QScalar(row[static_cast<std::size_t>(r)]);
}

} // namespace qbx
