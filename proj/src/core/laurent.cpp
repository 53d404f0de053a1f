#include "laurent.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qbx {

LaurentPoly::LaurentPoly(long value) {
  if (value != 0)
    coeffs_.emplace_back(value);
}

LaurentPoly::LaurentPoly(const Rational& value) {
  if (sgn(value) != 0) {
    coeffs_.push_back(value);
    coeffs_.back().canonicalize();
  }
}

LaurentPoly LaurentPoly::monomial(const Rational& coeff, int exponent) {
  LaurentPoly p;
  if (sgn(coeff) != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(coeff);
    p.coeffs_.back().canonicalize();
  }
  return p;
}

LaurentPoly LaurentPoly::fromDense(int low, std::vector<Rational> coeffs) {
  LaurentPoly p;
  p.low_ = low;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0)
    coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && sgn(coeffs_[lead]) == 0)
    ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty())
    low_ = 0;
}

bool LaurentPoly::isOne() const {
  return coeffs_.size() == 1 && low_ == 0 && coeffs_[0] == 1;
}

std::size_t LaurentPoly::termCount() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) != 0; }));
}

Rational LaurentPoly::coeff(int exponent) const {
  if (coeffs_.empty() || exponent < low_ || exponent > high())
    return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

LaurentPoly LaurentPoly::shifted(int by) const {
  LaurentPoly p = *this;
  if (!p.coeffs_.empty())
    p.low_ += by;
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_)
    c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.coeffs_.empty())
    return *this;
  if (coeffs_.empty()) {
    *this = rhs;
    return *this;
  }
  const int lo = std::min(low_, rhs.low_);
  const int hi = std::max(high(), rhs.high());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[static_cast<std::size_t>(rhs.low_ - low_) + i] += rhs.coeffs_[i];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  return *this += -rhs;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& c : coeffs_)
    c *= s;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty())
    return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0)
      continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPoly::fromDense(a.low_ + b.low_, std::move(out));
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.coeffs_.size() != b.coeffs_.size())
    return a.coeffs_.size() < b.coeffs_.size();
  if (a.low_ != b.low_)
    return a.low_ < b.low_;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0)
      return c < 0;
  }
  return false;
}

std::size_t LaurentPoly::hash() const {
  std::size_t h = std::hash<int>{}(low_) ^ (coeffs_.size() * 0x9e3779b97f4a7c15ULL);
  for (const auto& c : coeffs_) {
    const std::size_t n = mpz_get_si(c.get_num_mpz_t()) * 31 + mpz_get_si(c.get_den_mpz_t());
    h ^= n + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string rationalToString(const Rational& r) {
  return r.get_str();
}

std::string LaurentPoly::toString(const std::string& var) const {
  if (coeffs_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = high(); e >= low_; --e) {
    const Rational& c = coeffs_[static_cast<std::size_t>(e - low_)];
    if (sgn(c) == 0)
      continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0)
        os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << rationalToString(mag);
      continue;
    }
    if (mag != 1)
      os << rationalToString(mag) << '*';
    os << var;
    if (e != 1)
      os << '^' << e;
  }
  return os.str();
}

} // namespace qbx
