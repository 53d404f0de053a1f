#pragma once

#include "word.hpp"

#include <map>
#include <vector>

namespace qbx {

using Legs = std::vector<Word>;

struct LegsLess {
  bool operator()(const Legs& a, const Legs& b) const {
    WordLess less;
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (less(a[i], b[i]))
        return true;
      if (less(b[i], a[i]))
        return false;
    }
    return a.size() < b.size();
  }
};

// Rank-r formal sum of r-tuples of words. Each leg is kept in normal form by
// whoever builds the tensor; this class only does bookkeeping.
class TensorPoly {
public:
  using Terms = std::map<Legs, QScalar, LegsLess>;

  explicit TensorPoly(std::size_t rank = 2) : rank_(rank) {}

  std::size_t rank() const noexcept { return rank_; }
  const Terms& terms() const noexcept { return terms_; }
  bool isZero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  void add(const Legs& legs, const QScalar& c);
  void addScaled(const TensorPoly& t, const QScalar& c);

  QScalar coeff(const Legs& legs) const;

  TensorPoly& operator+=(const TensorPoly& rhs) { addScaled(rhs, 1); return *this; }
  TensorPoly& operator-=(const TensorPoly& rhs) { addScaled(rhs, -1); return *this; }
  friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }

  friend bool operator==(const TensorPoly& a, const TensorPoly& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const TensorPoly& a, const TensorPoly& b) { return !(a == b); }

private:
  std::size_t rank_;
  Terms terms_;
};

inline void TensorPoly::add(const Legs& legs, const QScalar& c) {
  if (c.isZero())
    return;
  auto [it, inserted] = terms_.try_emplace(legs, c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero())
      terms_.erase(it);
  }
}

inline void TensorPoly::addScaled(const TensorPoly& t, const QScalar& c) {
  for (const auto& [legs, v] : t.terms())
    add(legs, v * c);
}

inline QScalar TensorPoly::coeff(const Legs& legs) const {
  auto it = terms_.find(legs);
  return it == terms_.end() ? QScalar() : it->second;
}

} // namespace qbx
