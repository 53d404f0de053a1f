#pragma once

#include "qscalar.hpp"

#include <cstdlib>
#include <map>
#include <vector>

namespace qbx {

// One run g^exp of a generator. Negative exponents only for invertibles.
struct Letter {
  int gen = 0;
  int exp = 1;

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.gen == b.gen && a.exp == b.exp;
  }
  friend bool operator!=(const Letter& a, const Letter& b) { return !(a == b); }
};

using Word = std::vector<Letter>;

inline int wordDegree(const Word& w) {
  int d = 0;
  for (const auto& l : w)
    d += std::abs(l.exp);
  return d;
}

// Basis enumeration order: total degree, then lexicographic on (gen, exp).
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    const int da = wordDegree(a);
    const int db = wordDegree(b);
    if (da != db)
      return da < db;
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i].gen != b[i].gen)
        return a[i].gen < b[i].gen;
      if (a[i].exp != b[i].exp)
        return a[i].exp < b[i].exp;
    }
    return a.size() < b.size();
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = w.size();
    for (const auto& l : w)
      h = h * 1000003u ^ (static_cast<std::size_t>(l.gen) * 131u + static_cast<std::size_t>(l.exp + 4096));
    return h;
  }
};

// Concatenate, merging the runs at the seam.
Word concat(const Word& a, const Word& b);

// Merge adjacent runs of the same generator and drop zero exponents.
Word mergeRuns(Word w);

// Finite formal sum of words with QScalar coefficients. No zero coefficient is
// ever stored. Terms iterate in basis order.
class NCPoly {
public:
  using Terms = std::map<Word, QScalar, WordLess>;

  NCPoly() = default;
  NCPoly(const QScalar& scalar);   // NOLINT
  NCPoly(long scalar) : NCPoly(QScalar(scalar)) {}   // NOLINT
  static NCPoly monomial(const Word& w, const QScalar& coeff = QScalar(1));

  const Terms& terms() const noexcept { return terms_; }
  bool isZero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  // Coefficient of the empty word if that is the only term, else nullopt-like
  // check via isScalar().
  bool isScalar() const;
  QScalar coeff(const Word& w) const;

  void add(const Word& w, const QScalar& c);
  void addScaled(const NCPoly& p, const QScalar& c);

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& rhs);
  NCPoly& operator-=(const NCPoly& rhs);
  NCPoly& operator*=(const QScalar& s);

  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const QScalar& s) { return a *= s; }
  friend NCPoly operator*(const QScalar& s, NCPoly a) { return a *= s; }

  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

  // Highest total word degree; 0 for scalars and zero.
  int degree() const;

private:
  Terms terms_;
};

} // namespace qbx
