#include "word.hpp"

namespace qbx {

Word mergeRuns(Word w) {
  Word out;
  out.reserve(w.size());
  for (const auto& l : w) {
    if (l.exp == 0)
      continue;
    if (!out.empty() && out.back().gen == l.gen) {
      out.back().exp += l.exp;
      if (out.back().exp == 0)
        out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return mergeRuns(std::move(w));
}

NCPoly::NCPoly(const QScalar& scalar) {
  if (!scalar.isZero())
    terms_.emplace(Word{}, scalar);
}

NCPoly NCPoly::monomial(const Word& w, const QScalar& coeff) {
  NCPoly p;
  p.add(w, coeff);
  return p;
}

bool NCPoly::isScalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

QScalar NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? QScalar() : it->second;
}

void NCPoly::add(const Word& w, const QScalar& c) {
  if (c.isZero())
    return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero())
      terms_.erase(it);
  }
}

void NCPoly::addScaled(const NCPoly& p, const QScalar& c) {
  if (c.isZero())
    return;
  const bool one = c.isOne();
  for (const auto& [w, v] : p.terms_)
    add(w, one ? v : v * c);
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& [w, c] : r.terms_)
    c = -c;
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& rhs) {
  for (const auto& [w, c] : rhs.terms_)
    add(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& rhs) {
  for (const auto& [w, c] : rhs.terms_)
    add(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const QScalar& s) {
  if (s.isZero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_)
    c *= s;
  return *this;
}

int NCPoly::degree() const {
  int d = 0;
  for (const auto& [w, c] : terms_)
    d = std::max(d, wordDegree(w));
  return d;
}

} // namespace qbx
