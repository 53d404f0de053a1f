#include "algebra.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <functional>
#include <set>

namespace qbx {

namespace {

int rank(Sort s) { return static_cast<int>(s); }

bool validIdentifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

bool lexLess(const RewriteMeasure& a, const RewriteMeasure& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

Algebra::Algebra(Presentation presentation) : pres_(std::move(presentation)) {
  validate();
  buildTable();
  for (const auto& r : pres_.straighten) {
    const RewriteMeasure lhs = measure(Word{{r.first, 1}, {r.second, 1}});
    for (const auto& [w, c] : r.result.terms())
      if (!lexLess(measure(w), lhs))
        fail(ErrorKind::Structure, "straightening rule for " + gen(r.first).name + "*" +
                                       gen(r.second).name + " does not decrease the rewrite order");
  }
}

void Algebra::validate() const {
  std::set<std::string> names;
  for (const auto& g : pres_.alphabet) {
    if (!validIdentifier(g.name) || g.name == "q" || g.name == "qint")
      fail(ErrorKind::Structure, "invalid generator name '" + g.name + "'");
    if (!names.insert(g.name).second)
      fail(ErrorKind::Structure, "duplicate generator '" + g.name + "'");
    if (g.invertible && (g.sort == Sort::Raising || g.sort == Sort::Lowering))
      fail(ErrorKind::Structure, "raising/lowering generator '" + g.name + "' cannot be invertible");
  }
  const auto inRange = [&](int i) { return i >= 0 && static_cast<std::size_t>(i) < pres_.size(); };
  for (const auto& s : pres_.swaps)
    if (!inRange(s.left) || !inRange(s.right) || s.left == s.right || s.factor.isZero())
      fail(ErrorKind::Structure, "malformed swap rule");
  for (const auto& r : pres_.straighten) {
    if (!inRange(r.first) || !inRange(r.second) || r.first == r.second)
      fail(ErrorKind::Structure, "malformed straightening rule");
    if (gen(r.first).invertible || gen(r.second).invertible)
      fail(ErrorKind::Structure, "straightening rules must involve non-invertible generators");
  }
  // Serre relators must be homogeneous in every raising/lowering generator.
  for (const auto& s : pres_.serre) {
    std::optional<std::vector<int>> signature;
    for (const auto& [w, c] : s.terms()) {
      std::vector<int> counts(pres_.size(), 0);
      for (const auto& l : w)
        if (gen(l.gen).sort == Sort::Raising || gen(l.gen).sort == Sort::Lowering)
          counts[static_cast<std::size_t>(l.gen)] += l.exp;
      if (signature && *signature != counts)
        fail(ErrorKind::Structure, "Serre relator is not homogeneous");
      signature = counts;
    }
  }
}

bool Algebra::outOfOrder(int x, int y) const {
  if (x == y)
    return false;
  const int rx = rank(gen(x).sort);
  const int ry = rank(gen(y).sort);
  if (rx != ry)
    return rx > ry;
  return rx <= rank(Sort::Cartan) && x > y;
}

void Algebra::buildTable() {
  const std::size_t n = pres_.size();
  table_.assign(n * n, Rule{});
  for (int x = 0; x < static_cast<int>(n); ++x) {
    for (int y = 0; y < static_cast<int>(n); ++y) {
      Rule& r = table_[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)];
      if (x == y) {
        r.action = Action::Merge;
        continue;
      }
      const StraightenRule* straight = nullptr;
      for (const auto& s : pres_.straighten)
        if (s.first == x && s.second == y)
          straight = &s;
      if (!outOfOrder(x, y)) {
        if (straight)
          fail(ErrorKind::Structure, "straightening rule " + gen(x).name + "*" + gen(y).name +
                                         " is already in normal order");
        continue;
      }
      const SwapRule* swap = nullptr;
      bool reversed = false;
      for (const auto& s : pres_.swaps) {
        if (s.left == x && s.right == y) {
          swap = &s;
          reversed = false;
        } else if (s.left == y && s.right == x) {
          swap = &s;
          reversed = true;
        }
      }
      if (swap && straight)
        fail(ErrorKind::Structure, "conflicting rules for " + gen(x).name + "*" + gen(y).name);
      if (swap) {
        r.action = Action::Swap;
        r.factor = reversed ? swap->factor.inverse() : swap->factor;
      } else if (straight) {
        r.action = Action::Straighten;
        r.result = &straight->result;
      } else if (gen(x).sort == Sort::Central || gen(y).sort == Sort::Central ||
                 (gen(x).sort == Sort::Cartan && gen(y).sort == Sort::Cartan)) {
        r.action = Action::Commute;
      } else {
        fail(ErrorKind::Structure, "no rule orders " + gen(x).name + "*" + gen(y).name +
                                       " in presentation " + pres_.name);
      }
    }
  }
}

void Algebra::checkLetter(const Letter& l) const {
  if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= pres_.size())
    fail(ErrorKind::Lookup, "generator index out of range");
  if (l.exp < 0 && !gen(l.gen).invertible)
    fail(ErrorKind::Domain, "negative power of non-invertible generator " + gen(l.gen).name);
}

bool Algebra::reducibleAt(const Word& w, std::size_t pos) const {
  return pos + 1 < w.size() && rule(w[pos].gen, w[pos + 1].gen).action != Action::None;
}

std::size_t Algebra::firstReducible(const Word& w) const {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (rule(w[i].gen, w[i + 1].gen).action != Action::None)
      return i;
  return std::string::npos;
}

bool Algebra::isNormalWord(const Word& w) const {
  for (const auto& l : w)
    if (l.exp == 0)
      return false;
  return firstReducible(w) == std::string::npos;
}

NCPoly Algebra::rewriteAt(const Word& w, std::size_t pos) const {
  const Letter a = w.at(pos);
  const Letter b = w.at(pos + 1);
  const Rule& r = rule(a.gen, b.gen);
  Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  Word suffix(w.begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.end());
  const auto assemble = [&](const Word& middle) {
    Word out = prefix;
    out.insert(out.end(), middle.begin(), middle.end());
    out.insert(out.end(), suffix.begin(), suffix.end());
    return mergeRuns(std::move(out));
  };
  switch (r.action) {
  case Action::None:
    return NCPoly::monomial(w);
  case Action::Merge:
    return NCPoly::monomial(assemble({{a.gen, a.exp + b.exp}}));
  case Action::Commute:
    return NCPoly::monomial(assemble({b, a}));
  case Action::Swap:
    return NCPoly::monomial(assemble({b, a}), r.factor.pow(static_cast<long>(a.exp) * b.exp));
  case Action::Straighten: {
    if (a.exp <= 0 || b.exp <= 0)
      fail(ErrorKind::Domain, "straightening applied to negative powers");
    NCPoly out;
    for (const auto& [u, c] : r.result->terms()) {
      Word middle;
      if (a.exp > 1)
        middle.push_back({a.gen, a.exp - 1});
      middle.insert(middle.end(), u.begin(), u.end());
      if (b.exp > 1)
        middle.push_back({b.gen, b.exp - 1});
      out.add(assemble(middle), c);
    }
    return out;
  }
  }
  return {};
}

NCPoly Algebra::normalWord(const Word& input) const {
  for (const auto& l : input)
    checkLetter(l);
  Word w = mergeRuns(input);
  const std::size_t pos = firstReducible(w);
  if (pos == std::string::npos)
    return NCPoly::monomial(w);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(w);
    if (it != cache_.end())
      return it->second;
  }
  const NCPoly step = rewriteAt(w, pos);
#ifndef NDEBUG
  const RewriteMeasure before = measure(w);
  for (const auto& [u, c] : step.terms())
    assert(lexLess(measure(u), before) && "rewrite must decrease the termination measure");
#endif
  NCPoly out;
  for (const auto& [u, c] : step.terms())
    out.addScaled(normalWord(u), c);
  std::lock_guard<std::mutex> lock(mutex_);
  cache_.emplace(std::move(w), out);
  return out;
}

NCPoly Algebra::normalForm(const NCPoly& p) const {
  NCPoly out;
  for (const auto& [w, c] : p.terms())
    out.addScaled(normalWord(w), c);
  return out;
}

NCPoly Algebra::multiplyWords(const Word& a, const Word& b) const {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return normalWord(w);
}

NCPoly Algebra::multiply(const NCPoly& a, const NCPoly& b) const {
  NCPoly out;
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms())
      out.addScaled(multiplyWords(u, v), cu * cv);
  return out;
}

NCPoly Algebra::power(const NCPoly& p, int n) const {
  if (n < 0)
    fail(ErrorKind::Domain, "negative power of a polynomial");
  NCPoly out(1);
  for (int i = 0; i < n; ++i)
    out = multiply(out, p);
  return out;
}

RewriteMeasure Algebra::measure(const Word& w) const {
  RewriteMeasure m{0, 0, 0, 0};
  const auto isEF = [&](int g) {
    return gen(g).sort == Sort::Raising || gen(g).sort == Sort::Lowering;
  };
  for (std::size_t i = 0; i < w.size(); ++i) {
    const long wi = std::abs(w[i].exp);
    const Sort si = gen(w[i].gen).sort;
    if (isEF(w[i].gen))
      m[0] += wi;
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      const long wj = std::abs(w[j].exp);
      const Sort sj = gen(w[j].gen).sort;
      if (si == Sort::Lowering && sj == Sort::Raising)
        m[1] += wi * wj;
      else if (isEF(w[i].gen) && sj == Sort::Cartan)
        m[2] += wi * wj;
      else if (outOfOrder(w[i].gen, w[j].gen))
        m[3] += wi * wj;
    }
  }
  return m;
}

bool Algebra::isGroupLikeWord(const Word& w) const {
  return std::all_of(w.begin(), w.end(), [&](const Letter& l) { return gen(l.gen).invertible; });
}

Word Algebra::inverseWord(const Word& w) const {
  if (!isGroupLikeWord(w))
    fail(ErrorKind::Domain, "word is not invertible");
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->gen, -it->exp});
  return out;
}

NCPoly Algebra::generator(int index, int exp) const {
  Letter l{index, exp};
  checkLetter(l);
  return NCPoly::monomial(Word{l});
}

std::size_t Algebra::cacheSize() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return cache_.size();
}

NCPoly freeMultiply(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms())
      out.add(concat(u, v), cu * cv);
  return out;
}

AlgebraMap::AlgebraMap(AlgebraPtr source, AlgebraPtr target, std::vector<NCPoly> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_->presentation().size())
    fail(ErrorKind::Structure, "algebra map needs one image per generator");
  inverseImages_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    images_[i] = target_->normalForm(images_[i]);
    if (!source_->gen(static_cast<int>(i)).invertible)
      continue;
    const NCPoly& img = images_[i];
    if (img.size() != 1 || !target_->isGroupLikeWord(img.terms().begin()->first))
      fail(ErrorKind::Structure, "image of invertible generator must be a group-like monomial");
    const auto& [w, c] = *img.terms().begin();
    inverseImages_[i] = target_->normalWord(target_->inverseWord(w)) * c.inverse();
  }
}

NCPoly AlgebraMap::applyWord(const Word& w) const {
  NCPoly out(1);
  for (const auto& l : w) {
    const auto& img = l.exp > 0 ? images_.at(static_cast<std::size_t>(l.gen))
                                : inverseImages_.at(static_cast<std::size_t>(l.gen));
    for (int k = 0; k < std::abs(l.exp); ++k)
      out = target_->multiply(out, img);
  }
  return out;
}

NCPoly AlgebraMap::apply(const NCPoly& p) const {
  NCPoly out;
  for (const auto& [w, c] : p.terms())
    out.addScaled(applyWord(w), c);
  return out;
}

namespace {

struct BasisParts {
  std::vector<int> groupGens, raising, lowering;
};

BasisParts basisParts(const Algebra& alg) {
  const auto& pres = alg.presentation();
  BasisParts parts;
  for (int r = 0; r <= rank(Sort::Lowering); ++r)
    for (int i = 0; i < static_cast<int>(pres.size()); ++i) {
      if (rank(pres.gen(i).sort) != r)
        continue;
      switch (pres.gen(i).sort) {
      case Sort::Central:
      case Sort::Cartan: parts.groupGens.push_back(i); break;
      case Sort::Raising: parts.raising.push_back(i); break;
      case Sort::Lowering: parts.lowering.push_back(i); break;
      }
    }
  return parts;
}

// All free words of exactly `len` letters over `gens`, runs merged.
std::vector<Word> freeWords(const std::vector<int>& gens, int len) {
  std::vector<Word> result{Word{}};
  for (int k = 0; k < len; ++k) {
    std::vector<Word> next;
    for (const auto& w : result)
      for (int g : gens) {
        Word x = w;
        x.push_back({g, 1});
        next.push_back(mergeRuns(std::move(x)));
      }
    result = std::move(next);
  }
  return result;
}

} // namespace

std::vector<Word> enumerateGroupWords(const Algebra& alg, int maxDegree) {
  const auto& pres = alg.presentation();
  const BasisParts parts = basisParts(alg);
  std::vector<Word> out;
  const std::function<void(std::size_t, Word, int)> rec = [&](std::size_t idx, Word prefix, int budget) {
    if (idx == parts.groupGens.size()) {
      out.push_back(std::move(prefix));
      return;
    }
    const int g = parts.groupGens[idx];
    const int lo = pres.gen(g).invertible ? -budget : 0;
    for (int e = lo; e <= budget; ++e) {
      Word w = prefix;
      if (e != 0)
        w.push_back({g, e});
      rec(idx + 1, std::move(w), budget - std::abs(e));
    }
  };
  rec(0, Word{}, maxDegree);
  std::sort(out.begin(), out.end(), WordLess{});
  return out;
}

std::vector<Word> enumerateTriangularWords(const Algebra& alg, int maxDegree) {
  const BasisParts parts = basisParts(alg);
  std::vector<Word> out;
  for (int l1 = 0; l1 <= maxDegree; ++l1) {
    if (parts.raising.empty() && l1 > 0)
      break;
    const std::vector<Word> ups = freeWords(parts.raising, l1);
    for (int l2 = 0; l1 + l2 <= maxDegree; ++l2) {
      if (parts.lowering.empty() && l2 > 0)
        break;
      for (const auto& up : ups)
        for (const auto& down : freeWords(parts.lowering, l2)) {
          Word w = up;
          w.insert(w.end(), down.begin(), down.end());
          out.push_back(std::move(w));
        }
    }
  }
  std::sort(out.begin(), out.end(), WordLess{});
  return out;
}

std::vector<Word> enumerateBasis(const Algebra& alg, int maxDegree) {
  const std::vector<Word> groups = enumerateGroupWords(alg, maxDegree);
  const std::vector<Word> tri = enumerateTriangularWords(alg, maxDegree);
  std::vector<Word> out;
  for (const auto& g : groups)
    for (const auto& t : tri) {
      if (wordDegree(g) + wordDegree(t) > maxDegree)
        break;
      Word w = g;
      w.insert(w.end(), t.begin(), t.end());
      out.push_back(std::move(w));
    }
  std::sort(out.begin(), out.end(), WordLess{});
  return out;
}

} // namespace qbx
