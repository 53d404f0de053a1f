#include "ncalg.hpp"

#include "errors.hpp"
#include "expr.hpp"
#include "linspan.hpp"
#include "presentation_io.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace qbx {

std::vector<Relator> definingRelators(const Presentation& pres) {
  std::vector<Relator> out;
  for (const auto& s : pres.swaps) {
    NCPoly r = NCPoly::monomial(Word{{s.left, 1}, {s.right, 1}});
    r.add(Word{{s.right, 1}, {s.left, 1}}, -s.factor);
    out.push_back({pres.gen(s.left).name + "*" + pres.gen(s.right).name + " - (" +
                       s.factor.toString() + ")*" + pres.gen(s.right).name + "*" +
                       pres.gen(s.left).name,
                   r, false});
  }
  for (const auto& s : pres.straighten) {
    NCPoly r = NCPoly::monomial(Word{{s.first, 1}, {s.second, 1}}) - s.result;
    out.push_back({pres.gen(s.first).name + "*" + pres.gen(s.second).name + " - (" +
                       formatPoly(s.result, pres) + ")",
                   r, false});
  }
  for (const auto& s : pres.serre)
    out.push_back({formatPoly(s, pres), s, true});
  return out;
}

const AlgebraMap& changeGeneratorsMap() {
  static const AlgebraMap map = [] {
    const AlgebraPtr src = builtinAlgebra("affine_original");
    const AlgebraPtr dst = builtinAlgebra("affine_new");
    const auto& sp = src->presentation();
    std::vector<NCPoly> images(sp.size());
    const auto set = [&](const char* from, const char* to) {
      images[static_cast<std::size_t>(sp.require(from))] = parseExpression(to, dst->presentation(), dst.get());
    };
    set("K0", "c*K^-1");
    set("K1", "K");
    set("E0", "E0");
    set("E1", "E1");
    set("F0", "c^-1*K*F0");
    set("F1", "K^-1*F1");
    return AlgebraMap(src, dst, std::move(images));
  }();
  return map;
}

NCPoly changeGenerators(const NCPoly& p) { return changeGeneratorsMap().apply(p); }

Grading::Grading(const Presentation& pres)
    : cls_(pres.size(), -1), sign_(pres.size(), 0) {
  const auto isEF = [&](int g) {
    return pres.gen(g).sort == Sort::Raising || pres.gen(g).sort == Sort::Lowering;
  };
  bool ok = true;
  for (const auto& r : pres.straighten) {
    bool paired = false;
    for (const auto& [w, c] : r.result.terms())
      paired = paired || std::none_of(w.begin(), w.end(), [&](const Letter& l) { return isEF(l.gen); });
    if (!paired)
      continue;
    const int x = r.first, y = r.second;
    if (cls_[x] < 0 && cls_[y] < 0) {
      cls_[x] = cls_[y] = classes_++;
    } else if (cls_[x] < 0) {
      cls_[x] = cls_[y];
    } else if (cls_[y] < 0) {
      cls_[y] = cls_[x];
    } else if (cls_[x] != cls_[y]) {
      ok = false;
    }
  }
  for (int g = 0; g < static_cast<int>(pres.size()); ++g) {
    if (isEF(g)) {
      if (cls_[g] < 0)
        cls_[g] = classes_++;
      sign_[g] = pres.gen(g).sort == Sort::Raising ? 1 : -1;
    }
  }
  if (ok && homogeneous(pres))
    return;
  std::fill(cls_.begin(), cls_.end(), -1);
  std::fill(sign_.begin(), sign_.end(), 0);
  classes_ = 0;
}

bool Grading::homogeneous(const Presentation& pres) const {
  for (const auto& r : pres.straighten) {
    const auto lhs = weight(Word{{r.first, 1}, {r.second, 1}});
    for (const auto& [w, c] : r.result.terms())
      if (weight(w) != lhs)
        return false;
  }
  for (const auto& s : pres.serre) {
    std::optional<std::vector<int>> first;
    for (const auto& [w, c] : s.terms()) {
      if (first && weight(w) != *first)
        return false;
      first = weight(w);
    }
  }
  return true;
}

std::vector<int> Grading::weight(const Word& w) const {
  std::vector<int> out(static_cast<std::size_t>(classes_), 0);
  for (const auto& l : w) {
    const auto g = static_cast<std::size_t>(l.gen);
    if (sign_[g] != 0)
      out[static_cast<std::size_t>(cls_[g])] += sign_[g] * l.exp;
  }
  return out;
}

namespace {

bool pureSort(const NCPoly& p, const Presentation& pres, Sort sort) {
  for (const auto& [w, c] : p.terms())
    for (const auto& l : w)
      if (pres.gen(l.gen).sort != sort)
        return false;
  return true;
}

bool isGroupLetter(const Letter& l, const Presentation& pres) {
  return pres.gen(l.gen).sort == Sort::Central || pres.gen(l.gen).sort == Sort::Cartan;
}

// Leading run of central/cartan letters.
Word groupPrefix(const Word& w, const Presentation& pres) {
  Word out;
  for (const auto& l : w) {
    if (!isGroupLetter(l, pres))
      break;
    out.push_back(l);
  }
  return out;
}

bool groupFree(const NCPoly& p, const Presentation& pres) {
  for (const auto& [w, c] : p.terms())
    for (const auto& l : w)
      if (isGroupLetter(l, pres))
        return false;
  return true;
}

bool proportional(const NCPoly& a, const NCPoly& b) {
  if (a.isZero() || b.isZero())
    return a.isZero() && b.isZero();
  const auto& [w, c] = *b.terms().begin();
  return a == b * (a.coeff(w) / c);
}

std::vector<int> plus(std::vector<int> a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] += b[i];
  return a;
}

} // namespace

bool serreIdealMembership(const NCPoly& p, const Algebra& alg, int maxDegree) {
  const NCPoly target = alg.normalForm(p);
  if (target.degree() > maxDegree)
    fail(ErrorKind::Domain, "element degree " + std::to_string(target.degree()) +
                                " exceeds the membership bound " + std::to_string(maxDegree));
  if (target.isZero())
    return true;
  const auto& pres = alg.presentation();
  // Group-like letters are units: a prefix shared by every term comes off and
  // its degree comes off the bound.
  if (const Word g = groupPrefix(target.terms().begin()->first, pres); !g.empty()) {
    const bool shared = std::all_of(target.terms().begin(), target.terms().end(),
                                    [&](const auto& t) { return groupPrefix(t.first, pres) == g; });
    if (shared)
      return serreIdealMembership(alg.multiply(NCPoly::monomial(alg.inverseWord(g)), target), alg,
                                  maxDegree - wordDegree(g));
  }
  const Grading grading(pres);
  std::set<std::vector<int>> weights;
  std::set<Word, WordLess> prefixes;
  for (const auto& [w, c] : target.terms()) {
    weights.insert(grading.weight(w));
    prefixes.insert(groupPrefix(w, pres));
  }

  const std::vector<Word> groups = enumerateGroupWords(alg, maxDegree);
  const std::vector<Word> tri = enumerateTriangularWords(alg, maxDegree);

  std::vector<NCPoly> serre;
  for (const auto& raw : pres.serre)
    if (NCPoly s = alg.normalForm(raw); !s.isZero())
      serre.push_back(std::move(s));

  // Products u*s*v, each with its degree; the group-like prefix is added last.
  std::vector<std::pair<NCPoly, int>> products;
  // When every relator lives purely among the raising or purely among the
  // lowering letters, the ideal is spanned by g*e*s*e'*f and g*e*f*s*f' with
  // e, e' raising words and f, f' lowering words.
  // That also needs x*s to be a multiple of s*x for every letter x of the
  // opposite sort, which fails when the relator coefficients do not match the
  // cartan weights; the general enumeration below covers that case.
  const bool triangular = std::all_of(serre.begin(), serre.end(), [&](const NCPoly& s) {
    const bool raising = pureSort(s, pres, Sort::Raising);
    if (!raising && !pureSort(s, pres, Sort::Lowering))
      return false;
    for (int x = 0; x < static_cast<int>(pres.size()); ++x)
      if (pres.gen(x).sort == (raising ? Sort::Lowering : Sort::Raising) &&
          !proportional(alg.multiply(alg.generator(x), s), alg.multiply(s, alg.generator(x))))
        return false;
    return true;
  });
  if (triangular) {
    const auto allOf = [&](const Word& w, Sort sort) {
      return std::all_of(w.begin(), w.end(), [&](const Letter& l) { return pres.gen(l.gen).sort == sort; });
    };
    std::vector<Word> up, down;
    for (const auto& w : tri) {
      if (allOf(w, Sort::Raising))
        up.push_back(w);
      if (allOf(w, Sort::Lowering))
        down.push_back(w);
    }
    for (const auto& s : serre) {
      const bool raising = pureSort(s, pres, Sort::Raising);
      const int ds = s.degree();
      const std::vector<int> ws = grading.weight(s.terms().begin()->first);
      // raising: e * s * e' * f; lowering: e * f * s * f'
      const std::vector<Word>& middle = raising ? up : down;
      for (const auto& a : up) {
        const int da = wordDegree(a);
        if (da + ds > maxDegree)
          break;
        for (const auto& b : middle) {
          const int db = wordDegree(b);
          if (da + ds + db > maxDegree)
            break;
          for (const auto& c : down) {
            const int d = da + ds + db + wordDegree(c);
            if (d > maxDegree)
              break;
            if (!weights.count(plus(plus(plus(grading.weight(a), ws), grading.weight(b)), grading.weight(c))))
              continue;
            const NCPoly A = NCPoly::monomial(a), B = NCPoly::monomial(b), C = NCPoly::monomial(c);
            products.emplace_back(raising ? alg.multiply(alg.multiply(alg.multiply(A, s), B), C)
                                          : alg.multiply(alg.multiply(alg.multiply(A, B), s), C),
                                  d);
          }
        }
      }
    }
  } else {
    for (const auto& s : serre) {
      const int ds = s.degree();
      const std::vector<int> ws = grading.weight(s.terms().begin()->first);
      for (const auto& u : tri) {
        const int du = wordDegree(u);
        if (du + ds > maxDegree)
          break;
        const NCPoly us = alg.multiply(NCPoly::monomial(u), s);
        const std::vector<int> wu = grading.weight(u);
        for (const auto& v : tri) {
          const int dv = wordDegree(v);
          if (du + ds + dv > maxDegree)
            break;
          if (!weights.count(plus(plus(grading.weight(v), wu), ws)))
            continue;
          products.emplace_back(alg.multiply(us, NCPoly::monomial(v)), du + ds + dv);
        }
      }
    }
  }

  // If no product has a group-like letter, g*x is supported on words with
  // prefix g and only the prefixes of the target can contribute.
  const bool split = std::all_of(products.begin(), products.end(),
                                 [&](const auto& x) { return groupFree(x.first, pres); });
  LinearSpan<Word, WordLess> span;
  for (const auto& [x, degree] : products) {
    if (split) {
      for (const auto& g : prefixes)
        if (wordDegree(g) + degree <= maxDegree)
          span.add(alg.multiply(NCPoly::monomial(g), x).terms());
      continue;
    }
    for (const auto& g : groups) {
      if (wordDegree(g) + degree > maxDegree)
        break;   // sorted by degree
      span.add(alg.multiply(NCPoly::monomial(g), x).terms());
    }
  }
  return span.contains(target.terms());
}

Report localConfluenceReport(const Algebra& alg, int maxDegree) {
  Report report;
  report.check = "confluence";
  report.degree = maxDegree;
  const auto& pres = alg.presentation();
  std::vector<Letter> letters;
  for (int g = 0; g < static_cast<int>(pres.size()); ++g) {
    letters.push_back({g, 1});
    if (pres.gen(g).invertible)
      letters.push_back({g, -1});
  }
  std::vector<Word> layer{Word{}};
  for (int len = 1; len <= maxDegree; ++len) {
    std::vector<Word> next;
    next.reserve(layer.size() * letters.size());
    for (const auto& w : layer)
      for (const auto& l : letters) {
        Word x = w;
        x.push_back(l);
        next.push_back(std::move(x));
      }
    layer = std::move(next);
    for (const auto& w : layer) {
      std::optional<NCPoly> reference;
      std::size_t refPos = 0;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (!alg.reducibleAt(w, i))
          continue;
        NCPoly nf = alg.normalForm(alg.rewriteAt(w, i));
        if (!reference) {
          reference = std::move(nf);
          refPos = i;
          continue;
        }
        report.expect(nf == *reference, [&] {
          return Failure{formatWord(w, pres) + " at positions " + std::to_string(refPos) +
                             " and " + std::to_string(i),
                         formatPoly(*reference, pres), formatPoly(nf, pres)};
        });
      }
    }
  }
  return report;
}

} // namespace qbx
