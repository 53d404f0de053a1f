#include "bicross.hpp"

#include "errors.hpp"
#include "expr.hpp"
#include "linspan.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>

namespace qbx {

namespace {

std::string rename(const std::string& name, int (*f)(int)) {
  std::string out = name;
  for (auto& ch : out)
    ch = static_cast<char>(f(static_cast<unsigned char>(ch)));
  return out;
}

// Raising and lowering letters of a word.
int efDegree(const Word& w, const Presentation& pres) {
  int d = 0;
  for (const auto& l : w)
    if (pres.gen(l.gen).sort == Sort::Raising || pres.gen(l.gen).sort == Sort::Lowering)
      d += std::abs(l.exp);
  return d;
}

Word groupPart(const Word& w, const Presentation& pres) {
  Word out;
  for (const auto& l : w) {
    if (pres.gen(l.gen).sort != Sort::Central && pres.gen(l.gen).sort != Sort::Cartan)
      break;
    out.push_back(l);
  }
  return out;
}

bool sameTensor(const TensorPoly& a, const TensorPoly& b) { return a.terms() == b.terms(); }

template <class Cache, class Key, class Compute>
NCPoly memoized(std::mutex& mutex, Cache& cache, const Key& key, Compute&& compute) {
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end())
      return it->second;
  }
  NCPoly value = compute();
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(value)).first->second;
}

} // namespace

Bicross::Bicross(HopfPtr affine, HopfPtr loop, HopfPtr cz)
    : affine_(std::move(affine)), loop_(std::move(loop)), cz_(std::move(cz)) {
  const auto& ap = affine_->presentation();
  const auto& lp = loop_->presentation();
  c_ = ap.require("c");
  czGen_ = cz_->presentation().require("c");
  for (const auto& g : lp.alphabet)
    toAffine_.push_back(ap.require(rename(g.name, std::toupper)));
  for (int g = 0; g < static_cast<int>(ap.size()); ++g)
    toLoop_.push_back(g == c_ ? -1 : lp.require(rename(ap.gen(g).name, std::tolower)));
}

const Bicross& Bicross::builtin() {
  static const Bicross b(builtinHopf("affine_new"), builtinHopf("loop"), builtinHopf("cz"));
  return b;
}

Word Bicross::czWord(int power) const {
  return power == 0 ? Word{} : Word{{czGen_, power}};
}

int Bicross::cPower(const Word& w) const {
  int m = 0;
  for (const auto& l : w)
    m += l.exp;
  return m;
}

NCPoly Bicross::projectLoop(const NCPoly& p) const {
  NCPoly raw;
  for (const auto src = affine_->algebra().normalForm(p); const auto& [w, c] : src.terms()) {
    Word v;
    for (const auto& l : w)
      if (l.gen != c_)
        v.push_back({toLoop_[static_cast<std::size_t>(l.gen)], l.exp});
    raw.add(mergeRuns(v), c);
  }
  return loop_->algebra().normalForm(raw);
}

NCPoly Bicross::sectionJ(const NCPoly& p) const {
  NCPoly out;
  for (const auto src = loop_->algebra().normalForm(p); const auto& [w, c] : src.terms()) {
    Word v;
    for (const auto& l : w)
      v.push_back({toAffine_[static_cast<std::size_t>(l.gen)], l.exp});
    out.add(v, c);
  }
  return out;
}

int Bicross::grade(const Word& w) const {
  int g = 0;
  for (const auto& l : w)
    g += loop_->presentation().gen(l.gen).gradeWeight * std::abs(l.exp);
  return g;
}

TensorPoly Bicross::coactionBeta(const NCPoly& p) const {
  TensorPoly out(2);
  for (const auto src = loop_->algebra().normalForm(p); const auto& [w, c] : src.terms())
    out.add({w, czWord(grade(w))}, c);
  return out;
}

NCPoly Bicross::toCZ(const NCPoly& p, const std::string& context) const {
  NCPoly out;
  for (const auto& [w, c] : p.terms()) {
    for (const auto& l : w)
      if (l.gen != c_)
        fail(ErrorKind::Internal, context + " is not in the central subalgebra: " +
                                      formatPoly(p, affine_->presentation()));
    out.add(czWord(cPower(w)), c);
  }
  return out;
}

NCPoly Bicross::fromCZ(const NCPoly& p) const {
  NCPoly out;
  for (const auto src = cz_->algebra().normalForm(p); const auto& [w, c] : src.terms()) {
    const int m = cPower(w);
    out.add(m == 0 ? Word{} : Word{{c_, m}}, c);
  }
  return out;
}

NCPoly Bicross::jInverseWord(const Word& w) const {
  return memoized(mutex_, jInvCache_, w, [&] {
    const Algebra& A = affine_->algebra();
    const int m = grade(w);
    const NCPoly cm = m == 0 ? NCPoly(1) : NCPoly::monomial(Word{{c_, m}});
    return A.multiply(affine_->antipode(sectionJ(NCPoly::monomial(w))), cm);
  });
}

NCPoly Bicross::jInverseSolvedWord(const Word& w) const {
  return memoized(mutex_, jInvSolvedCache_, w, [&] {
    const Algebra& A = affine_->algebra();
    const auto& lp = loop_->presentation();
    const Word g = groupPart(w, lp);
    const int d = efDegree(w, lp);
    // j(w_(1)) j^-1(w_(2)) = eps(w); the term g (x) w is the only one whose
    // second leg has all d raising/lowering letters.
    NCPoly rhs(loop_->counitWord(w));
    bool leading = false;
    for (const auto src = loop_->coproductWord(w); const auto& [legs, c] : src.terms()) {
      if (legs[0] == g && legs[1] == w) {
        if (!c.isOne())
          fail(ErrorKind::Internal, "unexpected leading coefficient in coproduct of " + formatWord(w, lp));
        leading = true;
        continue;
      }
      if (efDegree(legs[1], lp) >= d)
        fail(ErrorKind::Internal, "cannot order the coproduct of " + formatWord(w, lp));
      rhs.addScaled(A.multiply(sectionJ(NCPoly::monomial(legs[0])), jInverseSolvedWord(legs[1])), -c);
    }
    if (!leading)
      fail(ErrorKind::Internal, "coproduct of " + formatWord(w, lp) + " lacks its leading term");
    return A.multiply(NCPoly::monomial(A.inverseWord(sectionJ(NCPoly::monomial(g)).terms().begin()->first)),
                      rhs);
  });
}

NCPoly Bicross::jInverse(const NCPoly& p) const {
  NCPoly out;
  for (const auto src = loop_->algebra().normalForm(p); const auto& [w, c] : src.terms())
    out.addScaled(jInverseWord(w), c);
  return out;
}

NCPoly Bicross::jInverseBySolving(const NCPoly& p) const {
  NCPoly out;
  for (const auto src = loop_->algebra().normalForm(p); const auto& [w, c] : src.terms())
    out.addScaled(jInverseSolvedWord(w), c);
  return out;
}

NCPoly Bicross::cocycleWords(const Word& h, const Word& g) const {
  return memoized(mutex_, chiCache_, std::pair{h, g}, [&] {
    const Algebra& A = affine_->algebra();
    const Algebra& L = loop_->algebra();
    // sum of j(h1) j(g1) (x) h2 g2, then the beta-side factor per loop word
    TensorPoly acc(2);
    const TensorPoly dh = loop_->coproductWord(h);
    const TensorPoly dg = loop_->coproductWord(g);
    for (const auto& [lh, a] : dh.terms())
      for (const auto& [lg, b] : dg.terms()) {
        const NCPoly left = A.multiply(sectionJ(NCPoly::monomial(lh[0])), sectionJ(NCPoly::monomial(lg[0])));
        acc.addScaled(tensorOf({left, L.multiplyWords(lh[1], lg[1])}), a * b);
      }
    NCPoly out;
    for (const auto& [legs, c] : acc.terms()) {
      // beta(w) = w (x) c^|w|: (S j(w)) c^|w|
      for (const auto src = coactionBeta(NCPoly::monomial(legs[1])); const auto& [w, czc] : src.terms()) {
        const NCPoly sj = affine_->antipode(sectionJ(NCPoly::monomial(w[0])));
        out.addScaled(A.multiply(A.multiply(NCPoly::monomial(legs[0]), sj), fromCZ(NCPoly::monomial(w[1]))),
                      c * czc);
      }
    }
    const auto& lp = loop_->presentation();
    return toCZ(out, "cocycle value on " + formatPoly(NCPoly::monomial(h), lp) + " (x) " +
                         formatPoly(NCPoly::monomial(g), lp));
  });
}

NCPoly Bicross::cocycle(const NCPoly& h, const NCPoly& g) const {
  NCPoly out;
  const NCPoly hn = loop_->algebra().normalForm(h), gn = loop_->algebra().normalForm(g);
  for (const auto& [u, a] : hn.terms())
    for (const auto& [v, b] : gn.terms())
      out.addScaled(cocycleWords(u, v), a * b);
  return out;
}

NCPoly Bicross::cocycleViaInverse(const NCPoly& h, const NCPoly& g) const {
  const Algebra& A = affine_->algebra();
  const Algebra& L = loop_->algebra();
  NCPoly out;
  const TensorPoly dh = loop_->coproduct(h);
  const TensorPoly dg = loop_->coproduct(g);
  for (const auto& [lh, a] : dh.terms())
    for (const auto& [lg, b] : dg.terms()) {
      const NCPoly left = A.multiply(sectionJ(NCPoly::monomial(lh[0])), sectionJ(NCPoly::monomial(lg[0])));
      out.addScaled(A.multiply(left, jInverseBySolving(L.multiplyWords(lh[1], lg[1]))), a * b);
    }
  return toCZ(out, "cocycle value");
}

NCPoly Bicross::cocycleInverseWords(const Word& h, const Word& g) const {
  return memoized(mutex_, chiInvCache_, std::pair{h, g}, [&] {
    const Algebra& A = affine_->algebra();
    const Algebra& L = loop_->algebra();
    NCPoly out;
    const TensorPoly dh = loop_->coproductWord(h);
    const TensorPoly dg = loop_->coproductWord(g);
    for (const auto& [lh, a] : dh.terms())
      for (const auto& [lg, b] : dg.terms()) {
        const NCPoly front = sectionJ(L.multiplyWords(lh[0], lg[0]));
        out.addScaled(A.multiply(A.multiply(front, jInverseWord(lg[1])), jInverseWord(lh[1])), a * b);
      }
    return toCZ(out, "inverse cocycle value");
  });
}

NCPoly Bicross::cocycleInverse(const NCPoly& h, const NCPoly& g) const {
  NCPoly out;
  const NCPoly hn = loop_->algebra().normalForm(h), gn = loop_->algebra().normalForm(g);
  for (const auto& [u, a] : hn.terms())
    for (const auto& [v, b] : gn.terms())
      out.addScaled(cocycleInverseWords(u, v), a * b);
  return out;
}

TensorPoly Bicross::extOf(const NCPoly& czPart, const NCPoly& loopPart) const {
  return tensorOf({cz_->algebra().normalForm(czPart), loop_->algebra().normalForm(loopPart)});
}

TensorPoly Bicross::extProduct(const TensorPoly& x, const TensorPoly& y) const {
  if (x.rank() != 2 || y.rank() != 2)
    fail(ErrorKind::Domain, "extension elements have rank 2");
  const Algebra& Z = cz_->algebra();
  const Algebra& L = loop_->algebra();
  TensorPoly out(2);
  for (const auto& [lx, s] : x.terms())
    for (const auto& [ly, t] : y.terms()) {
      const NCPoly ab = Z.multiplyWords(lx[0], ly[0]);
      const TensorPoly dh = loop_->coproductWord(lx[1]);
      const TensorPoly dg = loop_->coproductWord(ly[1]);
      for (const auto& [lh, a] : dh.terms())
        for (const auto& [lg, b] : dg.terms()) {
          const NCPoly left = Z.multiply(ab, cocycleWords(lh[0], lg[0]));
          out.addScaled(tensorOf({left, L.multiplyWords(lh[1], lg[1])}), s * t * a * b);
        }
    }
  return out;
}

TensorPoly Bicross::extCoproduct(const TensorPoly& x) const {
  if (x.rank() != 2)
    fail(ErrorKind::Domain, "extension elements have rank 2");
  const Algebra& Z = cz_->algebra();
  TensorPoly out(4);
  for (const auto& [lx, s] : x.terms()) {
    const TensorPoly da = cz_->coproductWord(lx[0]);
    const TensorPoly dh = loop_->coproductWord(lx[1]);
    for (const auto& [la, a] : da.terms())
      for (const auto& [lh, b] : dh.terms())
        for (const auto src = coactionBeta(NCPoly::monomial(lh[0])); const auto& [lb, d] : src.terms())
          out.addScaled(tensorOf({NCPoly::monomial(la[0]), NCPoly::monomial(lb[0]),
                                  Z.multiplyWords(la[1], lb[1]), NCPoly::monomial(lh[1])}),
                        s * a * b * d);
  }
  return out;
}

QScalar Bicross::extCounit(const TensorPoly& x) const {
  QScalar out;
  for (const auto& [lx, s] : x.terms())
    out += s * cz_->counitWord(lx[0]) * loop_->counitWord(lx[1]);
  return out;
}

NCPoly Bicross::phi(const TensorPoly& x) const {
  if (x.rank() != 2)
    fail(ErrorKind::Domain, "extension elements have rank 2");
  const Algebra& A = affine_->algebra();
  NCPoly out;
  for (const auto& [lx, s] : x.terms())
    out.addScaled(A.multiply(fromCZ(NCPoly::monomial(lx[0])), sectionJ(NCPoly::monomial(lx[1]))), s);
  return out;
}

TensorPoly Bicross::phiInverse(const NCPoly& p) const {
  TensorPoly out(2);
  for (const auto src = affine_->algebra().normalForm(p); const auto& [w, c] : src.terms()) {
    int m = 0;
    Word v;
    for (const auto& l : w) {
      if (l.gen == c_)
        m += l.exp;
      else
        v.push_back({toLoop_[static_cast<std::size_t>(l.gen)], l.exp});
    }
    out.add({czWord(m), v}, c);
  }
  return out;
}

std::string Bicross::formatExt(const TensorPoly& x) const {
  return formatTensor(x, {&cz_->presentation(), &loop_->presentation()});
}

std::string Bicross::formatExtCoproduct(const TensorPoly& t) const {
  const Presentation* z = &cz_->presentation();
  const Presentation* l = &loop_->presentation();
  return formatTensor(t, {z, l, z, l}, 2);
}

std::string Bicross::formatLoopCZ(const TensorPoly& t) const {
  return formatTensor(t, {&loop_->presentation(), &cz_->presentation()});
}

namespace {

// Basis words of the loop algebra and helpers shared by the sweeps.
struct Sweep {
  const Bicross& b;
  Report& report;
  std::vector<Word> basis;

  Sweep(const Bicross& bc, Report& r, int maxDegree)
      : b(bc), report(r), basis(enumerateBasis(bc.loop().algebra(), maxDegree)) {}

  const Presentation& lp() const { return b.loop().presentation(); }
  const Presentation& zp() const { return b.cz().presentation(); }
  const Presentation& ap() const { return b.affine().presentation(); }

  std::string name(const Word& w) const {
    const std::string s = formatWord(w, lp());
    return s.empty() ? "1" : s;
  }

  // Runs one case; an exception counts as a failure with its message.
  template <class Body>
  void guarded(const std::string& label, Body&& body) {
    try {
      body();
    } catch (const Error& e) {
      report.fail(label, "error", e.what());
    }
  }

  void polys(const std::string& label, const NCPoly& x, const NCPoly& y, const Presentation& pres) {
    report.expect(x == y, [&] { return Failure{label, formatPoly(x, pres), formatPoly(y, pres)}; });
  }
  void tensors(const std::string& label, const TensorPoly& x, const TensorPoly& y,
               const std::vector<const Presentation*>& legs) {
    report.expect(sameTensor(x, y),
                  [&] { return Failure{label, formatTensor(x, legs), formatTensor(y, legs)}; });
  }

  template <class F>
  void pairs(int maxDegree, F&& f) {
    for (const auto& h : basis) {
      if (wordDegree(h) > maxDegree)
        break;
      for (const auto& g : basis) {
        if (wordDegree(h) + wordDegree(g) > maxDegree)
          break;
        f(h, g);
      }
    }
  }
};

NCPoly mono(const Word& w) { return NCPoly::monomial(w); }

// c^grade(w) in cz, read directly from the grade.
Word czPower(const Bicross& b, const Word& w) {
  const int m = b.grade(w);
  return m == 0 ? Word{} : Word{{b.cz().presentation().require("c"), m}};
}

} // namespace

Report verifyCocycle(const Bicross& b, int maxDegree) {
  if (maxDegree < 0)
    fail(ErrorKind::Domain, "degree bound must be non-negative");
  Report report;
  report.check = "cocycle";
  report.degree = maxDegree;
  Sweep s(b, report, maxDegree);
  const Algebra& A = b.affine().algebra();
  const Algebra& Z = b.cz().algebra();
  const Algebra& L = b.loop().algebra();

  for (const auto& h : s.basis) {
    const std::string n = s.name(h);
    s.guarded("j inverse on " + n, [&] {
      const NCPoly inv = b.jInverse(mono(h));
      s.polys("j inverse formulas agree on " + n, inv, b.jInverseBySolving(mono(h)), s.ap());
      NCPoly left, right;
      for (const auto src = b.loop().coproductWord(h); const auto& [legs, c] : src.terms()) {
        left.addScaled(A.multiply(b.sectionJ(mono(legs[0])), b.jInverse(mono(legs[1]))), c);
        right.addScaled(A.multiply(b.jInverse(mono(legs[0])), b.sectionJ(mono(legs[1]))), c);
      }
      const NCPoly unit(b.loop().counitWord(h));
      s.polys("j * j^-1 on " + n, left, unit, s.ap());
      s.polys("j^-1 * j on " + n, right, unit, s.ap());
    });
    s.guarded("normalization on " + n, [&] {
      const NCPoly unit(b.loop().counitWord(h));
      s.polys("cocycle(1, " + n + ")", b.cocycle(NCPoly(1), mono(h)), unit, s.zp());
      s.polys("cocycle(" + n + ", 1)", b.cocycle(mono(h), NCPoly(1)), unit, s.zp());
    });
  }

  s.pairs(maxDegree, [&](const Word& h, const Word& g) {
    const std::string label = s.name(h) + " (x) " + s.name(g);
    s.guarded("cocycle on " + label, [&] {
      const NCPoly chi = b.cocycle(mono(h), mono(g));
      s.polys("cocycle formulas agree on " + label, chi, b.cocycleViaInverse(mono(h), mono(g)), s.zp());
      NCPoly left, right;
      const TensorPoly dh = b.loop().coproductWord(h), dg = b.loop().coproductWord(g);
      for (const auto& [lh, x] : dh.terms())
        for (const auto& [lg, y] : dg.terms()) {
          left.addScaled(Z.multiply(b.cocycle(mono(lh[0]), mono(lg[0])),
                                    b.cocycleInverse(mono(lh[1]), mono(lg[1]))),
                         x * y);
          right.addScaled(Z.multiply(b.cocycleInverse(mono(lh[0]), mono(lg[0])),
                                     b.cocycle(mono(lh[1]), mono(lg[1]))),
                          x * y);
        }
      const NCPoly unit(b.loop().counitWord(h) * b.loop().counitWord(g));
      s.polys("cocycle * inverse on " + label, left, unit, s.zp());
      s.polys("inverse * cocycle on " + label, right, unit, s.zp());
    });
  });

  // chi(g1 f1) chi(h, g2 f2) = chi(h1 g1) chi(h2 g2, f)
  for (const auto& h : s.basis)
    for (const auto& g : s.basis) {
      const int dhg = wordDegree(h) + wordDegree(g);
      if (dhg > maxDegree)
        break;
      for (const auto& f : s.basis) {
        if (dhg + wordDegree(f) > maxDegree)
          break;
        const std::string label = "cocycle condition on " + s.name(h) + " (x) " + s.name(g) + " (x) " + s.name(f);
        s.guarded(label, [&] {
          NCPoly lhs, rhs;
          const TensorPoly dg = b.loop().coproductWord(g);
          const TensorPoly df = b.loop().coproductWord(f);
          const TensorPoly dh = b.loop().coproductWord(h);
          for (const auto& [lg, x] : dg.terms())
            for (const auto& [lf, y] : df.terms())
              lhs.addScaled(Z.multiply(b.cocycle(mono(lg[0]), mono(lf[0])),
                                       b.cocycle(mono(h), L.multiplyWords(lg[1], lf[1]))),
                            x * y);
          for (const auto& [lh, x] : dh.terms())
            for (const auto& [lg, y] : dg.terms())
              rhs.addScaled(Z.multiply(b.cocycle(mono(lh[0]), mono(lg[0])),
                                       b.cocycle(L.multiplyWords(lh[1], lg[1]), mono(f))),
                            x * y);
          s.polys(label, lhs, rhs, s.zp());
        });
      }
    }
  return report;
}

Report verifyExtCompatibility(const Bicross& b, int maxDegree) {
  if (maxDegree < 0)
    fail(ErrorKind::Domain, "degree bound must be non-negative");
  Report report;
  report.check = "ext";
  report.degree = maxDegree;
  Sweep s(b, report, maxDegree);
  const Algebra& Z = b.cz().algebra();
  const Algebra& L = b.loop().algebra();
  const LegAlgebras loopCZ{&L, &Z};
  const std::vector<const Presentation*> lz{&s.lp(), &s.zp()};
  const std::vector<const Presentation*> zz{&s.zp(), &s.zp()};
  const std::vector<const Presentation*> llz{&s.lp(), &s.lp(), &s.zp()};
  const auto beta = [&](const Word& w) { return b.coactionBeta(mono(w)); };

  for (const auto& h : s.basis) {
    const std::string n = s.name(h);
    const TensorPoly bh = beta(h);
    s.tensors("coaction is coassociative on " + n, expandLeg(bh, 0, beta),
              expandLeg(bh, 1, [&](const Word& w) { return b.cz().coproductWord(w); }), llz);
    s.polys("coaction is counital on " + n,
            flatten(contractLeg(bh, 1, [&](const Word& w) { return b.cz().counitWord(w); })), mono(h), s.lp());
    TensorPoly expected(3);
    for (const auto src = b.loop().coproductWord(h); const auto& [legs, c] : src.terms())
      expected.addScaled(tensorOf({mono(legs[0]), mono(legs[1]),
                                   Z.multiplyWords(czPower(b, legs[0]), czPower(b, legs[1]))}),
                         c);
    s.tensors("comodule coalgebra on " + n,
              expandLeg(bh, 0, [&](const Word& w) { return b.loop().coproductWord(w); }), expected, llz);
    s.polys("comodule counit on " + n,
            flatten(contractLeg(bh, 0, [&](const Word& w) { return b.loop().counitWord(w); })),
            NCPoly(b.loop().counitWord(h)), s.zp());
    for (int m = -maxDegree; m <= maxDegree; ++m) {
      const NCPoly cm = m == 0 ? NCPoly(1) : Z.generator(s.zp().require("c"), m);
      const TensorPoly one = tensorOf({NCPoly(1), cm});
      s.tensors("coaction commutes with c^" + std::to_string(m) + " on " + n,
                tensorMultiply(bh, one, loopCZ), tensorMultiply(one, bh, loopCZ), lz);
    }
  }

  s.pairs(maxDegree, [&](const Word& h, const Word& g) {
    const std::string label = s.name(h) + " (x) " + s.name(g);
    s.guarded("ext on " + label, [&] {
      // beta(hg) = (1 (x) chi^-1(h1, g1)) beta(h2) beta(g2) (1 (x) chi(h3, g3))
      const TensorPoly lhs = b.coactionBeta(L.multiplyWords(h, g));
      TensorPoly rhs(2);
      const TensorPoly dh = b.loop().iteratedCoproduct(mono(h), 2);
      const TensorPoly dg = b.loop().iteratedCoproduct(mono(g), 2);
      for (const auto& [lh, x] : dh.terms())
        for (const auto& [lg, y] : dg.terms()) {
          const TensorPoly front = tensorOf({NCPoly(1), b.cocycleInverse(mono(lh[0]), mono(lg[0]))});
          const TensorPoly back = tensorOf({NCPoly(1), b.cocycle(mono(lh[2]), mono(lg[2]))});
          const TensorPoly mid = tensorMultiply(beta(lh[1]), beta(lg[1]), loopCZ);
          rhs.addScaled(tensorMultiply(tensorMultiply(front, mid, loopCZ), back, loopCZ), x * y);
        }
      s.tensors("coaction twisted by the cocycle on " + label, lhs, rhs, lz);

      // Delta chi(h, g) = chi(h1^(1), g1^(1)) (x) h1^(2) g1^(2) chi(h2, g2)
      const TensorPoly dchi = b.cz().coproduct(b.cocycle(mono(h), mono(g)));
      TensorPoly expected(2);
      const TensorPoly h2 = b.loop().coproductWord(h), g2 = b.loop().coproductWord(g);
      for (const auto& [lh, x] : h2.terms())
        for (const auto& [lg, y] : g2.terms())
          for (const auto src = beta(lh[0]); const auto& [bh, u] : src.terms())
            for (const auto src = beta(lg[0]); const auto& [bg, v] : src.terms()) {
              const NCPoly right = Z.multiply(Z.multiplyWords(bh[1], bg[1]), b.cocycle(mono(lh[1]), mono(lg[1])));
              expected.addScaled(tensorOf({b.cocycle(mono(bh[0]), mono(bg[0])), right}), x * y * u * v);
            }
      s.tensors("coproduct of the cocycle on " + label, dchi, expected, zz);
      report.expect(b.cz().counit(b.cocycle(mono(h), mono(g))) ==
                        b.loop().counitWord(h) * b.loop().counitWord(g),
                    [&] { return Failure{"counit of the cocycle on " + label, "", ""}; });
    });
  });

  // beta is not an algebra map: one explicit witness.
  const NCPoly f0 = L.generator(s.lp().require("f0")), e0 = L.generator(s.lp().require("e0"));
  const TensorPoly whole = b.coactionBeta(L.multiply(f0, e0));
  const TensorPoly split = tensorMultiply(b.coactionBeta(f0), b.coactionBeta(e0), loopCZ);
  report.expect(!sameTensor(whole, split), [&] {
    return Failure{"coaction is not multiplicative on f0 (x) e0", formatTensor(whole, lz), formatTensor(split, lz)};
  });
  report.notes.push_back("coaction of f0*e0 is " + formatTensor(whole, lz) +
                         ", product of coactions is " + formatTensor(split, lz));
  return report;
}

Report verifyIsomorphism(const Bicross& b, int maxDegree, std::uint64_t seed, int bijectionDegree,
                         bool eachFactor) {
  if (maxDegree < 0)
    fail(ErrorKind::Domain, "degree bound must be non-negative");
  Report report;
  report.check = "iso";
  report.degree = maxDegree;
  report.seed = seed;
  Sweep s(b, report, maxDegree);
  const Algebra& A = b.affine().algebra();
  const Algebra& Z = b.cz().algebra();
  const Algebra& L = b.loop().algebra();
  const int cz = s.zp().require("c");
  const std::vector<const Presentation*> aa{&s.ap(), &s.ap()};
  const std::vector<const Presentation*> al{&s.ap(), &s.lp()};
  const std::vector<const Presentation*> ll{&s.lp(), &s.lp()};
  const std::vector<const Presentation*> zlzl{&s.zp(), &s.lp(), &s.zp(), &s.lp()};

  struct Elem {
    Word a, h;
    int degree;
  };
  std::vector<Elem> ext;
  for (int m = -maxDegree; m <= maxDegree; ++m)
    for (const auto& h : s.basis)
      if (std::abs(m) + wordDegree(h) <= maxDegree)
        ext.push_back({m == 0 ? Word{} : Word{{cz, m}}, h, std::abs(m) + wordDegree(h)});
  std::stable_sort(ext.begin(), ext.end(), [](const Elem& x, const Elem& y) { return x.degree < y.degree; });
  const auto tensor = [&](const Elem& e) { return tensorOf({mono(e.a), mono(e.h)}); };
  const auto label = [&](const Elem& e) { return b.formatExt(tensor(e)); };

  // Phi sends the monomial basis of the extension onto the normal basis.
  const auto bijection = [&](int degree) {
    const std::vector<Word> loopBasis = enumerateBasis(L, degree);
    std::set<Word, WordLess> image;
    std::size_t count = 0;
    for (int m = -degree; m <= degree; ++m)
      for (const auto& h : loopBasis) {
        if (std::abs(m) + wordDegree(h) > degree)
          continue;
        const Elem e{m == 0 ? Word{} : Word{{cz, m}}, h, std::abs(m) + wordDegree(h)};
        const NCPoly p = b.phi(tensor(e));
        const bool single = p.size() == 1 && p.terms().begin()->second.isOne();
        ++count;
        report.expect(single && image.insert(p.terms().begin()->first).second, [&] {
          return Failure{"basis image of " + label(e), formatPoly(p, s.ap()), "a new normal word"};
        });
      }
    const std::vector<Word> affineBasis = enumerateBasis(A, degree);
    const std::set<Word, WordLess> expected(affineBasis.begin(), affineBasis.end());
    report.expect(image == expected && count == expected.size(), [&] {
      return Failure{"basis bijection up to degree " + std::to_string(degree),
                     std::to_string(image.size()) + " images", std::to_string(expected.size()) + " normal words"};
    });
  };
  bijection(std::max(maxDegree, bijectionDegree));
  const std::vector<Word> affineBasis = enumerateBasis(A, maxDegree);

  const auto product = [&](const Elem& x, const Elem& y) {
    const std::string lab = "(" + label(x) + ") * (" + label(y) + ")";
    s.guarded(lab, [&] {
      const TensorPoly tx = tensor(x), ty = tensor(y);
      const TensorPoly xy = b.extProduct(tx, ty);
      s.polys("phi respects " + lab, b.phi(xy), A.multiply(b.phi(tx), b.phi(ty)), s.ap());
      // the projection a (x) h -> eps(a) h is multiplicative and agrees with phi
      const auto proj = [&](const TensorPoly& t) {
        NCPoly out;
        for (const auto& [legs, c] : t.terms())
          out.addScaled(mono(legs[1]), c * b.cz().counitWord(legs[0]));
        return out;
      };
      s.polys("projection respects " + lab, proj(xy), L.multiply(proj(tx), proj(ty)), s.lp());
      s.polys("projection after phi on " + lab, b.projectLoop(b.phi(xy)), proj(xy), s.lp());
    });
  };
  for (const auto& x : ext)
    for (const auto& y : ext) {
      if (!eachFactor && x.degree + y.degree > maxDegree)
        break;
      product(x, y);
    }
  if (!ext.empty()) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, ext.size() - 1);
    for (int i = 0; i < 100; ++i)
      product(ext[pick(rng)], ext[pick(rng)]);
  }

  for (const auto& e : ext) {
    const std::string lab = label(e);
    s.guarded("coproduct of " + lab, [&] {
      const TensorPoly t = tensor(e);
      const TensorPoly d = b.extCoproduct(t);
      TensorPoly mapped(2);
      for (const auto& [legs, c] : d.terms())
        mapped.addScaled(tensorOf({b.phi(tensorOf({mono(legs[0]), mono(legs[1])})),
                                   b.phi(tensorOf({mono(legs[2]), mono(legs[3])}))}),
                         c);
      s.tensors("phi respects the coproduct of " + lab, mapped, b.affine().coproduct(b.phi(t)), aa);
      report.expect(b.extCounit(t) == b.affine().counit(b.phi(t)), [&] {
        return Failure{"phi respects the counit of " + lab, b.extCounit(t).toString(),
                       b.affine().counit(b.phi(t)).toString()};
      });
      // the projection is a coalgebra map
      TensorPoly projected(2);
      for (const auto& [legs, c] : d.terms())
        projected.add({legs[1], legs[3]}, c * b.cz().counitWord(legs[0]) * b.cz().counitWord(legs[2]));
      const NCPoly pe = mono(e.h) * b.cz().counitWord(e.a);
      s.tensors("projection respects the coproduct of " + lab, projected, b.loop().coproduct(pe), ll);
    });
  }

  // CZ -> extension, a -> a (x) 1
  for (int m = -maxDegree; m <= maxDegree; ++m) {
    const NCPoly cm = m == 0 ? NCPoly(1) : Z.generator(cz, m);
    const TensorPoly x = tensorOf({cm, NCPoly(1)});
    TensorPoly expected4(4);
    for (const auto src = b.cz().coproduct(cm); const auto& [legs, c] : src.terms())
      expected4.add({legs[0], Word{}, legs[1], Word{}}, c);
    report.expect(sameTensor(b.extCoproduct(x), expected4), [&] {
      return Failure{"inclusion respects the coproduct of c^" + std::to_string(m),
                     b.formatExtCoproduct(b.extCoproduct(x)), b.formatExtCoproduct(expected4)};
    });
    for (int n = -maxDegree; n <= maxDegree; ++n) {
      if (std::abs(m) + std::abs(n) > maxDegree)
        continue;
      const NCPoly cn = n == 0 ? NCPoly(1) : Z.generator(cz, n);
      const TensorPoly y = tensorOf({cn, NCPoly(1)});
      s.tensors("inclusion respects c^" + std::to_string(m) + " * c^" + std::to_string(n), b.extProduct(x, y),
                tensorOf({Z.multiply(cm, cn), NCPoly(1)}), {&s.zp(), &s.lp()});
    }
  }

  // projection of the affine algebra
  for (const auto& x : affineBasis) {
    const std::string n = formatWord(x, s.ap());
    TensorPoly projected(2);
    for (const auto src = b.affine().coproductWord(x); const auto& [legs, c] : src.terms())
      projected.addScaled(tensorOf({b.projectLoop(mono(legs[0])), b.projectLoop(mono(legs[1]))}), c);
    s.tensors("loop projection respects the coproduct of " + n, projected,
              b.loop().coproduct(b.projectLoop(mono(x))), ll);
    for (const auto& y : affineBasis) {
      if (wordDegree(x) + wordDegree(y) > maxDegree)
        break;
      s.polys("loop projection respects " + n + " * " + formatWord(y, s.ap()),
              b.projectLoop(A.multiplyWords(x, y)), L.multiply(b.projectLoop(mono(x)), b.projectLoop(mono(y))),
              s.lp());
    }
  }

  // (id (x) pi) Delta j(h) = j(h1) (x) h2
  const auto coaction = [&](const NCPoly& p) {
    TensorPoly out(2);
    for (const auto src = b.affine().coproduct(p); const auto& [legs, c] : src.terms())
      out.addScaled(tensorOf({mono(legs[0]), b.projectLoop(mono(legs[1]))}), c);
    return out;
  };
  const std::size_t beforeJ = report.cases;
  for (const auto& h : s.basis) {
    TensorPoly expectedJ(2);
    for (const auto src = b.loop().coproductWord(h); const auto& [legs, c] : src.terms())
      expectedJ.addScaled(tensorOf({b.sectionJ(mono(legs[0])), mono(legs[1])}), c);
    s.tensors("j intertwines the coactions on " + s.name(h), coaction(b.sectionJ(mono(h))), expectedJ, al);
  }

  report.notes.push_back("j intertwiner: " + std::to_string(report.cases - beforeJ) + " cases");

  // Fixed points of the right coaction: powers of c are fixed and the defects
  // of all other normal words are linearly independent.
  const std::size_t beforeFixed = report.cases;
  LinearSpan<Legs, LegsLess> defects;
  for (const auto& x : affineBasis) {
    const std::string n = formatWord(x, s.ap());
    TensorPoly defect = coaction(mono(x));
    defect -= tensorOf({mono(x), NCPoly(1)});
    const bool central = std::all_of(x.begin(), x.end(), [&](const Letter& l) { return l.gen == s.ap().require("c"); });
    if (central)
      report.expect(defect.isZero(), [&] {
        return Failure{"coaction fixes " + (n.empty() ? std::string("1") : n), formatTensor(defect, al), "0"};
      });
    else
      report.expect(defects.add(defect.terms()), [&] {
        return Failure{"coaction defect of " + n + " is independent", formatTensor(defect, al), "in the span"};
      });
  }
  report.notes.push_back("coaction fixed points: " + std::to_string(report.cases - beforeFixed) + " cases");
  return report;
}

} // namespace qbx
