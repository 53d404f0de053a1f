#include "hopf.hpp"

#include "errors.hpp"
#include "expr.hpp"
#include "presentation_io.hpp"

#include <map>
#include <random>

namespace qbx {

TensorPoly tensorOf(const std::vector<NCPoly>& legs, const QScalar& coeff) {
  TensorPoly out(legs.size());
  std::vector<std::pair<Legs, QScalar>> acc{{Legs{}, coeff}};
  for (const auto& p : legs) {
    std::vector<std::pair<Legs, QScalar>> next;
    for (const auto& [ws, c] : acc)
      for (const auto& [w, d] : p.terms()) {
        Legs l = ws;
        l.push_back(w);
        next.emplace_back(std::move(l), c * d);
      }
    acc = std::move(next);
  }
  for (const auto& [ws, c] : acc)
    out.add(ws, c);
  return out;
}

TensorPoly tensorMultiply(const TensorPoly& a, const TensorPoly& b, const LegAlgebras& legs) {
  if (a.rank() != b.rank() || a.rank() != legs.size())
    fail(ErrorKind::Domain, "tensor rank mismatch");
  TensorPoly out(a.rank());
  std::vector<NCPoly> parts(a.rank());
  for (const auto& [la, ca] : a.terms())
    for (const auto& [lb, cb] : b.terms()) {
      for (std::size_t i = 0; i < a.rank(); ++i)
        parts[i] = legs[i]->multiplyWords(la[i], lb[i]);
      out.addScaled(tensorOf(parts), ca * cb);
    }
  return out;
}

TensorPoly expandLeg(const TensorPoly& t, std::size_t leg,
                     const std::function<TensorPoly(const Word&)>& f) {
  std::map<Word, TensorPoly, WordLess> memo;
  TensorPoly out(t.rank());
  bool first = true;
  for (const auto& [legs, c] : t.terms()) {
    auto it = memo.find(legs[leg]);
    if (it == memo.end())
      it = memo.emplace(legs[leg], f(legs[leg])).first;
    const TensorPoly& img = it->second;
    if (first) {
      out = TensorPoly(t.rank() - 1 + img.rank());
      first = false;
    }
    for (const auto& [inner, d] : img.terms()) {
      Legs l(legs.begin(), legs.begin() + static_cast<long>(leg));
      l.insert(l.end(), inner.begin(), inner.end());
      l.insert(l.end(), legs.begin() + static_cast<long>(leg) + 1, legs.end());
      out.add(l, c * d);
    }
  }
  return out;
}

TensorPoly contractLeg(const TensorPoly& t, std::size_t leg,
                       const std::function<QScalar(const Word&)>& f) {
  TensorPoly out(t.rank() - 1);
  for (const auto& [legs, c] : t.terms()) {
    Legs l = legs;
    l.erase(l.begin() + static_cast<long>(leg));
    out.add(l, c * f(legs[leg]));
  }
  return out;
}

NCPoly multiplyLegs(const TensorPoly& t, const Algebra& alg) {
  NCPoly out;
  for (const auto& [legs, c] : t.terms()) {
    NCPoly acc(1);
    for (const auto& w : legs)
      acc = alg.multiply(acc, NCPoly::monomial(w));
    out.addScaled(acc, c);
  }
  return out;
}

NCPoly flatten(const TensorPoly& t) {
  if (t.rank() != 1)
    fail(ErrorKind::Domain, "expected a rank-1 tensor");
  NCPoly out;
  for (const auto& [legs, c] : t.terms())
    out.add(legs[0], c);
  return out;
}

TensorPoly lift(const NCPoly& p) { return tensorOf({p}); }

namespace {

const Word kEmpty;

bool isLetterWord(const Word& w, int gen) { return w.size() == 1 && w[0].gen == gen && w[0].exp == 1; }

bool groupLike(const Algebra& alg, const Word& w) { return alg.isGroupLikeWord(w); }

// m(S (x) id) and m(id (x) S) applied to a coproduct, with S given on generators.
NCPoly antipodeLeft(const Algebra& alg, const TensorPoly& delta, const std::function<NCPoly(const Word&)>& s) {
  NCPoly out;
  for (const auto& [legs, c] : delta.terms())
    out.addScaled(alg.multiply(s(legs[0]), NCPoly::monomial(legs[1])), c);
  return out;
}

NCPoly antipodeRight(const Algebra& alg, const TensorPoly& delta, const std::function<NCPoly(const Word&)>& s) {
  NCPoly out;
  for (const auto& [legs, c] : delta.terms())
    out.addScaled(alg.multiply(NCPoly::monomial(legs[0]), s(legs[1])), c);
  return out;
}

// Inverse of a single group-like monomial c*w.
NCPoly invertMonomial(const Algebra& alg, const NCPoly& p, const std::string& what) {
  if (p.size() != 1 || !alg.isGroupLikeWord(p.terms().begin()->first))
    fail(ErrorKind::Structure, what + " is not an invertible monomial");
  const auto& [w, c] = *p.terms().begin();
  return NCPoly::monomial(alg.inverseWord(w), c.inverse());
}

NCPoly derivedAntipode(const Algebra& alg, int g) {
  const auto& pres = alg.presentation();
  const std::string& name = pres.gen(g).name;
  const TensorPoly& d = *pres.hopf.coproduct[static_cast<std::size_t>(g)];
  if (d.size() == 1) {
    const auto& [legs, c] = *d.terms().begin();
    if (c.isOne() && isLetterWord(legs[0], g) && isLetterWord(legs[1], g)) {
      if (!pres.gen(g).invertible)
        fail(ErrorKind::Structure, "group-like generator '" + name + "' must be invertible");
      return alg.generator(g, -1);
    }
  }
  if (d.size() == 2) {
    std::optional<Word> right, left;
    for (const auto& [legs, c] : d.terms()) {
      if (!c.isOne())
        break;
      if (isLetterWord(legs[0], g) && groupLike(alg, legs[1]))
        right = legs[1];
      else if (isLetterWord(legs[1], g) && groupLike(alg, legs[0]))
        left = legs[0];
    }
    if (right && left) {
      const NCPoly x = alg.generator(g);
      const NCPoly a = NCPoly::monomial(alg.inverseWord(*right));
      const NCPoly b = NCPoly::monomial(alg.inverseWord(*left));
      return -alg.multiply(alg.multiply(b, x), a);
    }
  }
  fail(ErrorKind::Structure, "cannot derive an antipode for '" + name +
                                 "': coproduct is neither group-like nor skew-primitive");
}

} // namespace

HopfAlgebra::HopfAlgebra(AlgebraPtr alg) : alg_(std::move(alg)), completed_(alg_->presentation()) {
  const auto& pres = alg_->presentation();
  const std::size_t n = pres.size();
  const auto& table = pres.hopf;
  for (std::size_t g = 0; g < n; ++g) {
    const std::string& name = pres.alphabet[g].name;
    if (g >= table.coproduct.size() || !table.coproduct[g])
      fail(ErrorKind::Structure, "no coproduct for generator '" + name + "'");
    if (g >= table.counit.size() || !table.counit[g])
      fail(ErrorKind::Structure, "no counit for generator '" + name + "'");
    TensorPoly d(2);
    for (const auto& [legs, c] : table.coproduct[g]->terms())
      d.addScaled(tensorOf({alg_->normalWord(legs[0]), alg_->normalWord(legs[1])}), c);
    delta_.push_back(std::move(d));
    eps_.push_back(*table.counit[g]);
  }
  completed_.hopf.antipode.resize(n);
  for (std::size_t g = 0; g < n; ++g) {
    const int gi = static_cast<int>(g);
    if (g < table.antipode.size() && table.antipode[g])
      antipode_.push_back(alg_->normalForm(*table.antipode[g]));
    else
      antipode_.push_back(derivedAntipode(*alg_, gi));
    completed_.hopf.antipode[g] = antipode_.back();
  }
  // Antipode axiom on generators; words are covered by verifyHopf.
  const auto onLetters = [&](const Word& w) { return antipodeWord(w); };
  for (std::size_t g = 0; g < n; ++g) {
    const NCPoly unit = NCPoly(eps_[g]);
    const TensorPoly& d = delta_[g];
    if (antipodeLeft(*alg_, d, onLetters) != unit || antipodeRight(*alg_, d, onLetters) != unit)
      fail(ErrorKind::Structure, "antipode axiom fails on generator '" + pres.alphabet[g].name +
                                     "' with S = " + formatPoly(antipode_[g], pres));
  }
}

TensorPoly HopfAlgebra::runCoproduct(const Letter& l) const {
  const auto g = static_cast<std::size_t>(l.gen);
  if (l.exp > 0) {
    TensorPoly acc = delta_[g];
    for (int i = 1; i < l.exp; ++i)
      acc = multiply(acc, delta_[g]);
    return acc;
  }
  const TensorPoly& d = delta_[g];
  const auto& pres = presentation();
  if (d.size() != 1)
    fail(ErrorKind::Structure, "coproduct of invertible '" + pres.gen(l.gen).name + "' is not a monomial");
  const auto& [legs, c] = *d.terms().begin();
  if (!alg_->isGroupLikeWord(legs[0]) || !alg_->isGroupLikeWord(legs[1]))
    fail(ErrorKind::Structure, "coproduct of invertible '" + pres.gen(l.gen).name + "' is not invertible");
  TensorPoly inv(2);
  inv.add({alg_->inverseWord(legs[0]), alg_->inverseWord(legs[1])}, c.inverse());
  TensorPoly acc = inv;
  for (int i = 1; i < -l.exp; ++i)
    acc = multiply(acc, inv);
  return acc;
}

TensorPoly HopfAlgebra::coproductWord(const Word& w) const {
  if (w.empty()) {
    TensorPoly one(2);
    one.add({kEmpty, kEmpty}, 1);
    return one;
  }
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = deltaCache_.find(w);
    if (it != deltaCache_.end())
      return it->second;
  }
  TensorPoly out(2);
  if (w.size() == 1) {
    alg_->normalWord(w);   // validates letters
    out = runCoproduct(w[0]);
  } else {
    const Word head(w.begin(), w.end() - 1);
    out = multiply(coproductWord(head), coproductWord(Word{w.back()}));
  }
  std::lock_guard<std::mutex> lock(mutex_);
  return deltaCache_.emplace(w, std::move(out)).first->second;
}

TensorPoly HopfAlgebra::coproduct(const NCPoly& p) const {
  TensorPoly out(2);
  const NCPoly nf = alg_->normalForm(p);
  for (const auto& [w, c] : nf.terms())
    out.addScaled(coproductWord(w), c);
  return out;
}

TensorPoly HopfAlgebra::iteratedCoproduct(const NCPoly& p, int n) const {
  if (n < 1)
    fail(ErrorKind::Domain, "iterated coproduct needs n >= 1");
  TensorPoly t = coproduct(p);
  for (int i = 1; i < n; ++i)
    t = expandLeg(t, 0, [&](const Word& w) { return coproductWord(w); });
  return t;
}

QScalar HopfAlgebra::counitWord(const Word& w) const {
  QScalar out(1);
  for (const auto& l : w) {
    const QScalar& e = eps_.at(static_cast<std::size_t>(l.gen));
    if (l.exp < 0 && e.isZero())
      fail(ErrorKind::Structure, "counit of invertible '" + presentation().gen(l.gen).name + "' is zero");
    out *= e.pow(l.exp);
  }
  return out;
}

QScalar HopfAlgebra::counit(const NCPoly& p) const {
  QScalar out;
  const NCPoly nf = alg_->normalForm(p);
  for (const auto& [w, c] : nf.terms())
    out += c * counitWord(w);
  return out;
}

NCPoly HopfAlgebra::runAntipode(const Letter& l) const {
  const NCPoly& s = antipode_.at(static_cast<std::size_t>(l.gen));
  const NCPoly base = l.exp > 0 ? s : invertMonomial(*alg_, s, "antipode of '" + presentation().gen(l.gen).name + "'");
  return alg_->power(base, std::abs(l.exp));
}

NCPoly HopfAlgebra::antipodeWord(const Word& w) const {
  if (w.empty())
    return NCPoly(1);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = antipodeCache_.find(w);
    if (it != antipodeCache_.end())
      return it->second;
  }
  NCPoly out;
  if (w.size() == 1) {
    out = runAntipode(w[0]);
  } else {
    const Word tail(w.begin() + 1, w.end());
    out = alg_->multiply(antipodeWord(tail), antipodeWord(Word{w.front()}));
  }
  std::lock_guard<std::mutex> lock(mutex_);
  return antipodeCache_.emplace(w, std::move(out)).first->second;
}

NCPoly HopfAlgebra::antipode(const NCPoly& p) const {
  NCPoly out;
  const NCPoly nf = alg_->normalForm(p);
  for (const auto& [w, c] : nf.terms())
    out.addScaled(antipodeWord(w), c);
  return out;
}

TensorPoly HopfAlgebra::multiply(const TensorPoly& a, const TensorPoly& b) const {
  return tensorMultiply(a, b, legs(a.rank()));
}

Presentation deriveAntipode(const Presentation& pres) {
  return HopfAlgebra(std::make_shared<const Algebra>(pres)).completed();
}

HopfPtr builtinHopf(const std::string& name) {
  static std::mutex mutex;
  static std::map<std::string, HopfPtr> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(name);
    if (it != cache.end())
      return it->second;
  }
  auto h = std::make_shared<const HopfAlgebra>(builtinAlgebra(name));
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(name, h).first->second;
}

namespace {

struct HopfChecker {
  const HopfAlgebra& h;
  const Algebra& alg;
  const Presentation& pres;
  Report& report;

  std::string tensorText(const TensorPoly& t) const {
    return formatTensor(t, std::vector<const Presentation*>(t.rank(), &pres));
  }
  std::string polyText(const NCPoly& p) const { return formatPoly(p, pres); }

  void tensors(const std::string& what, const TensorPoly& a, const TensorPoly& b) {
    report.expect(a == b, [&] { return Failure{what, tensorText(a), tensorText(b)}; });
  }
  void polys(const std::string& what, const NCPoly& a, const NCPoly& b) {
    report.expect(a == b, [&] { return Failure{what, polyText(a), polyText(b)}; });
  }
  void scalars(const std::string& what, const QScalar& a, const QScalar& b) {
    report.expect(a == b, [&] { return Failure{what, a.toString(), b.toString()}; });
  }

  // Structure maps computed as products of their values on the factors.
  TensorPoly deltaOfProduct(const std::vector<NCPoly>& factors) const {
    TensorPoly acc = tensorOf({NCPoly(1), NCPoly(1)});
    for (const auto& f : factors)
      acc = h.multiply(acc, h.coproduct(f));
    return acc;
  }
  QScalar epsOfProduct(const std::vector<NCPoly>& factors) const {
    QScalar acc(1);
    for (const auto& f : factors)
      acc *= h.counit(f);
    return acc;
  }
  NCPoly antipodeOfProduct(const std::vector<NCPoly>& factors) const {
    NCPoly acc(1);
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
      acc = alg.multiply(acc, h.antipode(*it));
    return acc;
  }

  // The three maps on a product of factors against their values on `value`.
  void homomorphism(const std::string& label, const std::vector<NCPoly>& factors, const NCPoly& value) {
    tensors("coproduct respects " + label, deltaOfProduct(factors), h.coproduct(value));
    scalars("counit respects " + label, epsOfProduct(factors), h.counit(value));
    polys("antipode respects " + label, antipodeOfProduct(factors), h.antipode(value));
  }

  void word(const Word& w) {
    const std::string name = formatWord(w, pres);
    const std::string label = name.empty() ? "1" : name;
    const NCPoly x = NCPoly::monomial(w);
    const TensorPoly d = h.coproductWord(w);
    const auto delta = [&](const Word& v) { return h.coproductWord(v); };
    tensors("coassociativity on " + label, expandLeg(d, 0, delta), expandLeg(d, 1, delta));
    const auto eps = [&](const Word& v) { return h.counitWord(v); };
    polys("left counit on " + label, flatten(contractLeg(d, 0, eps)), x);
    polys("right counit on " + label, flatten(contractLeg(d, 1, eps)), x);
    const NCPoly unit(h.counitWord(w));
    const auto s = [&](const Word& v) { return h.antipodeWord(v); };
    polys("left antipode on " + label, antipodeLeft(alg, d, s), unit);
    polys("right antipode on " + label, antipodeRight(alg, d, s), unit);
  }
};

} // namespace

Report verifyHopf(const HopfAlgebra& h, int maxDegree, std::uint64_t seed, int samples) {
  if (maxDegree < 0)
    fail(ErrorKind::Domain, "degree bound must be non-negative");
  Report report;
  report.check = "hopf";
  report.degree = maxDegree;
  report.seed = seed;
  const Algebra& alg = h.algebra();
  const Presentation& pres = alg.presentation();
  HopfChecker check{h, alg, pres, report};

  for (const auto& s : pres.swaps) {
    const NCPoly l = alg.generator(s.left), r = alg.generator(s.right);
    const std::string label = pres.gen(s.left).name + "*" + pres.gen(s.right).name;
    check.homomorphism(label, {l, r}, s.factor * alg.multiply(r, l));
  }
  for (const auto& s : pres.straighten) {
    const std::string label = pres.gen(s.first).name + "*" + pres.gen(s.second).name;
    check.homomorphism(label, {alg.generator(s.first), alg.generator(s.second)}, s.result);
  }
  for (int g = 0; g < static_cast<int>(pres.size()); ++g) {
    if (!pres.gen(g).invertible)
      continue;
    const std::string& name = pres.gen(g).name;
    check.homomorphism(name + "*" + name + "^-1", {alg.generator(g), alg.generator(g, -1)}, NCPoly(1));
    check.homomorphism(name + "^-1*" + name, {alg.generator(g, -1), alg.generator(g)}, NCPoly(1));
  }
  // Serre relators are not checked here: their images are only zero modulo
  // the Serre ideal in each leg.

  const std::vector<Word> basis = enumerateBasis(alg, maxDegree);
  for (const auto& w : basis)
    check.word(w);

  if (!basis.empty() && samples > 0) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int i = 0; i < samples; ++i) {
      const Word& u = basis[pick(rng)];
      const Word& v = basis[pick(rng)];
      const NCPoly pu = NCPoly::monomial(u), pv = NCPoly::monomial(v);
      const std::string label = "(" + formatPoly(pu, pres) + ")*(" + formatPoly(pv, pres) + ")";
      check.homomorphism(label, {pu, pv}, alg.multiply(pu, pv));
    }
  }
  return report;
}

QScalar qbinomFromCoproduct(int a, int r, BinomialBase base) {
  if (a < 0 || r < 0 || r > a)
    fail(ErrorKind::Domain, "q-binomial needs 0 <= r <= a");
  const HopfPtr loop = builtinHopf("loop");
  const Presentation& pres = loop->presentation();
  const int x = pres.require(base == BinomialBase::QInverse ? "e0" : "f0");
  const TensorPoly d = loop->coproduct(loop->algebra().power(loop->algebra().generator(x), a));
  const Word target = r == 0 ? Word{} : Word{{x, r}};
  QScalar out;
  for (const auto& [legs, c] : d.terms())
    if (legs[0] == target)
      out += c;
  return out;
}

} // namespace qbx
