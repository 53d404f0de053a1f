#pragma once

#include "algebra.hpp"
#include "report.hpp"

#include <cstdint>
#include <functional>

namespace qbx {

// One algebra per tensor leg.
using LegAlgebras = std::vector<const Algebra*>;

// Elementary tensor p_1 (x) ... (x) p_r.
TensorPoly tensorOf(const std::vector<NCPoly>& legs, const QScalar& coeff = QScalar(1));
// Legwise product, each leg normal-ordered in its own algebra.
TensorPoly tensorMultiply(const TensorPoly& a, const TensorPoly& b, const LegAlgebras& legs);
// Replaces leg `leg` of every term by the tensor f(word); the rank grows by
// rank(f) - 1.
TensorPoly expandLeg(const TensorPoly& t, std::size_t leg,
                     const std::function<TensorPoly(const Word&)>& f);
// Applies a scalar-valued map to one leg, dropping it.
TensorPoly contractLeg(const TensorPoly& t, std::size_t leg,
                       const std::function<QScalar(const Word&)>& f);
// Multiplies all legs together in `alg` (legs must share one algebra).
NCPoly multiplyLegs(const TensorPoly& t, const Algebra& alg);
// Rank-1 tensor <-> polynomial.
NCPoly flatten(const TensorPoly& t);
TensorPoly lift(const NCPoly& p);

// Coproduct, counit and antipode extended from the generator tables.
// Missing antipode entries are derived (group-like or skew-primitive shapes);
// every entry, given or derived, is checked against the antipode axiom.
class HopfAlgebra {
public:
  explicit HopfAlgebra(AlgebraPtr alg);

  const Algebra& algebra() const noexcept { return *alg_; }
  const AlgebraPtr& algebraPtr() const noexcept { return alg_; }
  const Presentation& presentation() const noexcept { return alg_->presentation(); }
  // The presentation with the antipode table filled in.
  const Presentation& completed() const noexcept { return completed_; }

  TensorPoly coproduct(const NCPoly& p) const;
  TensorPoly coproductWord(const Word& w) const;
  // Rank n+1, obtained by applying the coproduct to the first leg n times.
  TensorPoly iteratedCoproduct(const NCPoly& p, int n) const;
  QScalar counit(const NCPoly& p) const;
  QScalar counitWord(const Word& w) const;
  NCPoly antipode(const NCPoly& p) const;
  NCPoly antipodeWord(const Word& w) const;

  // Legwise product in this algebra.
  TensorPoly multiply(const TensorPoly& a, const TensorPoly& b) const;
  LegAlgebras legs(std::size_t rank) const { return LegAlgebras(rank, alg_.get()); }

private:
  TensorPoly runCoproduct(const Letter& l) const;
  NCPoly runAntipode(const Letter& l) const;

  AlgebraPtr alg_;
  Presentation completed_;
  std::vector<TensorPoly> delta_;
  std::vector<QScalar> eps_;
  std::vector<NCPoly> antipode_;

  mutable std::mutex mutex_;
  mutable std::unordered_map<Word, TensorPoly, WordHash> deltaCache_;
  mutable std::unordered_map<Word, NCPoly, WordHash> antipodeCache_;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

// Fills the antipode table by S(g) = g^-1 for group-like g and
// S(x) = -b^-1 x a^-1 for x with coproduct x (x) a + b (x) x.
Presentation deriveAntipode(const Presentation& pres);

HopfPtr builtinHopf(const std::string& name);

// Coassociativity, counit and antipode laws on every basis word up to
// maxDegree; compatibility of coproduct, counit and antipode with each swap
// and straightening rule and with inverses; plus `samples` seeded random
// pairs checking multiplicativity on products that need reordering.
Report verifyHopf(const HopfAlgebra& h, int maxDegree, std::uint64_t seed, int samples = 200);

// Coefficient of x^r (x) (...) in the coproduct of x^a in the loop algebra,
// with x = e0 for base q^-1 and x = f0 for base q.
QScalar qbinomFromCoproduct(int a, int r, BinomialBase base);

} // namespace qbx
