#pragma once

#include "hopf.hpp"

namespace qbx {

// The central extension CZ -> affine_new -> loop and its cocycle data.
//
// Elements of CZ are NCPolys over the cz presentation. Extension elements
// a (x) h are rank-2 tensors with a cz leg and a loop leg; their coproducts
// are rank-4 tensors (cz, loop, cz, loop).
class Bicross {
public:
  Bicross(HopfPtr affine, HopfPtr loop, HopfPtr cz);
  static const Bicross& builtin();

  const HopfAlgebra& affine() const { return *affine_; }
  const HopfAlgebra& loop() const { return *loop_; }
  const HopfAlgebra& cz() const { return *cz_; }

  // c -> 1, letters renamed to the loop alphabet.
  NCPoly projectLoop(const NCPoly& p) const;
  // Letterwise renaming of normal-ordered loop words; linear, not multiplicative.
  NCPoly sectionJ(const NCPoly& p) const;
  int grade(const Word& loopWord) const;
  // w -> w (x) c^grade(w) on normal-ordered terms; legs (loop, cz).
  TensorPoly coactionBeta(const NCPoly& p) const;

  // (S j(h^(1))) h^(2), with the cz leg read as a power of c.
  NCPoly jInverse(const NCPoly& p) const;
  // Independent route: solves j(h_(1)) j^-1(h_(2)) = eps(h) by recursion on
  // the raising/lowering degree.
  NCPoly jInverseBySolving(const NCPoly& p) const;

  // j(h_(1)) j(g_(1)) (S j((h_(2) g_(2))^(1))) (h_(2) g_(2))^(2); throws
  // Internal if the value leaves CZ.
  NCPoly cocycle(const NCPoly& h, const NCPoly& g) const;
  // j(h_(1)) j(g_(1)) j^-1(h_(2) g_(2)) with the solved inverse.
  NCPoly cocycleViaInverse(const NCPoly& h, const NCPoly& g) const;
  // j(h_(1) g_(1)) j^-1(g_(2)) j^-1(h_(2)).
  NCPoly cocycleInverse(const NCPoly& h, const NCPoly& g) const;

  TensorPoly extProduct(const TensorPoly& x, const TensorPoly& y) const;
  TensorPoly extCoproduct(const TensorPoly& x) const;
  QScalar extCounit(const TensorPoly& x) const;
  // a (x) h -> a j(h) and back (c moved to the left).
  NCPoly phi(const TensorPoly& x) const;
  TensorPoly phiInverse(const NCPoly& p) const;
  // a (x) h -> 1 (x) h  embedding of loop elements.
  TensorPoly extOf(const NCPoly& cz, const NCPoly& loop) const;

  // Affine element with only c-letters -> cz element; throws Internal otherwise.
  NCPoly toCZ(const NCPoly& affine, const std::string& context) const;
  NCPoly fromCZ(const NCPoly& cz) const;

  std::string formatExt(const TensorPoly& x) const;
  std::string formatExtCoproduct(const TensorPoly& t) const;
  std::string formatLoopCZ(const TensorPoly& t) const;

private:
  NCPoly cocycleWords(const Word& h, const Word& g) const;
  NCPoly cocycleInverseWords(const Word& h, const Word& g) const;
  NCPoly jInverseWord(const Word& w) const;
  NCPoly jInverseSolvedWord(const Word& w) const;
  Word czWord(int power) const;
  int cPower(const Word& czWord) const;

  HopfPtr affine_, loop_, cz_;
  int c_ = -1;       // index of c in affine_new
  int czGen_ = -1;   // index of c in cz
  std::vector<int> toAffine_;   // loop generator -> affine generator
  std::vector<int> toLoop_;     // affine generator -> loop generator (-1 for c)

  struct PairLess {
    bool operator()(const std::pair<Word, Word>& a, const std::pair<Word, Word>& b) const {
      WordLess less;
      if (less(a.first, b.first) || less(b.first, a.first))
        return less(a.first, b.first);
      return less(a.second, b.second);
    }
  };

  mutable std::mutex mutex_;
  mutable std::map<std::pair<Word, Word>, NCPoly, PairLess> chiCache_;
  mutable std::map<std::pair<Word, Word>, NCPoly, PairLess> chiInvCache_;
  mutable std::unordered_map<Word, NCPoly, WordHash> jInvCache_;
  mutable std::unordered_map<Word, NCPoly, WordHash> jInvSolvedCache_;
};

Report verifyCocycle(const Bicross& b, int maxDegree);
Report verifyExtCompatibility(const Bicross& b, int maxDegree);
// The basis bijection is checked up to max(maxDegree, bijectionDegree).
// Products run over pairs of total degree <= maxDegree, or with eachFactor
// over all pairs whose factors both have degree <= maxDegree.
Report verifyIsomorphism(const Bicross& b, int maxDegree, std::uint64_t seed, int bijectionDegree = 0,
                         bool eachFactor = false);

} // namespace qbx
