#pragma once

#include "presentation.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace qbx {

// Termination measure for the normal-ordering rewrite system, compared
// lexicographically: raising/lowering degree, lowering-before-raising
// inversions, (raising|lowering)-before-cartan inversions, and the remaining
// group-like ordering inversions.
using RewriteMeasure = std::array<long, 4>;

// Rewrite engine over a presentation. Normal words are
//   (central runs)(cartan runs)(free raising word)(free lowering word)
// with central and cartan runs sorted by alphabet index.
//
// The presentation is immutable; normal forms of words are memoized behind a
// mutex so one Algebra can be shared across threads.
class Algebra {
public:
  explicit Algebra(Presentation presentation);

  const Presentation& presentation() const noexcept { return pres_; }
  const std::string& name() const noexcept { return pres_.name; }
  const Generator& gen(int i) const { return pres_.gen(i); }

  NCPoly normalForm(const NCPoly& p) const;
  NCPoly normalWord(const Word& w) const;
  NCPoly multiply(const NCPoly& a, const NCPoly& b) const;
  NCPoly multiplyWords(const Word& a, const Word& b) const;
  NCPoly power(const NCPoly& p, int n) const;

  bool isNormalWord(const Word& w) const;
  // First adjacent position that admits a rewrite, or npos.
  std::size_t firstReducible(const Word& w) const;
  bool reducibleAt(const Word& w, std::size_t pos) const;
  // One rewrite step at (pos, pos+1); the input need not have merged runs.
  NCPoly rewriteAt(const Word& w, std::size_t pos) const;

  RewriteMeasure measure(const Word& w) const;

  // Letters of generators that are invertible; used to check monomials.
  bool isGroupLikeWord(const Word& w) const;
  Word inverseWord(const Word& w) const;

  // Variables that look like a single generator.
  NCPoly generator(int index, int exp = 1) const;

  std::size_t cacheSize() const;

private:
  enum class Action { None, Merge, Commute, Swap, Straighten };
  struct Rule {
    Action action = Action::None;
    QScalar factor = QScalar(1);
    const NCPoly* result = nullptr;
  };

  const Rule& rule(int x, int y) const {
    return table_[static_cast<std::size_t>(x) * pres_.size() + static_cast<std::size_t>(y)];
  }
  bool outOfOrder(int x, int y) const;
  void buildTable();
  void validate() const;
  void checkLetter(const Letter& l) const;

  Presentation pres_;
  std::vector<Rule> table_;

  mutable std::mutex mutex_;
  mutable std::unordered_map<Word, NCPoly, WordHash> cache_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// Raw (non-normal-ordering) product: concatenation with run merging. Used
// while elaborating presentation data before an Algebra exists.
NCPoly freeMultiply(const NCPoly& a, const NCPoly& b);

// Algebra homomorphism defined by generator images. Images of invertible
// generators must be single group-like monomials so that negative powers are
// defined.
class AlgebraMap {
public:
  AlgebraMap(AlgebraPtr source, AlgebraPtr target, std::vector<NCPoly> images);

  NCPoly apply(const NCPoly& p) const;
  NCPoly applyWord(const Word& w) const;
  const Algebra& source() const { return *source_; }
  const Algebra& target() const { return *target_; }

private:
  AlgebraPtr source_;
  AlgebraPtr target_;
  std::vector<NCPoly> images_;
  std::vector<NCPoly> inverseImages_;
};

// Enumerate normal-form basis words with total degree <= maxDegree in basis
// order. Central and cartan exponents range over all integers within the
// degree budget.
std::vector<Word> enumerateBasis(const Algebra& alg, int maxDegree);
// The two factors of a basis word: group-like prefixes (central and cartan
// runs) and raising-then-lowering words.
std::vector<Word> enumerateGroupWords(const Algebra& alg, int maxDegree);
std::vector<Word> enumerateTriangularWords(const Algebra& alg, int maxDegree);

} // namespace qbx
