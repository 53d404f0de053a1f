#pragma once

#include "algebra.hpp"
#include "report.hpp"

namespace qbx {

struct Relator {
  std::string label;
  NCPoly value;   // element of the free algebra, not normal-ordered
  bool serre = false;
};

// Relators read off the swap, straightening and Serre data of a presentation.
std::vector<Relator> definingRelators(const Presentation& pres);

// affine_original -> affine_new:
//   E_i -> E_i, K1 -> K, K0 -> c*K^-1, F1 -> K^-1*F1, F0 -> c^-1*K*F0
const AlgebraMap& changeGeneratorsMap();
NCPoly changeGenerators(const NCPoly& p);

// Integer grading on words that every rule of the presentation respects:
// one component per pair of raising/lowering generators linked by a
// straightening rule, +1 for raising and -1 for lowering. Falls back to the
// trivial grading if some rule is not homogeneous.
class Grading {
public:
  explicit Grading(const Presentation& pres);
  std::vector<int> weight(const Word& w) const;

private:
  bool homogeneous(const Presentation& pres) const;

  std::vector<int> cls_;
  std::vector<int> sign_;
  int classes_ = 0;
};

// Decides p in span{u*s*v : s Serre relator, u, v words, deg(u) + deg(s) +
// deg(v) <= maxDegree}; deg counts every letter with multiplicity |exp|.
bool serreIdealMembership(const NCPoly& p, const Algebra& alg, int maxDegree);

// Rewrites every raw word up to maxDegree letters at each reducible position
// and compares the resulting normal forms.
Report localConfluenceReport(const Algebra& alg, int maxDegree);

} // namespace qbx
