#pragma once

#include <json.hpp>

#include <string>
#include <tuple>
#include <variant>
#include <vector>

namespace qbx {

enum class MSign { Plus, Minus };

// M^sign_slot(label * q^(cShift*c)), or its pointwise inverse.
struct MToken {
  MSign sign = MSign::Plus;
  int slot = 1;
  std::string label;
  int cShift = 0;
  bool inverted = false;

  auto key() const { return std::tie(slot, sign, label, cShift, inverted); }
  friend bool operator==(const MToken& a, const MToken& b) { return a.key() == b.key(); }
  friend bool operator<(const MToken& a, const MToken& b) { return a.key() < b.key(); }
};

// R_ij(num/den * q^(cShift*c)), or its inverse.
struct RToken {
  int i = 1;
  int j = 2;
  std::string num;
  std::string den;
  int cShift = 0;
  bool inverted = false;

  auto key() const { return std::tie(i, j, num, den, cShift, inverted); }
  friend bool operator==(const RToken& a, const RToken& b) { return a.key() == b.key(); }
  friend bool operator<(const RToken& a, const RToken& b) { return a.key() < b.key(); }
};

using RSeq = std::vector<RToken>;
using MWord = std::vector<MToken>;

struct RCTerm {
  RSeq left;
  MWord mWord;
  RSeq right;

  friend bool operator==(const RCTerm& a, const RCTerm& b) {
    return a.left == b.left && a.mWord == b.mWord && a.right == b.right;
  }
};

// Sum of R...M...R products. `affine` distinguishes M tokens from loop m tokens.
struct RCElement {
  bool affine = false;
  std::vector<RCTerm> summands;

  static RCElement word(MWord w, bool affine) { return {affine, {RCTerm{{}, std::move(w), {}}}}; }
  friend bool operator==(const RCElement& a, const RCElement& b) {
    return a.affine == b.affine && a.summands == b.summands;
  }
};

// Moves every minus token to the right of every plus token with
//   M-_i(z) M+_j(w) -> R_ij(z/w; s - 2) M+_j(w) M-_i(z) R_ij^-1(z/w; s)
// where s is the difference of the two shifts; without central charge the
// left token keeps shift s. Emitted tokens commute past the remaining M tokens
// (their slots are distinct), so they collect at the two ends.
RCElement rcNormalOrder(const RCElement& e, bool centralChargeActive);
// Number of (minus before plus) pairs.
int rcCrossings(const MWord& w);

// Shifts plus tokens by +amount and minus tokens by -amount; R tokens are
// constants of the normal-ordered expression and stay as they are.
RCElement rcBeta(const RCElement& e, int amount = 1);
RCElement rcJ(const RCElement& e);
// Reversed word of inverted tokens with shift k -> k - 1 (plus), k + 1 (minus).
RCElement rcAntipode(const MWord& w);

RSeq rcCanonicalize(const RSeq& s);
bool rcEqual(const RSeq& a, const RSeq& b);
// Cancels adjacent (after commutation) R R^-1 pairs with equal arguments.
RSeq rcCancel(const RSeq& s);
RSeq rcDropShifts(RSeq s);

// chi(h (x) g) for normal-ordered loop words by rewriting the defining
// formula with the cross relations in both directions, cancellation of M M^-1
// and commutation of disjoint slots. Breadth-first up to maxDepth substantive
// steps; throws Incomplete if no pure R form is reached.
RSeq rcCocycleDirect(const MWord& h, const MWord& g, int maxDepth = 12);
// Left tokens of the loop normal ordering of h g with shift -2, followed by
// their reversed inverses.
RSeq rcCocycleClosed(const MWord& h, const MWord& g);

// count tokens of one sign on consecutive slots starting at firstSlot; labels
// default to z<slot>.
MWord rcSignWord(MSign sign, int count, int firstSlot, const std::vector<std::string>& labels = {});

std::string formatRToken(const RToken& t);
std::string formatRSeq(const RSeq& s);
std::string formatMToken(const MToken& t, bool affine);
std::string formatRCElement(const RCElement& e);
nlohmann::json rTokenToJson(const RToken& t);
nlohmann::json rSeqToJson(const RSeq& s);

} // namespace qbx
