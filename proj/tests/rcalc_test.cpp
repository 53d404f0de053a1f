#include <doctest.h>

#include "errors.hpp"
#include "rcalc.hpp"

#include <algorithm>

using namespace qbx;

namespace {

MToken plus(int slot, const std::string& label, int shift = 0) { return {MSign::Plus, slot, label, shift, false}; }
MToken minus(int slot, const std::string& label, int shift = 0) { return {MSign::Minus, slot, label, shift, false}; }
RToken r(int i, int j, int shift, bool inverted = false) {
  return {i, j, "z" + std::to_string(i), "z" + std::to_string(j), shift, inverted};
}

std::vector<std::pair<int, int>> slots(const RSeq& s) {
  std::vector<std::pair<int, int>> out;
  for (const auto& t : s)
    out.emplace_back(t.i, t.j);
  return out;
}

// The answer displayed for two minus and two plus tokens.
RSeq twoByTwo() {
  return {r(2, 3, -2), r(1, 3, -2), r(2, 4, -2), r(1, 4, -2),
          r(1, 4, 0, true), r(2, 4, 0, true), r(1, 3, 0, true), r(2, 3, 0, true)};
}

} // namespace

TEST_CASE("normal ordering one crossing") {
  const RCElement e = rcNormalOrder(RCElement::word({minus(1, "z"), plus(2, "w")}, true), true);
  REQUIRE(e.summands.size() == 1);
  const RCTerm& t = e.summands[0];
  CHECK(t.left == RSeq{{1, 2, "z", "w", -2, false}});
  CHECK(t.mWord == MWord{plus(2, "w"), minus(1, "z")});
  CHECK(t.right == RSeq{{1, 2, "z", "w", 0, true}});
  CHECK(formatRCElement(e) == "R[1,2](z/w; q^-2c) M+[2](w) M-[1](z) R^-1[1,2](z/w)");

  const RCElement ordered = RCElement::word({plus(1, "z"), minus(2, "w")}, true);
  CHECK(rcNormalOrder(ordered, true) == ordered);
}

TEST_CASE("normal ordering two by two") {
  const MWord w = {minus(1, "z1"), minus(2, "z2"), plus(3, "z3"), plus(4, "z4")};
  const RCElement e = rcNormalOrder(RCElement::word(w, false), false);
  REQUIRE(e.summands.size() == 1);
  const RCTerm& t = e.summands[0];
  using P = std::vector<std::pair<int, int>>;
  CHECK(slots(t.left) == P{{2, 3}, {1, 3}, {2, 4}, {1, 4}});
  CHECK(slots(t.right) == P{{1, 4}, {2, 4}, {1, 3}, {2, 3}});
  CHECK(t.mWord == MWord{plus(3, "z3"), plus(4, "z4"), minus(1, "z1"), minus(2, "z2")});
  CHECK(std::all_of(t.left.begin(), t.left.end(), [](const RToken& x) { return !x.inverted && x.cShift == 0; }));
  CHECK(std::all_of(t.right.begin(), t.right.end(), [](const RToken& x) { return x.inverted; }));
}

TEST_CASE("normal ordering properties") {
  for (int m = 0; m <= 3; ++m)
    for (int p = 0; p <= 3; ++p) {
      MWord w = rcSignWord(MSign::Minus, m, 1);
      const MWord pw = rcSignWord(MSign::Plus, p, m + 1);
      w.insert(w.end(), pw.begin(), pw.end());
      const RCElement e = rcNormalOrder(RCElement::word(w, true), true);
      const RCTerm& t = e.summands.at(0);
      CHECK(static_cast<int>(t.left.size()) == m * p);
      CHECK(static_cast<int>(t.right.size()) == m * p);
      CHECK(rcCrossings(w) == m * p);
      CHECK(rcCrossings(t.mWord) == 0);
      // idempotent on the M part
      CHECK(rcNormalOrder(RCElement::word(t.mWord, true), true) == RCElement::word(t.mWord, true));
      // same-sign tokens keep their relative order
      std::vector<int> plusSlots, minusSlots;
      for (const auto& x : t.mWord)
        (x.sign == MSign::Plus ? plusSlots : minusSlots).push_back(x.slot);
      CHECK(std::is_sorted(plusSlots.begin(), plusSlots.end()));
      CHECK(std::is_sorted(minusSlots.begin(), minusSlots.end()));
    }
}

TEST_CASE("coaction, j and antipode on tokens") {
  CHECK(rcBeta(RCElement::word({plus(1, "z")}, false)) == RCElement::word({plus(1, "z", 1)}, false));
  CHECK(rcBeta(RCElement::word({plus(1, "z"), minus(2, "w")}, false)) ==
        RCElement::word({plus(1, "z", 1), minus(2, "w", -1)}, false));
  CHECK(rcBeta(RCElement::word({}, false)) == RCElement::word({}, false));
  // applying the coaction twice shifts by two
  const RCElement x = RCElement::word({plus(1, "z"), plus(2, "u"), minus(3, "w")}, false);
  CHECK(rcBeta(rcBeta(x)) == rcBeta(x, 2));
  CHECK(rcBeta(rcBeta(x, 3), -1) == rcBeta(x, 2));

  CHECK(rcJ(RCElement::word({plus(1, "z")}, false)) == RCElement::word({plus(1, "z")}, true));
  CHECK(rcJ(RCElement::word({plus(1, "z"), minus(2, "w")}, false)) ==
        RCElement::word({plus(1, "z"), minus(2, "w")}, true));
  CHECK_THROWS_AS(rcJ(RCElement::word({minus(1, "z"), plus(2, "w")}, false)), Error);

  CHECK(rcAntipode({plus(1, "z")}) == RCElement::word({{MSign::Plus, 1, "z", -1, true}}, true));
  CHECK(rcAntipode({minus(1, "z", -1)}) == RCElement::word({{MSign::Minus, 1, "z", 0, true}}, true));
  CHECK(rcAntipode({}) == RCElement::word({}, true));
  CHECK(rcAntipode({plus(1, "z"), minus(2, "w")}) ==
        RCElement::word({{MSign::Minus, 2, "w", 1, true}, {MSign::Plus, 1, "z", -1, true}}, true));
  CHECK(formatMToken({MSign::Plus, 1, "z", -1, true}, true) == "(M+)^-1[1](z; q^-c)");
  CHECK(formatMToken(plus(2, "w"), false) == "m+[2](w)");
}

TEST_CASE("canonical order") {
  CHECK(rcCanonicalize({r(1, 3, 0), r(2, 4, 0)}) == rcCanonicalize({r(2, 4, 0), r(1, 3, 0)}));
  CHECK(rcCanonicalize({r(1, 3, 0), r(1, 2, 0)}) == RSeq{r(1, 3, 0), r(1, 2, 0)});
  CHECK(rcCanonicalize(twoByTwo()) == twoByTwo());
  CHECK(rcEqual({r(1, 3, -2), r(2, 4, -2)}, {r(2, 4, -2), r(1, 3, -2)}));
  CHECK_FALSE(rcEqual({r(1, 2, 0), r(1, 3, 0)}, {r(1, 3, 0), r(1, 2, 0)}));
  const RSeq c = rcCanonicalize(twoByTwo());
  CHECK(rcCanonicalize(c) == c);
}

TEST_CASE("cancellation") {
  CHECK(rcCancel({r(1, 2, 0), r(1, 2, 0, true)}).empty());
  CHECK(rcCancel({r(1, 2, 0), r(3, 4, 0), r(1, 2, 0, true)}) == RSeq{r(3, 4, 0)});
  CHECK(rcCancel({r(1, 2, 0), r(1, 3, 0), r(1, 2, 0, true)}).size() == 3);
  CHECK(rcCancel({r(1, 2, -2), r(1, 2, 0, true)}).size() == 2);
  CHECK(rcCancel(rcDropShifts(twoByTwo())).empty());
}

TEST_CASE("cocycle on matrix generators") {
  CHECK(rcCocycleDirect({plus(1, "z")}, {minus(2, "w")}).empty());
  CHECK(rcCocycleClosed({plus(1, "z")}, {minus(2, "w")}).empty());

  const RSeq one = rcCocycleDirect({minus(1, "z")}, {plus(2, "w")});
  CHECK(one == RSeq{{1, 2, "z", "w", -2, false}, {1, 2, "z", "w", 0, true}});
  CHECK(formatRSeq(one) == "R[1,2](z/w; q^-2c) R^-1[1,2](z/w)");
  CHECK(rcCocycleClosed({minus(1, "z")}, {plus(2, "w")}) == one);

  const MWord m = rcSignWord(MSign::Minus, 2, 1), p = rcSignWord(MSign::Plus, 2, 3);
  CHECK(rcCanonicalize(rcCocycleDirect(m, p)) == twoByTwo());
  CHECK(rcCanonicalize(rcCocycleClosed(m, p)) == twoByTwo());
  CHECK(formatRSeq(rcCanonicalize(rcCocycleDirect(m, p))) ==
        "R[2,3](z2/z3; q^-2c) R[1,3](z1/z3; q^-2c) R[2,4](z2/z4; q^-2c) R[1,4](z1/z4; q^-2c) "
        "R^-1[1,4](z1/z4) R^-1[2,4](z2/z4) R^-1[1,3](z1/z3) R^-1[2,3](z2/z3)");

  // same sign on both sides: nothing to reorder
  CHECK(rcCocycleClosed({plus(1, "z")}, {plus(2, "w")}).empty());
  CHECK(rcCocycleDirect({minus(1, "z")}, {minus(2, "w")}).empty());
  CHECK(formatRSeq({}) == "1");
}

TEST_CASE("closed and direct agree") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (const bool plusFirst : {false, true}) {
        const MWord m = rcSignWord(MSign::Minus, a, plusFirst ? b + 1 : 1);
        const MWord p = rcSignWord(MSign::Plus, b, plusFirst ? 1 : a + 1);
        const MWord& h = plusFirst ? p : m;
        const MWord& g = plusFirst ? m : p;
        const RSeq closed = rcCocycleClosed(h, g);
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(plusFirst);
        CHECK(static_cast<int>(closed.size()) == (plusFirst ? 0 : 2 * a * b));
        CHECK(rcEqual(rcCocycleDirect(h, g, 24), closed));
        CHECK(rcCancel(rcDropShifts(closed)).empty());
      }
}

TEST_CASE("direct search bounds and input checks") {
  const MWord m = rcSignWord(MSign::Minus, 3, 1), p = rcSignWord(MSign::Plus, 3, 4);
  CHECK_THROWS_AS(rcCocycleDirect(m, p, 4), Error);
  try {
    rcCocycleDirect(m, p, 4);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Incomplete);
  }
  CHECK_THROWS_AS(rcCocycleDirect({minus(1, "z")}, {plus(1, "w")}), Error);
  CHECK_THROWS_AS(rcCocycleDirect({minus(1, "z", 1)}, {plus(2, "w")}), Error);
  CHECK_THROWS_AS(rcCocycleDirect({minus(1, "z"), plus(2, "w")}, {}), Error);
  CHECK_THROWS_AS(rcSignWord(MSign::Plus, -1, 1), Error);
}

TEST_CASE("labels and json") {
  const MWord w = rcSignWord(MSign::Minus, 2, 1, {"a", "b"});
  CHECK(w[0].label == "a");
  CHECK(w[1].label == "b");
  CHECK(rcSignWord(MSign::Plus, 1, 3)[0].label == "z3");
  const nlohmann::json j = rTokenToJson(r(1, 3, -2));
  CHECK(j["slots"] == nlohmann::json({1, 3}));
  CHECK(j["ratio"] == nlohmann::json({"z1", "z3"}));
  CHECK(j["cshift"] == -2);
  CHECK(j["inv"] == false);
  CHECK(rSeqToJson(twoByTwo()).size() == 8);
}
