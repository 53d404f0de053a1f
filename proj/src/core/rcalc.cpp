#include "rcalc.hpp"

#include "errors.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace qbx {

namespace {

using Token = std::variant<MToken, RToken>;
using Seq = std::vector<Token>;

bool isM(const Token& t) { return std::holds_alternative<MToken>(t); }
const MToken& asM(const Token& t) { return std::get<MToken>(t); }
const RToken& asR(const Token& t) { return std::get<RToken>(t); }

bool shareSlot(const Token& a, const Token& b) {
  const auto slots = [](const Token& t) {
    return isM(t) ? std::pair{asM(t).slot, asM(t).slot} : std::pair{asR(t).i, asR(t).j};
  };
  const auto [a1, a2] = slots(a);
  const auto [b1, b2] = slots(b);
  return a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2;
}

// M tokens never commute with each other; anything else commutes when the
// slots are disjoint.
bool dependent(const Token& a, const Token& b) { return (isM(a) && isM(b)) || shareSlot(a, b); }

// Order used to pick the canonical representative: R before M, plain R by
// ascending slots, inverted R by descending slots (so that a sequence and its
// mirrored inverse are both canonical).
bool canonLess(const Token& a, const Token& b) {
  if (isM(a) != isM(b))
    return !isM(a);
  if (isM(a))
    return asM(a) < asM(b);
  const RToken& x = asR(a);
  const RToken& y = asR(b);
  if (x.inverted != y.inverted)
    return !x.inverted;
  if (x.inverted && std::tie(x.i, x.j) != std::tie(y.i, y.j))
    return std::tie(y.i, y.j) < std::tie(x.i, x.j);
  return x < y;
}

// Lexicographically least word in the commutation class.
Seq canonical(Seq s) {
  Seq out;
  out.reserve(s.size());
  std::vector<bool> used(s.size(), false);
  for (std::size_t n = 0; n < s.size(); ++n) {
    std::optional<std::size_t> best;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (used[k])
        continue;
      bool free = true;
      for (std::size_t p = 0; p < k && free; ++p)
        free = used[p] || !dependent(s[p], s[k]);
      if (free && (!best || canonLess(s[k], s[*best])))
        best = k;
    }
    used[*best] = true;
    out.push_back(s[*best]);
  }
  return out;
}

// Representative in which the tokens at `pos` (increasing) are contiguous, in
// order, starting at the returned index; nullopt if the commutations do not
// allow it.
std::optional<std::pair<Seq, std::size_t>> makeAdjacent(const Seq& s, const std::vector<std::size_t>& pos) {
  const std::size_t lo = pos.front(), hi = pos.back();
  std::vector<bool> chosen(s.size(), false), after(s.size(), false), before(s.size(), false);
  for (auto p : pos)
    chosen[p] = true;
  for (std::size_t k = lo; k <= hi; ++k) {
    if (chosen[k])
      continue;
    for (std::size_t p = lo; p < k && !after[k]; ++p)
      after[k] = (chosen[p] || after[p]) && dependent(s[p], s[k]);
  }
  for (std::size_t k = hi + 1; k-- > lo;) {
    if (chosen[k])
      continue;
    for (std::size_t p = k + 1; p <= hi && !before[k]; ++p)
      before[k] = (chosen[p] || before[p]) && dependent(s[k], s[p]);
    if (before[k] && after[k])
      return std::nullopt;
  }
  Seq out(s.begin(), s.begin() + static_cast<long>(lo));
  for (std::size_t k = lo; k <= hi; ++k)
    if (!chosen[k] && !after[k])
      out.push_back(s[k]);
  const std::size_t start = out.size();
  for (auto p : pos)
    out.push_back(s[p]);
  for (std::size_t k = lo; k <= hi; ++k)
    if (after[k])
      out.push_back(s[k]);
  out.insert(out.end(), s.begin() + static_cast<long>(hi) + 1, s.end());
  return std::pair{std::move(out), start};
}

Seq replaced(const std::pair<Seq, std::size_t>& at, std::size_t count, const Seq& with) {
  Seq out(at.first.begin(), at.first.begin() + static_cast<long>(at.second));
  out.insert(out.end(), with.begin(), with.end());
  out.insert(out.end(), at.first.begin() + static_cast<long>(at.second + count), at.first.end());
  return out;
}

bool plain(const MToken& t, MSign sign) { return t.sign == sign && !t.inverted; }

// R_ij for the pair (minus token a, plus token b).
bool linksPair(const RToken& r, const MToken& a, const MToken& b) {
  return r.i == a.slot && r.j == b.slot && r.num == a.label && r.den == b.label;
}

RToken crossToken(const MToken& minus, const MToken& plus, int shift, bool inverted) {
  return {minus.slot, plus.slot, minus.label, plus.label, shift, inverted};
}

// All sequences one substantive step away.
std::vector<Seq> successors(const Seq& s) {
  std::vector<Seq> out;
  const std::size_t n = s.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      // cancellation M M^-1 or M^-1 M
      if (isM(s[a]) && isM(s[b])) {
        MToken x = asM(s[a]), y = asM(s[b]);
        if (x.inverted != y.inverted) {
          x.inverted = y.inverted = false;
          if (x == y)
            if (auto at = makeAdjacent(s, {a, b}))
              out.push_back(replaced(*at, 2, {}));
        }
      }
      for (std::size_t c = b + 1; c < n; ++c) {
        // M-_i M+_j R_ij(s) -> R_ij(s - 2) M+_j M-_i
        if (isM(s[a]) && isM(s[b]) && !isM(s[c])) {
          const MToken& mi = asM(s[a]);
          const MToken& pj = asM(s[b]);
          const RToken& r = asR(s[c]);
          if (plain(mi, MSign::Minus) && plain(pj, MSign::Plus) && !r.inverted && linksPair(r, mi, pj) &&
              r.cShift == mi.cShift - pj.cShift)
            if (auto at = makeAdjacent(s, {a, b, c}))
              out.push_back(replaced(*at, 3, {crossToken(mi, pj, r.cShift - 2, false), pj, mi}));
        }
        // and back: R_ij(s - 2) M+_j M-_i -> M-_i M+_j R_ij(s)
        if (!isM(s[a]) && isM(s[b]) && isM(s[c])) {
          const RToken& r = asR(s[a]);
          const MToken& pj = asM(s[b]);
          const MToken& mi = asM(s[c]);
          if (plain(mi, MSign::Minus) && plain(pj, MSign::Plus) && !r.inverted && linksPair(r, mi, pj) &&
              r.cShift == mi.cShift - pj.cShift - 2)
            if (auto at = makeAdjacent(s, {a, b, c}))
              out.push_back(replaced(*at, 3, {mi, pj, crossToken(mi, pj, r.cShift + 2, false)}));
        }
      }
    }
  }
  return out;
}

void checkLoopWord(const MWord& w, const std::string& what) {
  for (const auto& t : w)
    if (t.inverted || t.cShift != 0)
      fail(ErrorKind::Domain, what + " must consist of plain loop tokens");
}

void checkSlots(const MWord& w) {
  std::set<int> seen;
  for (const auto& t : w)
    if (!seen.insert(t.slot).second)
      fail(ErrorKind::Domain, "slot " + std::to_string(t.slot) + " used twice");
}

bool normalOrdered(const MWord& w) { return rcCrossings(w) == 0; }

Seq toSeq(const RSeq& s) { return Seq(s.begin(), s.end()); }

RSeq toRSeq(const Seq& s) {
  RSeq out;
  for (const auto& t : s)
    out.push_back(asR(t));
  return out;
}

} // namespace

int rcCrossings(const MWord& w) {
  int n = 0, minus = 0;
  for (const auto& t : w) {
    if (t.sign == MSign::Minus)
      ++minus;
    else
      n += minus;
  }
  return n;
}

RCElement rcNormalOrder(const RCElement& e, bool centralChargeActive) {
  RCElement out{e.affine, {}};
  for (const auto& term : e.summands) {
    for (const auto& t : term.mWord)
      if (t.inverted)
        fail(ErrorKind::Domain, "normal ordering needs non-inverted M tokens");
    RCTerm r = term;
    RSeq emittedRight;
    for (;;) {
      auto it = std::adjacent_find(r.mWord.begin(), r.mWord.end(), [](const MToken& a, const MToken& b) {
        return a.sign == MSign::Minus && b.sign == MSign::Plus;
      });
      if (it == r.mWord.end())
        break;
      const MToken minus = *it, plus = *(it + 1);
      const int s = minus.cShift - plus.cShift;
      r.left.push_back(crossToken(minus, plus, centralChargeActive ? s - 2 : s, false));
      emittedRight.insert(emittedRight.begin(), crossToken(minus, plus, s, true));
      std::iter_swap(it, it + 1);
    }
    r.right.insert(r.right.begin(), emittedRight.begin(), emittedRight.end());
    out.summands.push_back(std::move(r));
  }
  return out;
}

RCElement rcBeta(const RCElement& e, int amount) {
  RCElement out = e;
  for (auto& term : out.summands)
    for (auto& t : term.mWord)
      t.cShift += t.sign == MSign::Plus ? amount : -amount;
  return out;
}

RCElement rcJ(const RCElement& e) {
  for (const auto& term : e.summands)
    if (!normalOrdered(term.mWord))
      fail(ErrorKind::Domain, "j is defined on normal-ordered words");
  RCElement out = e;
  out.affine = true;
  return out;
}

RCElement rcAntipode(const MWord& w) {
  MWord out(w.rbegin(), w.rend());
  for (auto& t : out) {
    t.inverted = !t.inverted;
    t.cShift += t.sign == MSign::Plus ? -1 : 1;
  }
  return RCElement::word(std::move(out), true);
}

RSeq rcCanonicalize(const RSeq& s) { return toRSeq(canonical(toSeq(s))); }

bool rcEqual(const RSeq& a, const RSeq& b) { return rcCanonicalize(a) == rcCanonicalize(b); }

RSeq rcCancel(const RSeq& s) {
  Seq cur = toSeq(s);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < cur.size() && !changed; ++a)
      for (std::size_t b = a + 1; b < cur.size() && !changed; ++b) {
        RToken x = asR(cur[a]), y = asR(cur[b]);
        if (x.inverted == y.inverted)
          continue;
        x.inverted = y.inverted = false;
        if (!(x == y))
          continue;
        if (auto at = makeAdjacent(cur, {a, b})) {
          cur = replaced(*at, 2, {});
          changed = true;
        }
      }
  }
  return toRSeq(canonical(cur));
}

RSeq rcDropShifts(RSeq s) {
  for (auto& t : s)
    t.cShift = 0;
  return s;
}

RSeq rcCocycleDirect(const MWord& h, const MWord& g, int maxDepth) {
  checkLoopWord(h, "left argument");
  checkLoopWord(g, "right argument");
  MWord hg = h;
  hg.insert(hg.end(), g.begin(), g.end());
  checkSlots(hg);
  if (!normalOrdered(h) || !normalOrdered(g))
    fail(ErrorKind::Domain, "cocycle arguments must be normal-ordered words");

  // j(h) j(g) (S j(beta(hg)^(1))) beta(hg)^(2): the c of the coaction leg is
  // multiplied in after S, so its shifts cancel those of S.
  const RCTerm nf = rcNormalOrder(RCElement::word(hg, false), false).summands.front();
  const RCElement inner = rcJ(rcBeta(RCElement::word(nf.mWord, false)));
  const MWord back = rcAntipode(inner.summands.front().mWord).summands.front().mWord;
  Seq start(hg.begin(), hg.end());
  start.insert(start.end(), nf.left.begin(), nf.left.end());
  start.insert(start.end(), back.begin(), back.end());
  start.insert(start.end(), nf.right.begin(), nf.right.end());

  std::set<Seq> seen;
  std::vector<Seq> frontier{canonical(start)};
  seen.insert(frontier.front());
  for (int depth = 0;; ++depth) {
    std::sort(frontier.begin(), frontier.end());
    for (const auto& s : frontier)
      if (std::none_of(s.begin(), s.end(), isM))
        return toRSeq(s);
    if (depth == maxDepth || frontier.empty())
      break;
    std::vector<Seq> next;
    for (const auto& s : frontier)
      for (auto& t : successors(s)) {
        Seq c = canonical(std::move(t));
        if (seen.insert(c).second)
          next.push_back(std::move(c));
      }
    frontier = std::move(next);
  }
  fail(ErrorKind::Incomplete, "no pure R form within " + std::to_string(maxDepth) + " rewriting steps");
}

RSeq rcCocycleClosed(const MWord& h, const MWord& g) {
  checkLoopWord(h, "left argument");
  checkLoopWord(g, "right argument");
  MWord hg = h;
  hg.insert(hg.end(), g.begin(), g.end());
  checkSlots(hg);
  const RCTerm nf = rcNormalOrder(RCElement::word(hg, false), false).summands.front();
  RSeq out;
  for (RToken t : nf.left) {
    t.cShift -= 2;
    out.push_back(t);
  }
  for (auto it = nf.left.rbegin(); it != nf.left.rend(); ++it) {
    RToken t = *it;
    t.inverted = !t.inverted;
    t.cShift = 0;
    out.push_back(t);
  }
  return out;
}

MWord rcSignWord(MSign sign, int count, int firstSlot, const std::vector<std::string>& labels) {
  if (count < 0)
    fail(ErrorKind::Domain, "token count must be non-negative");
  MWord w;
  for (int k = 0; k < count; ++k) {
    const int slot = firstSlot + k;
    const auto idx = static_cast<std::size_t>(slot - 1);
    std::string label = idx < labels.size() ? labels[idx] : "z" + std::to_string(slot);
    w.push_back({sign, slot, std::move(label), 0, false});
  }
  return w;
}

namespace {

std::string shiftText(int k) {
  if (k == 0)
    return "";
  if (k == 1)
    return "; q^c";
  if (k == -1)
    return "; q^-c";
  return "; q^" + std::to_string(k) + "c";
}

} // namespace

std::string formatRToken(const RToken& t) {
  return std::string(t.inverted ? "R^-1" : "R") + "[" + std::to_string(t.i) + "," + std::to_string(t.j) + "](" +
         t.num + "/" + t.den + shiftText(t.cShift) + ")";
}

std::string formatRSeq(const RSeq& s) {
  if (s.empty())
    return "1";
  std::string out;
  for (const auto& t : s)
    out += (out.empty() ? "" : " ") + formatRToken(t);
  return out;
}

std::string formatMToken(const MToken& t, bool affine) {
  std::string name = std::string(affine ? "M" : "m") + (t.sign == MSign::Plus ? "+" : "-");
  if (t.inverted)
    name = "(" + name + ")^-1";
  return name + "[" + std::to_string(t.slot) + "](" + t.label + shiftText(t.cShift) + ")";
}

std::string formatRCElement(const RCElement& e) {
  std::string out;
  for (const auto& term : e.summands) {
    std::string body;
    const auto add = [&](const std::string& x) { body += (body.empty() ? "" : " ") + x; };
    for (const auto& t : term.left)
      add(formatRToken(t));
    for (const auto& t : term.mWord)
      add(formatMToken(t, e.affine));
    for (const auto& t : term.right)
      add(formatRToken(t));
    out += (out.empty() ? "" : " + ") + (body.empty() ? std::string("1") : body);
  }
  return out.empty() ? "0" : out;
}

nlohmann::json rTokenToJson(const RToken& t) {
  return {{"slots", {t.i, t.j}}, {"ratio", {t.num, t.den}}, {"cshift", t.cShift}, {"inv", t.inverted}};
}

nlohmann::json rSeqToJson(const RSeq& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : s)
    out.push_back(rTokenToJson(t));
  return out;
}

} // namespace qbx
