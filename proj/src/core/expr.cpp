#include "expr.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cctype>

namespace qbx {

namespace {

class Parser {
public:
  Parser(const std::string& text, const Presentation& pres, const Algebra* alg)
      : s_(text), pres_(pres), alg_(alg) {}

  NCPoly run() {
    skipSpace();
    if (pos_ >= s_.size())
      throw ParseError("empty expression", pos_);
    NCPoly v = expr();
    skipSpace();
    if (pos_ < s_.size())
      throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return alg_ ? alg_->normalForm(v) : v;
  }

private:
  void skipSpace() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool accept(char ch) {
    skipSpace();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char ch) {
    if (!accept(ch))
      throw ParseError(std::string("expected '") + ch + "'", pos_);
  }

  NCPoly mul(const NCPoly& a, const NCPoly& b) const {
    return alg_ ? alg_->multiply(a, b) : freeMultiply(a, b);
  }

  NCPoly expr() {
    NCPoly v = term();
    for (;;) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }

  NCPoly term() {
    NCPoly v = unary();
    for (;;) {
      if (accept('*')) {
        v = mul(v, unary());
      } else if (accept('/')) {
        const std::size_t at = pos_;
        const NCPoly d = unary();
        if (!d.isScalar())
          throw ParseError("divisor must be a scalar", at);
        if (d.isZero())
          fail(ErrorKind::Arithmetic, "division by zero at position " + std::to_string(at));
        v *= d.coeff(Word{}).inverse();
      } else {
        return v;
      }
    }
  }

  NCPoly unary() {
    if (accept('-'))
      return -unary();
    if (accept('+'))
      return unary();
    return power();
  }

  long signedInt() {
    skipSpace();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
      skipSpace();
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_)
      throw ParseError("expected integer", start);
    if (pos_ - start > 9)
      throw ParseError("integer exponent too large", start);
    const long v = std::stol(s_.substr(start, pos_ - start));
    return neg ? -v : v;
  }

  long exponent() {
    skipSpace();
    if (accept('(')) {
      const long e = signedInt();
      expect(')');
      return e;
    }
    return signedInt();
  }

  NCPoly power() {
    const std::size_t at = pos_;
    NCPoly base = atom();
    if (!accept('^'))
      return base;
    const long n = exponent();
    if (n >= 0) {
      NCPoly out(1);
      for (long i = 0; i < n; ++i)
        out = mul(out, base);
      return out;
    }
    NCPoly inv;
    if (base.isScalar()) {
      if (base.isZero())
        fail(ErrorKind::Arithmetic, "zero to a negative power at position " + std::to_string(at));
      inv = NCPoly(base.coeff(Word{}).inverse());
    } else {
      if (base.size() != 1)
        fail(ErrorKind::Domain, "negative power of a sum at position " + std::to_string(at));
      const auto& [w, c] = *base.terms().begin();
      Word iw;
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (!pres_.gen(it->gen).invertible)
          fail(ErrorKind::Domain, "negative power of non-invertible generator " +
                                      pres_.gen(it->gen).name + " at position " +
                                      std::to_string(at));
        iw.push_back({it->gen, -it->exp});
      }
      inv = NCPoly::monomial(iw, c.inverse());
    }
    NCPoly out(1);
    for (long i = 0; i < -n; ++i)
      out = mul(out, inv);
    return out;
  }

  NCPoly atom() {
    skipSpace();
    if (pos_ >= s_.size())
      throw ParseError("unexpected end of expression", pos_);
    const std::size_t start = pos_;
    const char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      NCPoly v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      return NCPoly(QScalar(Rational(mpz_class(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      if (name == "q")
        return NCPoly(QScalar::q());
      if (name == "qint") {
        expect('(');
        const long n = signedInt();
        expect(')');
        return NCPoly(qint(n));
      }
      const int g = pres_.indexOf(name);
      if (g < 0)
        fail(ErrorKind::Lookup, "unknown generator '" + name + "' at position " +
                                    std::to_string(start));
      return NCPoly::monomial(Word{{g, 1}});
    }
    throw ParseError(std::string("unexpected '") + ch + "'", pos_);
  }

  const std::string& s_;
  const Presentation& pres_;
  const Algebra* alg_;
  std::size_t pos_ = 0;
};

bool hasTopLevelSum(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(')
      ++depth;
    else if (s[i] == ')')
      --depth;
    else if (depth == 0 && i > 0 && (s[i] == '+' || s[i] == '-') && s[i - 1] == ' ')
      return true;
  }
  return false;
}

std::string joinTerms(const std::vector<std::string>& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (out.empty())
      out = t;
    else if (t[0] == '-')
      out += " - " + t.substr(1);
    else
      out += " + " + t;
  }
  return out.empty() ? "0" : out;
}

// coefficient (a Laurent polynomial) times a formatted word
std::string scaledWord(const LaurentPoly& c, const std::string& word) {
  if (word.empty())
    return c.toString();
  if (c.isOne())
    return word;
  if (c == LaurentPoly(-1))
    return "-" + word;
  if (c.isMonomial())
    return c.toString() + "*" + word;
  return "(" + c.toString() + ")*" + word;
}

std::string scaledLeg(const QScalar& c, const std::string& leg) {
  if (c.isOne())
    return leg;
  if (c == QScalar(-1))
    return "-" + leg;
  std::string cs = c.toString();
  if (hasTopLevelSum(cs))
    cs = "(" + cs + ")";
  return leg == "1" ? cs : cs + "*" + leg;
}

} // namespace

NCPoly parseExpression(const std::string& text, const Presentation& pres, const Algebra* alg) {
  return Parser(text, pres, alg).run();
}

QScalar parseScalar(const std::string& text) {
  static const Presentation empty;
  const NCPoly p = parseExpression(text, empty);
  return p.coeff(Word{});
}

std::string formatWord(const Word& w, const Presentation& pres) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty())
      out += "*";
    out += pres.gen(l.gen).name;
    if (l.exp != 1)
      out += "^" + std::to_string(l.exp);
  }
  return out;
}

std::string formatPoly(const NCPoly& p, const Presentation& pres) {
  // Terms sharing a denominator are printed over it once.
  std::vector<std::pair<LaurentPoly, std::vector<std::pair<const Word*, LaurentPoly>>>> groups;
  for (const auto& [w, c] : p.terms()) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == c.den(); });
    if (it == groups.end()) {
      groups.push_back({c.den(), {}});
      it = groups.end() - 1;
    }
    it->second.push_back({&w, c.num()});
  }
  std::vector<std::string> parts;
  for (const auto& [den, members] : groups) {
    if (den.isOne()) {
      for (const auto& [w, n] : members)
        parts.push_back(scaledWord(n, formatWord(*w, pres)));
      continue;
    }
    const LaurentPoly m = displayBalance(den);
    std::vector<std::string> num;
    for (const auto& [w, n] : members)
      num.push_back(scaledWord(n * m, formatWord(*w, pres)));
    std::string numText = joinTerms(num);
    if (hasTopLevelSum(numText))
      numText = "(" + numText + ")";
    parts.push_back(numText + "/(" + (den * m).toString() + ")");
  }
  return joinTerms(parts);
}

std::string formatTensor(const TensorPoly& t, const std::vector<const Presentation*>& legs,
                         std::size_t group) {
  std::vector<std::string> parts;
  for (const auto& [ws, c] : t.terms()) {
    std::vector<std::string> blocks;
    std::string block;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      std::string leg = formatWord(ws[i], *legs.at(i));
      if (leg.empty())
        leg = "1";
      if (group == 0) {
        blocks.push_back(leg);
        continue;
      }
      block += block.empty() ? leg : " (x) " + leg;
      if ((i + 1) % group == 0) {
        blocks.push_back("(" + block + ")");
        block.clear();
      }
    }
    if (!block.empty())
      blocks.push_back(block);
    std::string body = scaledLeg(c, blocks.empty() ? "1" : blocks[0]);
    for (std::size_t i = 1; i < blocks.size(); ++i)
      body += " (x) " + blocks[i];
    parts.push_back(body);
  }
  return joinTerms(parts);
}

Json wordToJson(const Word& w, const Presentation& pres) {
  Json out = Json::array();
  for (const auto& l : w)
    out.push_back(Json::array({pres.gen(l.gen).name, l.exp}));
  return out;
}

Word wordFromJson(const Json& j, const Presentation& pres) {
  if (!j.is_array())
    fail(ErrorKind::Parse, "word must be an array of [generator, exponent] pairs");
  Word w;
  for (const auto& l : j) {
    if (!l.is_array() || l.size() != 2 || !l[0].is_string() || !l[1].is_number_integer())
      fail(ErrorKind::Parse, "word letter must be [generator, exponent]");
    w.push_back({pres.require(l[0].get<std::string>()), l[1].get<int>()});
  }
  return w;
}

Json polyToJson(const NCPoly& p, const Presentation& pres) {
  Json terms = Json::array();
  for (const auto& [w, c] : p.terms())
    terms.push_back({{"coeff", c.toString()}, {"word", wordToJson(w, pres)}});
  return {{"terms", terms}, {"text", formatPoly(p, pres)}};
}

NCPoly polyFromJson(const Json& j, const Presentation& pres, const Algebra* alg) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    fail(ErrorKind::Parse, "polynomial JSON needs a 'terms' array");
  NCPoly out;
  for (const auto& t : j["terms"]) {
    const Word w = wordFromJson(t.at("word"), pres);
    const QScalar c = parseScalar(t.at("coeff").get<std::string>());
    if (alg)
      out.addScaled(alg->normalWord(w), c);
    else
      out.add(mergeRuns(w), c);
  }
  return out;
}

Json tensorToJson(const TensorPoly& t, const std::vector<const Presentation*>& legs) {
  Json terms = Json::array();
  for (const auto& [ws, c] : t.terms()) {
    Json js = Json::array();
    for (std::size_t i = 0; i < ws.size(); ++i)
      js.push_back(wordToJson(ws[i], *legs.at(i)));
    terms.push_back({{"coeff", c.toString()}, {"legs", js}});
  }
  return {{"rank", t.rank()}, {"terms", terms}, {"text", formatTensor(t, legs)}};
}

} // namespace qbx
