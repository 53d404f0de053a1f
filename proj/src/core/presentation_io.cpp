#include "presentation_io.hpp"

#include "errors.hpp"

#include <map>
#include <mutex>

namespace qbx {

namespace {

const char* const kBuiltinSources[] = {
#include "builtins.inc"
};

std::string textOf(const Json& j, const char* what) {
  if (!j.is_string())
    fail(ErrorKind::Structure, std::string(what) + " must be a string");
  return j.get<std::string>();
}

TensorPoly coproductEntry(const Json& terms, const Presentation& pres) {
  if (!terms.is_array())
    fail(ErrorKind::Structure, "coproduct entry must be an array of terms");
  TensorPoly out(2);
  for (const auto& t : terms) {
    const Json& legs = t.at("legs");
    if (!legs.is_array() || legs.size() != 2)
      fail(ErrorKind::Structure, "coproduct term needs two legs");
    const QScalar c = t.contains("coeff") ? parseScalar(textOf(t["coeff"], "coeff")) : QScalar(1);
    const NCPoly a = parseExpression(textOf(legs[0], "leg"), pres);
    const NCPoly b = parseExpression(textOf(legs[1], "leg"), pres);
    for (const auto& [u, cu] : a.terms())
      for (const auto& [v, cv] : b.terms())
        out.add({u, v}, c * cu * cv);
  }
  return out;
}

} // namespace

Presentation presentationFromJson(const Json& j) {
  try {
    Presentation pres;
    pres.name = j.value("name", std::string("custom"));
    for (const auto& g : j.at("alphabet")) {
      Generator gen;
      gen.name = textOf(g.at("name"), "generator name");
      gen.invertible = g.value("invertible", false);
      gen.sort = sortFromName(g.value("sort", std::string("raising")));
      gen.gradeWeight = g.value("gradeWeight", 0);
      if (pres.indexOf(gen.name) >= 0)
        fail(ErrorKind::Structure, "duplicate generator '" + gen.name + "'");
      pres.alphabet.push_back(gen);
    }
    const Json swaps = j.value("swapRules", Json::array());
    const Json straight = j.value("straightenRules", Json::array());
    const Json serre = j.value("serre", Json::array());
    for (const auto& r : swaps) {
      SwapRule s;
      s.left = pres.require(textOf(r.at("left"), "left"));
      s.right = pres.require(textOf(r.at("right"), "right"));
      s.factor = parseScalar(textOf(r.at("factor"), "factor"));
      pres.swaps.push_back(s);
    }
    for (const auto& r : straight) {
      const Json& pat = r.at("pattern");
      if (!pat.is_array() || pat.size() != 2)
        fail(ErrorKind::Structure, "straightening pattern must name two generators");
      StraightenRule s;
      s.first = pres.require(textOf(pat[0], "pattern"));
      s.second = pres.require(textOf(pat[1], "pattern"));
      s.result = parseExpression(textOf(r.at("result"), "result"), pres);
      pres.straighten.push_back(s);
    }
    for (const auto& s : serre)
      pres.serre.push_back(parseExpression(textOf(s, "serre relator"), pres));

    const std::size_t n = pres.size();
    if (j.contains("hopf")) {
      const Json& h = j["hopf"];
      pres.hopf.coproduct.assign(n, std::nullopt);
      pres.hopf.counit.assign(n, std::nullopt);
      pres.hopf.antipode.assign(n, std::nullopt);
      const Json cop = h.value("coproduct", Json::object());
      const Json eps = h.value("counit", Json::object());
      const Json ant = h.value("antipode", Json::object());
      for (const auto& [name, terms] : cop.items())
        pres.hopf.coproduct[static_cast<std::size_t>(pres.require(name))] = coproductEntry(terms, pres);
      for (const auto& [name, v] : eps.items())
        pres.hopf.counit[static_cast<std::size_t>(pres.require(name))] = parseScalar(textOf(v, "counit"));
      for (const auto& [name, v] : ant.items())
        pres.hopf.antipode[static_cast<std::size_t>(pres.require(name))] =
            parseExpression(textOf(v, "antipode"), pres);
    }
    return pres;
  } catch (const Json::exception& e) {
    fail(ErrorKind::Structure, std::string("malformed presentation: ") + e.what());
  }
}

Json presentationToJson(const Presentation& pres) {
  Json j;
  j["name"] = pres.name;
  j["alphabet"] = Json::array();
  for (const auto& g : pres.alphabet)
    j["alphabet"].push_back({{"name", g.name},
                             {"invertible", g.invertible},
                             {"sort", sortName(g.sort)},
                             {"gradeWeight", g.gradeWeight}});
  j["swapRules"] = Json::array();
  for (const auto& s : pres.swaps)
    j["swapRules"].push_back({{"left", pres.gen(s.left).name},
                              {"right", pres.gen(s.right).name},
                              {"factor", s.factor.toString()}});
  j["straightenRules"] = Json::array();
  for (const auto& s : pres.straighten)
    j["straightenRules"].push_back(
        {{"pattern", {pres.gen(s.first).name, pres.gen(s.second).name}},
         {"result", formatPoly(s.result, pres)}});
  j["serre"] = Json::array();
  for (const auto& s : pres.serre)
    j["serre"].push_back(formatPoly(s, pres));

  Json hopf = Json::object();
  Json cop = Json::object(), eps = Json::object(), ant = Json::object();
  for (std::size_t i = 0; i < pres.size(); ++i) {
    const std::string& name = pres.alphabet[i].name;
    if (i < pres.hopf.coproduct.size() && pres.hopf.coproduct[i]) {
      Json terms = Json::array();
      for (const auto& [legs, c] : pres.hopf.coproduct[i]->terms()) {
        Json t = {{"legs", Json::array()}};
        for (const auto& w : legs) {
          const std::string s = formatWord(w, pres);
          t["legs"].push_back(s.empty() ? "1" : s);
        }
        if (!c.isOne())
          t["coeff"] = c.toString();
        terms.push_back(t);
      }
      cop[name] = terms;
    }
    if (i < pres.hopf.counit.size() && pres.hopf.counit[i])
      eps[name] = pres.hopf.counit[i]->toString();
    if (i < pres.hopf.antipode.size() && pres.hopf.antipode[i])
      ant[name] = formatPoly(*pres.hopf.antipode[i], pres);
  }
  if (!cop.empty() || !eps.empty()) {
    hopf["coproduct"] = cop;
    hopf["counit"] = eps;
    if (!ant.empty())
      hopf["antipode"] = ant;
    j["hopf"] = hopf;
  }
  return j;
}

const std::vector<std::string>& builtinNames() {
  static const std::vector<std::string> names = {"affine_new", "affine_original", "loop", "cz"};
  return names;
}

Presentation builtinPresentation(const std::string& name) {
  for (const char* src : kBuiltinSources) {
    const Json j = Json::parse(src);
    if (j.at("name").get<std::string>() == name)
      return presentationFromJson(j);
  }
  fail(ErrorKind::Lookup, "unknown builtin presentation '" + name + "'");
}

AlgebraPtr builtinAlgebra(const std::string& name) {
  static std::mutex mutex;
  static std::map<std::string, AlgebraPtr> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(name);
    if (it != cache.end())
      return it->second;
  }
  auto alg = std::make_shared<const Algebra>(builtinPresentation(name));
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(name, alg).first->second;
}

} // namespace qbx
