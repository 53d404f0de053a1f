#include "qbicross/qbicross.h"

#include "bicross.hpp"
#include "errors.hpp"
#include "expr.hpp"
#include "hopf.hpp"
#include "ncalg.hpp"
#include "presentation_io.hpp"
#include "rcalc.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>

struct qbx_algebra {
  qbx::AlgebraPtr alg;
  qbx::HopfPtr hopf;          // null when the presentation has no usable Hopf table
  std::string hopfProblem;
};

namespace {

thread_local std::string lastError;

qbx_status statusOf(qbx::ErrorKind kind) {
  switch (kind) {
  case qbx::ErrorKind::Arithmetic: return QBX_ERR_ARITHMETIC;
  case qbx::ErrorKind::Domain: return QBX_ERR_DOMAIN;
  case qbx::ErrorKind::Lookup: return QBX_ERR_LOOKUP;
  case qbx::ErrorKind::Structure: return QBX_ERR_STRUCTURE;
  case qbx::ErrorKind::Parse: return QBX_ERR_PARSE;
  case qbx::ErrorKind::Incomplete: return QBX_ERR_INCOMPLETE;
  case qbx::ErrorKind::Internal: return QBX_ERR_INTERNAL;
  }
  return QBX_ERR_INTERNAL;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p)
    std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

struct ArgumentError {
  std::string what;
};

template <class F>
qbx_status guarded(F&& f) {
  lastError.clear();
  try {
    f();
    return QBX_OK;
  } catch (const qbx::Error& e) {
    lastError = e.what();
    return statusOf(e.kind());
  } catch (const nlohmann::json::exception& e) {
    lastError = std::string("JSON: ") + e.what();
    return QBX_ERR_PARSE;
  } catch (const ArgumentError& e) {
    lastError = e.what;
    return QBX_ERR_ARGUMENT;
  } catch (const std::exception& e) {
    lastError = e.what();
    return QBX_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p)
    throw ArgumentError{std::string(what) + " is null"};
}

void put(char** out, const std::string& s) {
  need(out, "output pointer");
  *out = dup(s);
  if (!*out)
    throw std::bad_alloc();
}

std::string render(qbx_format fmt, const std::string& text, const qbx::Json& json) {
  if (fmt == QBX_JSON)
    return json.dump(2);
  if (fmt == QBX_TEXT)
    return text;
  throw ArgumentError{"unknown output format"};
}

const qbx::HopfAlgebra& hopfOf(const qbx_algebra* a) {
  if (!a->hopf)
    qbx::fail(qbx::ErrorKind::Structure, "presentation '" + a->alg->name() + "' has no Hopf structure: " + a->hopfProblem);
  return *a->hopf;
}

qbx::NCPoly parse(const qbx_algebra* a, const char* expr) {
  need(expr, "expression");
  return qbx::parseExpression(expr, a->alg->presentation(), a->alg.get());
}

const qbx::Bicross& bicross() { return qbx::Bicross::builtin(); }

qbx::NCPoly parseLoop(const char* expr) {
  need(expr, "expression");
  const auto& loop = bicross().loop().algebra();
  return qbx::parseExpression(expr, loop.presentation(), &loop);
}

qbx::TensorPoly parseExt(const char* expr) {
  need(expr, "expression");
  const auto& aff = bicross().affine().algebra();
  return bicross().phiInverse(qbx::parseExpression(expr, aff.presentation(), &aff));
}

std::vector<const qbx::Presentation*> legsOf(const qbx::Presentation& p, std::size_t rank) {
  return std::vector<const qbx::Presentation*>(rank, &p);
}

qbx::Json polyResult(const std::string& input, const qbx::NCPoly& p, const qbx::Presentation& pres) {
  return {{"presentation", pres.name}, {"input", input}, {"result", qbx::polyToJson(p, pres)}};
}

} // namespace

extern "C" {

const char* qbx_version(void) { return "1.0.0"; }

const char* qbx_status_name(qbx_status status) {
  switch (status) {
  case QBX_OK: return "ok";
  case QBX_ERR_ARITHMETIC: return "arithmetic error";
  case QBX_ERR_DOMAIN: return "domain error";
  case QBX_ERR_LOOKUP: return "lookup error";
  case QBX_ERR_STRUCTURE: return "structure error";
  case QBX_ERR_PARSE: return "parse error";
  case QBX_ERR_INCOMPLETE: return "incomplete search";
  case QBX_ERR_INTERNAL: return "internal error";
  case QBX_ERR_ARGUMENT: return "invalid argument";
  }
  return "unknown status";
}

const char* qbx_last_error(void) { return lastError.c_str(); }

void qbx_string_free(char* s) { std::free(s); }

qbx_status qbx_algebra_open(const char* name_or_path, qbx_algebra** out) {
  return guarded([&] {
    need(name_or_path, "presentation name");
    need(out, "output pointer");
    *out = nullptr;
    auto h = std::make_unique<qbx_algebra>();
    const std::string name = name_or_path;
    const auto& builtins = qbx::builtinNames();
    if (std::find(builtins.begin(), builtins.end(), name) != builtins.end()) {
      h->alg = qbx::builtinAlgebra(name);
      h->hopf = qbx::builtinHopf(name);
    } else {
      std::ifstream in(name);
      if (!in)
        qbx::fail(qbx::ErrorKind::Lookup, "no builtin presentation or readable file named '" + name + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      h->alg = std::make_shared<const qbx::Algebra>(qbx::presentationFromJson(qbx::Json::parse(buf.str())));
      try {
        h->hopf = std::make_shared<const qbx::HopfAlgebra>(h->alg);
      } catch (const qbx::Error& e) {
        if (e.kind() != qbx::ErrorKind::Structure)
          throw;
        h->hopfProblem = e.what();
      }
    }
    *out = h.release();
  });
}

void qbx_algebra_close(qbx_algebra* alg) { delete alg; }

qbx_status qbx_presentation_export(const qbx_algebra* alg, char** out) {
  return guarded([&] {
    need(alg, "algebra");
    const auto& pres = alg->hopf ? alg->hopf->completed() : alg->alg->presentation();
    put(out, qbx::presentationToJson(pres).dump(2));
  });
}

qbx_status qbx_normalize(const qbx_algebra* alg, const char* expr, qbx_format fmt, char** out) {
  return guarded([&] {
    need(alg, "algebra");
    const auto& pres = alg->alg->presentation();
    const qbx::NCPoly p = parse(alg, expr);
    put(out, render(fmt, qbx::formatPoly(p, pres), polyResult(expr, p, pres)));
  });
}

qbx_status qbx_multiply(const qbx_algebra* alg, const char* left, const char* right, qbx_format fmt, char** out) {
  return guarded([&] {
    need(alg, "algebra");
    const auto& pres = alg->alg->presentation();
    const qbx::NCPoly p = alg->alg->multiply(parse(alg, left), parse(alg, right));
    qbx::Json j = polyResult(left, p, pres);
    j["input"] = {left, right};
    put(out, render(fmt, qbx::formatPoly(p, pres), j));
  });
}

qbx_status qbx_coproduct(const qbx_algebra* alg, const char* expr, int iterations, qbx_format fmt, char** out) {
  return guarded([&] {
    need(alg, "algebra");
    if (iterations < 1)
      qbx::fail(qbx::ErrorKind::Domain, "coproduct iterations must be at least 1");
    const auto& h = hopfOf(alg);
    const qbx::TensorPoly t = h.iteratedCoproduct(parse(alg, expr), iterations);
    const auto legs = legsOf(alg->alg->presentation(), t.rank());
    put(out, render(fmt, qbx::formatTensor(t, legs),
                    {{"presentation", alg->alg->name()}, {"input", expr}, {"result", qbx::tensorToJson(t, legs)}}));
  });
}

qbx_status qbx_counit(const qbx_algebra* alg, const char* expr, qbx_format fmt, char** out) {
  return guarded([&] {
    need(alg, "algebra");
    const qbx::QScalar e = hopfOf(alg).counit(parse(alg, expr));
    put(out, render(fmt, e.toString(),
                    {{"presentation", alg->alg->name()}, {"input", expr}, {"result", e.toString()}}));
  });
}

qbx_status qbx_antipode(const qbx_algebra* alg, const char* expr, qbx_format fmt, char** out) {
  return guarded([&] {
    need(alg, "algebra");
    const auto& pres = alg->alg->presentation();
    const qbx::NCPoly p = hopfOf(alg).antipode(parse(alg, expr));
    put(out, render(fmt, qbx::formatPoly(p, pres), polyResult(expr, p, pres)));
  });
}

qbx_status qbx_serre_member(const qbx_algebra* alg, const char* expr, int max_degree, int* member) {
  return guarded([&] {
    need(alg, "algebra");
    need(member, "output pointer");
    *member = qbx::serreIdealMembership(parse(alg, expr), *alg->alg, max_degree) ? 1 : 0;
  });
}

qbx_status qbx_verify(const qbx_algebra* alg, const char* check, int max_degree, uint64_t seed, qbx_format fmt,
                      char** out, int* passed) {
  return guarded([&] {
    need(alg, "algebra");
    need(check, "check name");
    if (max_degree < 1)
      qbx::fail(qbx::ErrorKind::Domain, "degree bound must be at least 1");
    const std::string c = check;
    qbx::Report report;
    if (c == "hopf") {
      report = qbx::verifyHopf(hopfOf(alg), max_degree, seed);
    } else if (c == "confluence") {
      report = qbx::localConfluenceReport(*alg->alg, max_degree);
      report.seed = seed;
    } else if (c == "cocycle" || c == "ext" || c == "iso") {
      const std::string& name = alg->alg->name();
      if (name != "affine_new" && name != "loop" && name != "cz")
        qbx::fail(qbx::ErrorKind::Domain, "the " + c + " sweep needs affine_new, loop or cz, not '" + name + "'");
      if (c == "cocycle")
        report = qbx::verifyCocycle(bicross(), max_degree);
      else if (c == "ext")
        report = qbx::verifyExtCompatibility(bicross(), max_degree);
      else
        report = qbx::verifyIsomorphism(bicross(), max_degree, seed);
      report.seed = seed;
    } else {
      qbx::fail(qbx::ErrorKind::Lookup, "unknown check '" + c + "'");
    }
    if (passed)
      *passed = report.passed() ? 1 : 0;
    std::string text = report.toText();
    if (!text.empty() && text.back() == '\n')
      text.pop_back();
    qbx::Json j = report.toJson();
    j["presentation"] = alg->alg->name();
    put(out, render(fmt, text, j));
  });
}

qbx_status qbx_jmap(const char* loop_expr, qbx_format fmt, char** out) {
  return guarded([&] {
    const auto& pres = bicross().affine().presentation();
    const qbx::NCPoly p = bicross().sectionJ(parseLoop(loop_expr));
    put(out, render(fmt, qbx::formatPoly(p, pres), polyResult(loop_expr, p, pres)));
  });
}

qbx_status qbx_beta(const char* loop_expr, qbx_format fmt, char** out) {
  return guarded([&] {
    const qbx::TensorPoly t = bicross().coactionBeta(parseLoop(loop_expr));
    const std::vector<const qbx::Presentation*> legs{&bicross().loop().presentation(), &bicross().cz().presentation()};
    put(out, render(fmt, bicross().formatLoopCZ(t), {{"input", loop_expr}, {"result", qbx::tensorToJson(t, legs)}}));
  });
}

qbx_status qbx_cocycle(const char* left, const char* right, int inverse, qbx_format fmt, char** out) {
  return guarded([&] {
    const qbx::NCPoly h = parseLoop(left), g = parseLoop(right);
    const qbx::NCPoly v = inverse ? bicross().cocycleInverse(h, g) : bicross().cocycle(h, g);
    const auto& pres = bicross().cz().presentation();
    qbx::Json j = polyResult(left, v, pres);
    j["input"] = {left, right};
    j["inverse"] = inverse != 0;
    put(out, render(fmt, qbx::formatPoly(v, pres), j));
  });
}

qbx_status qbx_ext_multiply(const char* left, const char* right, qbx_format fmt, char** out) {
  return guarded([&] {
    const auto& b = bicross();
    const qbx::TensorPoly x = b.extProduct(parseExt(left), parseExt(right));
    const qbx::NCPoly image = b.phi(x);
    const auto& ap = b.affine().presentation();
    const std::vector<const qbx::Presentation*> legs{&b.cz().presentation(), &b.loop().presentation()};
    put(out, render(fmt, b.formatExt(x) + "\nphi: " + qbx::formatPoly(image, ap),
                    {{"input", {left, right}}, {"result", qbx::tensorToJson(x, legs)},
                     {"phi", qbx::polyToJson(image, ap)}}));
  });
}

qbx_status qbx_ext_coproduct(const char* expr, qbx_format fmt, char** out) {
  return guarded([&] {
    const auto& b = bicross();
    const qbx::TensorPoly t = b.extCoproduct(parseExt(expr));
    const auto* z = &b.cz().presentation();
    const auto* l = &b.loop().presentation();
    qbx::Json j = qbx::tensorToJson(t, {z, l, z, l});
    j["text"] = b.formatExtCoproduct(t);
    put(out, render(fmt, b.formatExtCoproduct(t), {{"input", expr}, {"result", j}}));
  });
}

qbx_status qbx_rcalc_cocycle(int minus, int plus, int plus_first, const char* labels, qbx_rc_method method,
                             int depth, qbx_format fmt, char** out) {
  return guarded([&] {
    if (method != QBX_RC_DIRECT && method != QBX_RC_CLOSED)
      throw ArgumentError{"unknown rcalc method"};
    std::vector<std::string> names;
    if (labels) {
      std::stringstream in(labels);
      for (std::string item; std::getline(in, item, ',');)
        names.push_back(item);
    }
    qbx::MWord h, g;
    if (plus_first) {
      h = qbx::rcSignWord(qbx::MSign::Plus, plus, 1, names);
      g = qbx::rcSignWord(qbx::MSign::Minus, minus, plus + 1, names);
    } else {
      h = qbx::rcSignWord(qbx::MSign::Minus, minus, 1, names);
      g = qbx::rcSignWord(qbx::MSign::Plus, plus, minus + 1, names);
    }
    const qbx::RSeq s = qbx::rcCanonicalize(method == QBX_RC_DIRECT ? qbx::rcCocycleDirect(h, g, depth)
                                                                     : qbx::rcCocycleClosed(h, g));
    qbx::Json j = {{"method", method == QBX_RC_DIRECT ? "direct" : "closed"},
                   {"minus", minus},
                   {"plus", plus},
                   {"order", plus_first ? "plus-minus" : "minus-plus"},
                   {"tokens", qbx::rSeqToJson(s)},
                   {"text", qbx::formatRSeq(s)}};
    put(out, render(fmt, qbx::formatRSeq(s), j));
  });
}

} // extern "C"
