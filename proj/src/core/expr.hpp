#pragma once

#include "algebra.hpp"

#include <json.hpp>

#include <string>

namespace qbx {

using Json = nlohmann::json;

// Grammar (explicit '*', no juxtaposition):
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*       divisor must be a scalar
//   unary  := ('-' | '+') unary | power
//   power  := atom ('^' exponent)?
//   atom   := integer | 'q' | 'qint' '(' int ')' | generator | '(' expr ')'
//
// With an algebra the value is normal-ordered; without one, products are
// plain concatenations (used while a presentation is being loaded).
NCPoly parseExpression(const std::string& text, const Presentation& pres,
                       const Algebra* alg = nullptr);
QScalar parseScalar(const std::string& text);

std::string formatWord(const Word& w, const Presentation& pres);
std::string formatPoly(const NCPoly& p, const Presentation& pres);
// One presentation per leg. With group > 0 consecutive blocks of that many
// legs are parenthesised, e.g. "(a (x) h) (x) (b (x) g)".
std::string formatTensor(const TensorPoly& t, const std::vector<const Presentation*>& legs,
                         std::size_t group = 0);

Json wordToJson(const Word& w, const Presentation& pres);
Word wordFromJson(const Json& j, const Presentation& pres);
Json polyToJson(const NCPoly& p, const Presentation& pres);
NCPoly polyFromJson(const Json& j, const Presentation& pres, const Algebra* alg = nullptr);
Json tensorToJson(const TensorPoly& t, const std::vector<const Presentation*>& legs);

} // namespace qbx
