#include "presentation.hpp"

#include "errors.hpp"

#include <algorithm>

namespace qbx {

const char* sortName(Sort s) {
  switch (s) {
  case Sort::Central: return "central";
  case Sort::Cartan: return "cartan";
  case Sort::Raising: return "raising";
  case Sort::Lowering: return "lowering";
  }
  return "?";
}

Sort sortFromName(const std::string& name) {
  if (name == "central")
    return Sort::Central;
  if (name == "cartan")
    return Sort::Cartan;
  if (name == "raising")
    return Sort::Raising;
  if (name == "lowering")
    return Sort::Lowering;
  fail(ErrorKind::Structure, "unknown generator sort '" + name + "'");
}

bool HopfTable::complete() const {
  return !coproduct.empty() &&
         std::all_of(coproduct.begin(), coproduct.end(), [](const auto& c) { return c.has_value(); }) &&
         std::all_of(counit.begin(), counit.end(), [](const auto& c) { return c.has_value(); });
}

bool HopfTable::hasAntipode() const {
  return !antipode.empty() &&
         std::all_of(antipode.begin(), antipode.end(), [](const auto& c) { return c.has_value(); });
}

int Presentation::indexOf(const std::string& generator) const {
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    if (alphabet[i].name == generator)
      return static_cast<int>(i);
  return -1;
}

int Presentation::require(const std::string& generator) const {
  const int i = indexOf(generator);
  if (i < 0)
    fail(ErrorKind::Lookup, "unknown generator '" + generator + "' in presentation " + name);
  return i;
}

} // namespace qbx
