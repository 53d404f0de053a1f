#pragma once

#include "algebra.hpp"
#include "expr.hpp"

namespace qbx {

Presentation presentationFromJson(const Json& j);
Json presentationToJson(const Presentation& pres);

// affine_new, affine_original, loop, cz
const std::vector<std::string>& builtinNames();
Presentation builtinPresentation(const std::string& name);

// Shared instance per builtin so normal-form caches are reused.
AlgebraPtr builtinAlgebra(const std::string& name);

} // namespace qbx
