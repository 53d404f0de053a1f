#pragma once

#include "tensor.hpp"
#include "word.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qbx {

// Block of a generator in the normal form: central < cartan < raising < lowering.
enum class Sort { Central = 0, Cartan = 1, Raising = 2, Lowering = 3 };

const char* sortName(Sort s);
Sort sortFromName(const std::string& name);

struct Generator {
  std::string name;
  bool invertible = false;
  Sort sort = Sort::Raising;
  int gradeWeight = 0;
};

// left * right = factor * right * left
struct SwapRule {
  int left = 0;
  int right = 0;
  QScalar factor;
};

// first * second -> result (result has lower order terms)
struct StraightenRule {
  int first = 0;
  int second = 0;
  NCPoly result;
};

// Per-generator Hopf structure maps; entries may be absent for algebras that
// are only used as rewrite systems.
struct HopfTable {
  std::vector<std::optional<TensorPoly>> coproduct;
  std::vector<std::optional<QScalar>> counit;
  std::vector<std::optional<NCPoly>> antipode;

  bool complete() const;
  bool hasAntipode() const;
};

// Declarative algebra presentation. Plain data; the rewrite engine built on
// top of it lives in Algebra.
struct Presentation {
  std::string name;
  std::vector<Generator> alphabet;
  std::vector<SwapRule> swaps;
  std::vector<StraightenRule> straighten;
  std::vector<NCPoly> serre;
  HopfTable hopf;

  // -1 when absent.
  int indexOf(const std::string& generator) const;
  int require(const std::string& generator) const;
  const Generator& gen(int index) const { return alphabet.at(static_cast<std::size_t>(index)); }
  std::size_t size() const noexcept { return alphabet.size(); }
};

} // namespace qbx
