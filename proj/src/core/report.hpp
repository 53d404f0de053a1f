#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qbx {

struct Failure {
  std::string input;
  std::string lhs;
  std::string rhs;
};

// Result of a verification sweep. Failures are kept in input order; only the
// first `maxStoredFailures` are stored but all are counted.
struct Report {
  std::string check;
  int degree = 0;
  std::size_t cases = 0;
  std::size_t failureCount = 0;
  std::vector<Failure> failures;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> notes;

  static constexpr std::size_t maxStoredFailures = 50;

  bool passed() const { return failureCount == 0; }

  void pass() { ++cases; }
  void fail(std::string input, std::string lhs, std::string rhs) {
    ++cases;
    ++failureCount;
    if (failures.size() < maxStoredFailures)
      failures.push_back({std::move(input), std::move(lhs), std::move(rhs)});
  }
  // Records one case; the strings are built only on failure.
  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    if (ok)
      pass();
    else {
      Failure f = describe();
      fail(std::move(f.input), std::move(f.lhs), std::move(f.rhs));
    }
  }

  void merge(const Report& other) {
    cases += other.cases;
    failureCount += other.failureCount;
    for (const auto& f : other.failures)
      if (failures.size() < maxStoredFailures)
        failures.push_back(f);
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }

  nlohmann::json toJson() const {
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : failures)
      fs.push_back({{"input", f.input}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    nlohmann::json j = {{"check", check},
                        {"degree", degree},
                        {"cases", cases},
                        {"failureCount", failureCount},
                        {"failures", fs},
                        {"passed", passed()}};
    if (seed)
      j["seed"] = *seed;
    if (!notes.empty())
      j["notes"] = notes;
    return j;
  }

  std::string toText() const {
    std::string out = check + " (degree " + std::to_string(degree) + "): " +
                      std::to_string(cases) + " cases, " + std::to_string(failureCount) +
                      " failures" + (passed() ? " [pass]" : " [FAIL]");
    if (seed)
      out += " seed=" + std::to_string(*seed);
    out += "\n";
    for (const auto& n : notes)
      out += "  note: " + n + "\n";
    for (const auto& f : failures)
      out += "  " + f.input + "\n    lhs: " + f.lhs + "\n    rhs: " + f.rhs + "\n";
    return out;
  }
};

} // namespace qbx
