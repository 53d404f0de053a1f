#include <doctest.h>

#include <qbicross/qbicross.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

namespace {

struct Handle {
  qbx_algebra* a = nullptr;
  explicit Handle(const char* name) { REQUIRE(qbx_algebra_open(name, &a) == QBX_OK); }
  ~Handle() { qbx_algebra_close(a); }
};

// Takes ownership of a returned string.
std::string take(char* s) {
  std::string out = s ? s : "";
  qbx_string_free(s);
  return out;
}

} // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(qbx_status_name(QBX_OK)) == "ok");
  CHECK(std::string(qbx_status_name(QBX_ERR_PARSE)) == "parse error");
  CHECK(std::string(qbx_status_name(static_cast<qbx_status>(99))) == "unknown status");
  CHECK(std::string(qbx_version()).size() > 0);
}

TEST_CASE("open and close") {
  qbx_algebra* a = nullptr;
  CHECK(qbx_algebra_open("loop", &a) == QBX_OK);
  CHECK(a != nullptr);
  qbx_algebra_close(a);
  qbx_algebra_close(nullptr);
  CHECK(qbx_algebra_open("nope", &a) == QBX_ERR_LOOKUP);
  CHECK(std::string(qbx_last_error()).find("nope") != std::string::npos);
  CHECK(qbx_algebra_open(nullptr, &a) == QBX_ERR_ARGUMENT);
  CHECK(qbx_algebra_open("loop", nullptr) == QBX_ERR_ARGUMENT);
}

TEST_CASE("normalize and multiply") {
  Handle h("affine_new");
  char* out = nullptr;
  REQUIRE(qbx_normalize(h.a, "F0*E0", QBX_TEXT, &out) == QBX_OK);
  CHECK(take(out) == "(1 - c^2*K^-2)/(q - q^-1) + q*E0*F0");
  CHECK(std::string(qbx_last_error()).empty());

  REQUIRE(qbx_normalize(h.a, "F0*E0", QBX_JSON, &out) == QBX_OK);
  const auto j = nlohmann::json::parse(take(out));
  CHECK(j["presentation"] == "affine_new");
  CHECK(j["result"]["text"] == "(1 - c^2*K^-2)/(q - q^-1) + q*E0*F0");

  REQUIRE(qbx_multiply(h.a, "K", "E0", QBX_TEXT, &out) == QBX_OK);
  CHECK(take(out) == "K*E0");
  REQUIRE(qbx_multiply(h.a, "E0", "K", QBX_TEXT, &out) == QBX_OK);
  CHECK(take(out) == "q*K*E0");

  out = nullptr;
  CHECK(qbx_normalize(h.a, "", QBX_TEXT, &out) == QBX_ERR_PARSE);
  CHECK(out == nullptr);
  CHECK(qbx_normalize(h.a, "Z", QBX_TEXT, &out) == QBX_ERR_LOOKUP);
  CHECK(qbx_normalize(h.a, "E0^-1", QBX_TEXT, &out) == QBX_ERR_DOMAIN);
  CHECK(qbx_normalize(h.a, "1/(q-q)", QBX_TEXT, &out) == QBX_ERR_ARITHMETIC);
  CHECK(qbx_normalize(nullptr, "E0", QBX_TEXT, &out) == QBX_ERR_ARGUMENT);
  CHECK(qbx_normalize(h.a, "E0", QBX_TEXT, nullptr) == QBX_ERR_ARGUMENT);
  CHECK(qbx_normalize(h.a, "E0", static_cast<qbx_format>(7), &out) == QBX_ERR_ARGUMENT);
}

TEST_CASE("hopf maps") {
  Handle h("loop");
  char* out = nullptr;
  REQUIRE(qbx_coproduct(h.a, "e0", 1, QBX_TEXT, &out) == QBX_OK);
  CHECK(take(out) == "1 (x) e0 + e0 (x) k^-1");
  REQUIRE(qbx_coproduct(h.a, "k", 2, QBX_TEXT, &out) == QBX_OK);
  CHECK(take(out) == "k (x) k (x) k");
  CHECK(qbx_coproduct(h.a, "k", 0, QBX_TEXT, &out) == QBX_ERR_DOMAIN);
  REQUIRE(qbx_counit(h.a, "k^3 + e0", QBX_TEXT, &out) == QBX_OK);
  CHECK(take(out) == "1");
  REQUIRE(qbx_antipode(h.a, "e0", QBX_TEXT, &out) == QBX_OK);
  CHECK(take(out) == "-q*k*e0");
}

TEST_CASE("serre membership") {
  Handle h("affine_new");
  int member = -1;
  REQUIRE(qbx_serre_member(h.a, "E0^3*E1 - (q^2+1+q^-2)*E0^2*E1*E0 + (q^2+1+q^-2)*E0*E1*E0^2 - E1*E0^3", 4,
                           &member) == QBX_OK);
  CHECK(member == 1);
  REQUIRE(qbx_serre_member(h.a, "E0*E1", 4, &member) == QBX_OK);
  CHECK(member == 0);
}

TEST_CASE("verify") {
  Handle h("cz");
  char* out = nullptr;
  int passed = 0;
  REQUIRE(qbx_verify(h.a, "hopf", 3, 1, QBX_JSON, &out, &passed) == QBX_OK);
  CHECK(passed == 1);
  const auto j = nlohmann::json::parse(take(out));
  CHECK(j["passed"] == true);
  CHECK(j["seed"] == 1);
  REQUIRE(qbx_verify(h.a, "cocycle", 2, 1, QBX_TEXT, &out, &passed) == QBX_OK);
  CHECK(passed == 1);
  CHECK(take(out).rfind("cocycle (degree 2)", 0) == 0);
  CHECK(qbx_verify(h.a, "bogus", 2, 1, QBX_TEXT, &out, &passed) == QBX_ERR_LOOKUP);

  Handle o("affine_original");
  CHECK(qbx_verify(o.a, "iso", 2, 1, QBX_TEXT, &out, &passed) == QBX_ERR_DOMAIN);
  REQUIRE(qbx_verify(o.a, "confluence", 2, 1, QBX_TEXT, &out, &passed) == QBX_OK);
  CHECK(passed == 1);
  qbx_string_free(out);
}

TEST_CASE("extension maps") {
  char* out = nullptr;
  REQUIRE(qbx_cocycle("f0", "e0", 0, QBX_TEXT, &out) == QBX_OK);
  CHECK(take(out) == "(1 - c^2)/(q - q^-1)");
  REQUIRE(qbx_cocycle("f0", "e0", 1, QBX_TEXT, &out) == QBX_OK);
  CHECK(take(out) == "(-1 + c^2)/(q - q^-1)");
  REQUIRE(qbx_jmap("f0*e0", QBX_TEXT, &out) == QBX_OK);
  CHECK(take(out) == "(1 - K^-2)/(q - q^-1) + q*E0*F0");
  REQUIRE(qbx_beta("e0", QBX_TEXT, &out) == QBX_OK);
  CHECK(take(out) == "e0 (x) c");
  REQUIRE(qbx_ext_multiply("F0", "E0", QBX_TEXT, &out) == QBX_OK);
  CHECK(take(out) == "1/(q - q^-1) (x) 1 + q (x) e0*f0 - 1/(q - q^-1)*c^2 (x) k^-2\n"
                     "phi: (1 - c^2*K^-2)/(q - q^-1) + q*E0*F0");
  REQUIRE(qbx_ext_coproduct("E0", QBX_TEXT, &out) == QBX_OK);
  CHECK(take(out) == "(1 (x) 1) (x) (1 (x) e0) + (1 (x) e0) (x) (c (x) k^-1)");
  CHECK(qbx_cocycle("F0", "e0", 0, QBX_TEXT, &out) == QBX_ERR_LOOKUP);
}

TEST_CASE("rcalc") {
  char* out = nullptr;
  REQUIRE(qbx_rcalc_cocycle(1, 1, 0, "z,w", QBX_RC_DIRECT, 12, QBX_TEXT, &out) == QBX_OK);
  CHECK(take(out) == "R[1,2](z/w; q^-2c) R^-1[1,2](z/w)");
  REQUIRE(qbx_rcalc_cocycle(1, 1, 1, nullptr, QBX_RC_CLOSED, 12, QBX_TEXT, &out) == QBX_OK);
  CHECK(take(out) == "1");
  REQUIRE(qbx_rcalc_cocycle(2, 2, 0, nullptr, QBX_RC_CLOSED, 12, QBX_JSON, &out) == QBX_OK);
  const auto j = nlohmann::json::parse(take(out));
  CHECK(j["tokens"].size() == 8);
  CHECK(qbx_rcalc_cocycle(3, 3, 0, nullptr, QBX_RC_DIRECT, 4, QBX_TEXT, &out) == QBX_ERR_INCOMPLETE);
  CHECK(qbx_rcalc_cocycle(-1, 1, 0, nullptr, QBX_RC_DIRECT, 4, QBX_TEXT, &out) == QBX_ERR_DOMAIN);
  CHECK(qbx_rcalc_cocycle(1, 1, 0, nullptr, static_cast<qbx_rc_method>(5), 4, QBX_TEXT, &out) == QBX_ERR_ARGUMENT);
}

TEST_CASE("presentation export and reload") {
  Handle h("affine_new");
  char* out = nullptr;
  REQUIRE(qbx_presentation_export(h.a, &out) == QBX_OK);
  const std::string text = take(out);
  const auto path = std::filesystem::temp_directory_path() / "qbx_capi_test_presentation.json";
  std::ofstream(path) << text;
  qbx_algebra* b = nullptr;
  REQUIRE(qbx_algebra_open(path.c_str(), &b) == QBX_OK);
  REQUIRE(qbx_normalize(b, "F0*E0", QBX_TEXT, &out) == QBX_OK);
  CHECK(take(out) == "(1 - c^2*K^-2)/(q - q^-1) + q*E0*F0");
  REQUIRE(qbx_antipode(b, "E0", QBX_TEXT, &out) == QBX_OK);
  CHECK(take(out) == "-q*c^-1*K*E0");
  qbx_algebra_close(b);

  std::ofstream(path) << "{ not json";
  CHECK(qbx_algebra_open(path.c_str(), &b) == QBX_ERR_PARSE);
  std::ofstream(path) << R"({"name": "x", "alphabet": [{"name": "a", "invertible": false, "sort": "up"}]})";
  CHECK(qbx_algebra_open(path.c_str(), &b) != QBX_OK);
  std::filesystem::remove(path);
}

TEST_CASE("one handle shared by threads") {
  Handle h("affine_new");
  std::vector<std::string> results(8);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < results.size(); ++i)
    threads.emplace_back([&, i] {
      char* out = nullptr;
      const std::string expr = "(F0 + E1)^" + std::to_string(2 + i % 3);
      if (qbx_normalize(h.a, expr.c_str(), QBX_TEXT, &out) == QBX_OK)
        results[i] = take(out);
    });
  for (auto& t : threads)
    t.join();
  for (std::size_t i = 0; i < results.size(); ++i) {
    char* out = nullptr;
    const std::string expr = "(F0 + E1)^" + std::to_string(2 + i % 3);
    REQUIRE(qbx_normalize(h.a, expr.c_str(), QBX_TEXT, &out) == QBX_OK);
    CHECK(results[i] == take(out));
  }
}
