// Exercises the shared library through poma.h only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "json.hpp"

#include <string>

#include "poma/poma.h"

using nlohmann::json;

namespace {

struct Alg {
  poma_algebra* p = nullptr;
  explicit Alg(const char* spec) { REQUIRE(poma_algebra_corpus(spec, &p) == POMA_OK); }
  Alg() = default;
  ~Alg() { poma_algebra_free(p); }
  Alg(const Alg&) = delete;
  Alg& operator=(const Alg&) = delete;
};

struct Var {
  poma_variety* p = nullptr;
  explicit Var(const char* spec) {
    Alg a(spec);
    const poma_algebra* g = a.p;
    REQUIRE(poma_variety_new(&g, 1, &p) == POMA_OK);
  }
  ~Var() { poma_variety_free(p); }
  Var(const Var&) = delete;
  Var& operator=(const Var&) = delete;
};

// Takes ownership of a returned string.
std::string take(char* s) {
  std::string out = s ? s : "";
  poma_string_free(s);
  return out;
}

// Runs a call that fills a report string and parses it.
template <class F>
json report(F call) {
  char* s = nullptr;
  REQUIRE(call(&s) == POMA_OK);
  return json::parse(take(s));
}

}  // namespace

TEST_CASE("error codes") {
  poma_algebra* a = nullptr;
  CHECK(poma_algebra_corpus("NOPE", &a) == POMA_ERR_NOT_FOUND);
  CHECK(a == nullptr);
  CHECK(std::string(poma_last_error()).find("NOPE") != std::string::npos);
  CHECK(poma_algebra_corpus("EX46:9", &a) == POMA_ERR_PRECONDITION);
  CHECK(poma_algebra_corpus(nullptr, &a) == POMA_ERR_ARGUMENT);
  CHECK(poma_algebra_from_json("{oops", &a) == POMA_ERR_STRUCTURE);
  CHECK(poma_algebra_from_json(R"({"size":2,"leq":[[1,0],[0,1]],"box":[0,1],"diamond":[0,1]})", &a) ==
        POMA_ERR_INVALID_ALGEBRA);
  Alg d4("D4");
  uint32_t v = 0;
  CHECK(poma_eval(d4.p, "box (x", R"({"x": 1})", &v) == POMA_ERR_PARSE);
  CHECK(poma_eval(d4.p, "box y", R"({"x": 1})", &v) == POMA_ERR_PRECONDITION);
  char* s = nullptr;
  CHECK(poma_battery("nope", 3, &s) == POMA_ERR_ARGUMENT);
  CHECK(poma_predicate(d4.p, "nope", nullptr) == POMA_ERR_ARGUMENT);
  CHECK(std::string(poma_status_name(POMA_ERR_BUDGET)) != "");
  CHECK(std::string(poma_version()) != "");
  poma_variety* triv = nullptr;
  REQUIRE(poma_variety_new(nullptr, 0, &triv) == POMA_OK);
  CHECK(poma_complete(triv, "sc", &s) == POMA_ERR_PRECONDITION);
  poma_variety_free(triv);
}

TEST_CASE("algebra round trips") {
  Alg d4("D4");
  CHECK(poma_algebra_size(d4.p) == 4);
  char* name = nullptr;
  REQUIRE(poma_algebra_name(d4.p, &name) == POMA_OK);
  CHECK(take(name) == "D4");
  char* js = nullptr;
  REQUIRE(poma_algebra_to_json(d4.p, &js) == POMA_OK);
  Alg back;
  const std::string text = take(js);
  REQUIRE(poma_algebra_from_json(text.c_str(), &back.p) == POMA_OK);
  int iso = 0;
  REQUIRE(poma_algebra_is_iso(d4.p, back.p, &iso) == POMA_OK);
  CHECK(iso == 1);
  uint64_t h1 = 0, h2 = 0;
  poma_algebra_canonical_hash(d4.p, &h1);
  poma_algebra_canonical_hash(back.p, &h2);
  CHECK(h1 == h2);
  const auto val = report([&](char** r) { return poma_validate_json(text.c_str(), r); });
  CHECK(val["is_ps4"] == true);
  int flag = -1;
  REQUIRE(poma_predicate(d4.p, "si", &flag) == POMA_OK);
  CHECK(flag == 1);
  REQUIRE(poma_predicate(d4.p, "simple", &flag) == POMA_OK);
  CHECK(flag == 0);
  uint32_t v = 9;
  REQUIRE(poma_eval(d4.p, "dia x", R"({"x": 1})", &v) == POMA_OK);
  CHECK(v == 2);
  const auto names = report([&](char** r) { return poma_corpus_names(r); });
  CHECK(names["names"].size() > 10);
}

TEST_CASE("congruences and constructions") {
  Alg d3("D3"), c2("C2");
  const uint32_t pair[] = {1, 2};
  char* s = nullptr;
  REQUIRE(poma_cg(d3.p, pair, 1, &s) == POMA_OK);
  CHECK(take(s) == "[0,0,0]");  // block labels
  const auto hs = report([&](char** r) { return poma_hs_si(d3.p, r); });
  CHECK(hs.is_array());
  Alg prod;
  REQUIRE(poma_product(c2.p, c2.p, &prod.p) == POMA_OK);
  CHECK(poma_algebra_size(prod.p) == 4);
  const uint32_t rel[] = {0, 0};
  Alg cx;
  REQUIRE(poma_complex_algebra(1, rel, 1, &cx.p) == POMA_OK);
  int iso = 0;
  poma_algebra_is_iso(cx.p, c2.p, &iso);
  CHECK(iso == 1);
}

TEST_CASE("free algebras") {
  Alg d4("D4");
  const poma_algebra* g = d4.p;
  Alg f;
  uint32_t gen = 99;
  REQUIRE(poma_free_over(&g, 1, 1, &f.p, &gen) == POMA_OK);
  CHECK(poma_algebra_size(f.p) == 5);
  CHECK(gen == 2);
  Alg z;
  REQUIRE(poma_free_zero(&g, 1, &z.p) == POMA_OK);
  CHECK(poma_algebra_size(z.p) == 2);
  char* s = nullptr;
  const auto fig = report([&](char** r) { return poma_figure1_verify(4, r); });
  CHECK(fig["passed"] == true);
  CHECK(fig["stages"].size() == 5);
  const auto growth = report([&](char** r) { return poma_growth(6, r); });
  CHECK(growth["distinct"] == 6);
}

TEST_CASE("varieties and batteries") {
  char* s = nullptr;
  const auto fig = report([&](char** r) { return poma_figure4(r); });
  CHECK(fig["matches"] == true);
  CHECK(fig["edges"].size() == 21);
  Var d4("D4"), c2("C2");
  int inc = 0;
  REQUIRE(poma_variety_includes(d4.p, c2.p, &inc) == POMA_OK);
  CHECK(inc == 1);
  REQUIRE(poma_variety_includes(c2.p, d4.p, &inc) == POMA_OK);
  CHECK(inc == 0);
  const auto bat = report([&](char** r) { return poma_battery("thm610", 6, r); });
  CHECK(bat["passed"] == true);
  CHECK(bat["witnesses"] == json::array({"C2", "D4"}));
  const auto en = report([&](char** r) { return poma_enumerate("PS4", 1, 3, 0, 0, nullptr, 0, r); });
  CHECK(en.size() == 6);
}

TEST_CASE("completeness") {
  char* s = nullptr;
  Var d4("D4"), d3("D3");
  CHECK(report([&](char** r) { return poma_complete(d4.p, "sc", r); })["status"] == "Yes");
  CHECK(report([&](char** r) { return poma_complete(d3.p, "psc", r); })["status"] == "No");
  CHECK(report([&](char** r) { return poma_complete(d4.p, "asc", r); })["status"] == "Yes");
  CHECK(poma_complete(d4.p, "nope", &s) == POMA_ERR_ARGUMENT);
  const auto q = report([&](char** r) { return poma_quasi_classify(d4.p, "box x ~ x => x ~ dia x", 2, r); });
  CHECK(q["status"] == "RefutedAdmissibilityAt");
  CHECK(q["rank"] == 1);
  int ok = 0;
  REQUIRE(poma_lemma22(d4.p, &ok) == POMA_OK);
  CHECK(ok == 1);
  CHECK(report([&](char** r) { return poma_thm93(d4.p, 6, r); })["holds"] == true);
}
