// The C interface, exercised through the shared library only.

#include <doctest.h>

#include <json.hpp>
#include <string>
#include <thread>

#include "vlines/vlines.h"

using nlohmann::json;

namespace {

// Owns a returned string.
std::string take(char* s) {
  std::string out = s ? s : "";
  vl_string_free(s);
  return out;
}

struct Family {
  vl_family* f = nullptr;
  ~Family() { vl_family_free(f); }
};

vl_options defaults() {
  vl_options o;
  vl_options_init(&o);
  return o;
}

json run(vl_status (*fn)(const vl_family*, const vl_options*, char**), const vl_family* f, const vl_options& o) {
  char* out = nullptr;
  REQUIRE(fn(f, &o, &out) == VL_OK);
  return json::parse(take(out));
}

json project(const vl_family* f, const vl_options& o) {
  char* out = nullptr;
  REQUIRE(vl_project(f, nullptr, &o, &out) == VL_OK);
  return json::parse(take(out));
}

}  // namespace

TEST_CASE("library basics") {
  CHECK(std::string(vl_version()).size() > 0);
  CHECK(std::string(vl_status_name(VL_OK)) == "ok");
  CHECK(std::string(vl_status_name(VL_ERR_ANTISYMMETRY)).size() > 0);
  const vl_options o = defaults();
  CHECK(o.seed == 1);
  CHECK(o.prime == 101);
  CHECK(o.exhaustive == -1);
  vl_string_free(nullptr);
  vl_family_free(nullptr);
}

TEST_CASE("atlas and JSON round trip") {
  Family a;
  REQUIRE(vl_atlas("chordal", 0, 101, 7, &a.f) == VL_OK);
  char* text = nullptr;
  REQUIRE(vl_family_to_json(a.f, &text) == VL_OK);
  const std::string first = take(text);
  const json j = json::parse(first);
  CHECK(j["n"] == 2);
  CHECK(j["N"] == 3);
  CHECK(j["field"]["Fp"] == 101);
  CHECK(j["entries"].size() == 6);

  Family b;
  REQUIRE(vl_family_from_json(first.c_str(), &b.f) == VL_OK);
  REQUIRE(vl_family_to_json(b.f, &text) == VL_OK);
  CHECK(take(text) == first);

  Family byid;
  REQUIRE(vl_atlas("2.3", 0, 101, 7, &byid.f) == VL_OK);
  REQUIRE(vl_family_to_json(byid.f, &text) == VL_OK);
  CHECK(take(text) == first);

  Family bad;
  CHECK(vl_atlas("2.9", 0, 101, 7, &bad.f) == VL_ERR_INVALID_ARGUMENT);
  CHECK(bad.f == nullptr);
  CHECK(vl_atlas("chordal", 3, 101, 7, &bad.f) == VL_ERR_WRONG_DIMENSION);
  CHECK(vl_atlas("split", 2, 4, 7, &bad.f) != VL_OK);
}

TEST_CASE("errors carry codes, messages and witnesses") {
  Family f;
  const char* clash = R"({"field":"Q","n":1,"N":3,"entries":[
      {"i":0,"j":1,"poly":"t0^2"},{"i":1,"j":0,"poly":"t1^2"}]})";
  CHECK(vl_family_from_json(clash, &f.f) == VL_ERR_ANTISYMMETRY);
  CHECK(f.f == nullptr);
  CHECK(std::string(vl_last_error()).size() > 0);
  const json e = json::parse(vl_last_error_json());
  CHECK(e["witness"] == json::array({0, 1}));

  CHECK(vl_family_from_json("{not json", &f.f) == VL_ERR_PARSE);
  CHECK(vl_family_from_json(R"({"field":"Q","n":1,"N":3,"entries":[{"i":0,"j":1,"poly":"t0*"}]})", &f.f) == VL_ERR_PARSE);
  CHECK(vl_family_from_json(nullptr, &f.f) == VL_ERR_INVALID_ARGUMENT);

  // success clears the message
  REQUIRE(vl_atlas("split", 1, 0, 1, &f.f) == VL_OK);
  CHECK(std::string(vl_last_error()).empty());

  char* out = nullptr;
  CHECK(vl_classify(nullptr, nullptr, &out) == VL_ERR_INVALID_ARGUMENT);
  CHECK(vl_classify(f.f, nullptr, nullptr) == VL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("errors are per thread") {
  Family f;
  CHECK(vl_family_from_json("[]", &f.f) != VL_OK);
  std::string other;
  std::thread t([&] { other = vl_last_error(); });
  t.join();
  CHECK(other.empty());
  CHECK(std::string(vl_last_error()).size() > 0);
}

TEST_CASE("analyses return reports with a header") {
  Family f;
  REQUIRE(vl_atlas("chordal", 0, 101, 7, &f.f) == VL_OK);
  vl_options o = defaults();
  o.seed = 5;

  const json v = run(vl_validate, f.f, o);
  CHECK(v["command"] == "validate");
  CHECK(v["header"]["seed"] == 5);
  CHECK(v["header"]["prime"] == 101);
  CHECK(v["header"]["input_hash"].get<std::string>().size() == 16);
  CHECK(v["result"]["valid"] == true);

  const json c = run(vl_classify, f.f, o);
  CHECK(c["result"]["verdict"] == "ChordalCubic");
  CHECK(c["result"]["jumping"]["jumping"] == 102);

  const json j = run(vl_jumping, f.f, o);
  CHECK(j["result"]["mode"] == "exhaustive");
  CHECK(j["result"]["lines"].size() == 102);
  CHECK(j["result"]["curve"]["verdict"] == "RationalNormalCubic");

  const json b = run(vl_bidegree, f.f, o);
  CHECK(b["result"]["bidegree"] == json::array({1, 3}));

  const json s = run(vl_swept, f.f, o);
  CHECK(s["result"]["dimension"] == 3);

  char* out = nullptr;
  REQUIRE(vl_splitting(f.f, R"({"p":[1,0,0],"q":[0,1,0]})", &o, &out) == VL_OK);
  const json sp = json::parse(take(out));
  CHECK(sp["result"]["generic"]["type"] == json::array({1, 1}));
  CHECK(sp["result"]["line"]["type"] == json::array({2, 0}));
  CHECK(sp["result"]["line"]["vertex"] == json::array({1, 0, 0, 0}));
  CHECK(vl_splitting(f.f, R"({"p":[1,0,0],"q":[2,0,0]})", &o, &out) == VL_ERR_DEGENERATE_LINE);
}

TEST_CASE("reports are reproducible from the seed") {
  Family f;
  REQUIRE(vl_atlas("quadric", 0, 101, 3, &f.f) == VL_OK);
  vl_options o = defaults();
  o.seed = 42;
  const json a = run(vl_classify, f.f, o);
  const json b = run(vl_classify, f.f, o);
  CHECK(a == b);
  CHECK(a["result"]["verdict"] == "QuadricLines");
}

TEST_CASE("families over Q are reduced") {
  Family f;
  REQUIRE(vl_atlas("cone", 2, 0, 1, &f.f) == VL_OK);
  const json c = run(vl_classify, f.f, defaults());
  CHECK(c["header"]["field"] == "Q");
  CHECK(c["result"]["verdict"] == "ConeOverVeronese");
  CHECK(c["result"]["reduced"] == true);
}

TEST_CASE("projection") {
  Family split;
  REQUIRE(vl_atlas("split", 2, 101, 1, &split.f) == VL_OK);
  vl_options o = defaults();
  o.target = 3;
  const json p = project(split.f, o);
  CHECK(p["result"]["isomorphic"] == true);
  CHECK(p["result"]["span_dim"] == 6);
  CHECK(p["result"]["family"]["N"] == 3);

  Family quadric;
  REQUIRE(vl_atlas("quadric", 0, 101, 1, &quadric.f) == VL_OK);
  CHECK(p["result"]["attempts"] == 1);
  char* out = nullptr;
  const char* center = "[[1,0,0,0,0],[0,1,0,0,0],[0,0,1,0,0],[0,0,0,1,3]]";
  REQUIRE(vl_project(quadric.f, center, &o, &out) == VL_OK);
  const json q = json::parse(take(out));
  CHECK(q["result"]["isomorphic"] == false);
  CHECK(q["result"]["injectivity"]["collision"].is_array());

  const char* identity = "[[1,0,0,0,0,0],[0,1,0,0,0,0],[0,0,1,0,0,0],[0,0,0,1,0,0],[0,0,0,0,1,0],[0,0,0,0,0,1]]";
  REQUIRE(vl_project(split.f, identity, &o, &out) == VL_OK);
  const json same = json::parse(take(out));
  CHECK(same["result"]["isomorphic"] == true);
  o.target = 9;
  CHECK(vl_project(split.f, nullptr, &o, &out) == VL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("normal form") {
  char* coord = nullptr;
  REQUIRE(vl_random_coord(3, 101, 9, &coord) == VL_OK);
  const std::string text = take(coord);
  char* out = nullptr;
  REQUIRE(vl_normal_form(text.c_str(), &out) == VL_OK);
  const json r = json::parse(take(out));
  CHECK(r["result"]["span_dim"] == 10);
  CHECK(r["result"]["verified"] == true);

  const char* singular = R"({"field":"Q","n":1,"a":[[0,1],[0,1]]})";
  CHECK(vl_normal_form(singular, &out) == VL_ERR_NOT_AN_ISOMORPHISM);
  CHECK(vl_random_coord(0, 101, 1, &out) == VL_ERR_INVALID_ARGUMENT);
}
