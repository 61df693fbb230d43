#include "doctest.h"

#include <fstream>
#include <sstream>

#include "supercoh/catalog.hpp"
#include "supercoh/io.hpp"

using namespace supercoh;
using namespace supercoh::io;
using gflin::Vec;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(SUPERCOH_TEST_DATA) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t first_line(const ParseError& e) { return e.diagnostics().empty() ? 0 : e.diagnostics()[0].line; }

}  // namespace

TEST_CASE("minimal file gives A1") {
  auto file = parse_algebra(R"({"p":3, "even":["x"], "odd":[], "brackets":{}, "pmap":{"x":{}}})");
  CHECK(file.g.dim() == 1);
  CHECK(file.g.field.p() == 3);
  CHECK(file.p_pinned);
  CHECK(gflin::is_zero(file.g.pmap[0]));
}

TEST_CASE("brackets are stored verbatim and completed by skew symmetry") {
  auto file = parse_algebra(slurp("a3.json"));
  const auto& g = file.g;
  CHECK(g.bracket[1][1] == Vec{1, 0});
  auto a4 = parse_algebra(slurp("a4.json"));
  CHECK(a4.g.bracket[0][1] == Vec{0, 1});
  CHECK(a4.g.bracket[1][0] == Vec{0, 2});
  CHECK(a4.modules.size() == 2);
  CHECK(a4.module("adjoint") != nullptr);
}

TEST_CASE("p = 2 and composite p are rejected") {
  try {
    read_algebra(slurp("p2.json"));
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("p must be an odd prime") != std::string::npos);
    CHECK(first_line(e) == 2);
  }
  CHECK_THROWS_AS(read_algebra(R"({"p": 9, "even": ["x"]})"), ParseError);
}

TEST_CASE("syntax errors carry a line") {
  try {
    read_algebra(slurp("bad_syntax.json"));
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(first_line(e) == 4);
  }
}

TEST_CASE("unknown names point at their line") {
  std::string text = "{\n  \"even\": [\"x\"],\n  \"brackets\": {\"[x,q]\": {\"x\": 1}}\n}";
  try {
    read_algebra(text);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(first_line(e) == 3);
  }
}

TEST_CASE("broken Jacobi is a validation error with indices") {
  try {
    parse_algebra(slurp("broken_jacobi.json"));
    FAIL("no error");
  } catch (const ValidationError& e) {
    bool found = false;
    for (const auto& [part, rep] : e.validation().parts)
      for (const auto& v : rep.violations) found = found || (part == "algebra" && v.axiom == "jacobi" && v.indices.size() == 3);
    CHECK(found);
  }
}

TEST_CASE("inconsistent brackets written in both orders are caught") {
  auto file = read_algebra(R"({"even":["a","b"], "brackets":{"[a,b]":{"b":1}, "[b,a]":{"b":1}}})");
  auto v = validate_file(file);
  CHECK_FALSE(v.ok());
  CHECK(v.parts[0].second.violations[0].axiom == "skew_symmetry");
}

TEST_CASE("p override") {
  CHECK_THROWS_AS(read_algebra(slurp("a3.json"), 5), ParseError);
  auto file = read_algebra(slurp("a1_free_p.json"), 5);
  CHECK(file.g.field.p() == 5);
  CHECK_FALSE(file.p_pinned);
  CHECK(read_algebra(slurp("a1_free_p.json")).g.field.p() == 3);
}

TEST_CASE("module p-maps are flagged") {
  auto file = parse_algebra(slurp("a1_module_pmap.json"));
  CHECK(file.modules[0].has_pmap);
  CHECK_FALSE(parse_algebra(slurp("a1.json")).modules[0].has_pmap);
}

TEST_CASE("catalog entries survive a write/read cycle") {
  for (const auto& e : catalog::entries()) {
    CAPTURE(e.id);
    std::string text = dump(algebra_to_json(e.g, {{e.module_name, e.m, false}}));
    auto back = parse_algebra(text);
    CHECK(back.g.space == e.g.space);
    CHECK(back.g.bracket == e.g.bracket);
    CHECK(back.g.pmap == e.g.pmap);
    REQUIRE(back.modules.size() == 1);
    CHECK(back.modules[0].rep.target == e.m.target);
    for (std::size_t i = 0; i < e.g.dim(); ++i) CHECK(back.modules[0].rep.rho[i] == e.m.rho[i]);
    CHECK(dump(algebra_to_json(back.g, back.modules)) == text);
  }
}

TEST_CASE("six-term reports serialize losslessly") {
  for (const auto& e : catalog::entries()) {
    CAPTURE(e.id);
    auto r = sixterm::build_six_term(e.g, e.m, e.id, e.module_name);
    Json j = sixterm_to_json(r);
    auto back = sixterm_from_json(j);
    CHECK(back.dims == r.dims);
    CHECK(back.phi == r.phi);
    CHECK(back.fg == r.fg);
    CHECK(dump(sixterm_to_json(back)) == dump(j));
  }
}

TEST_CASE("digest and report envelope") {
  CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(digest("a") == "fnv1a64:af63dc4c8601ec8c");
  Json r = make_report("x", "d", Json::object(), {{"n", 1}}, {}, {{"t", 1.5}}, {});
  CHECK(r["schema_version"] == schema_version);
  CHECK_FALSE(r.contains("timings_ms"));
  Json t = make_report("x", "d", Json::object(), {}, {}, {{"t", 1.5}}, {true});
  CHECK(t["timings_ms"]["t"] == 1.5);
}

TEST_CASE("size warning") {
  gflin::Field f3(3), f7(7);
  auto small = catalog::two_dim_solvable(f7);
  CHECK_FALSE(size_warning(catalog::two_dim_solvable(f3), super::trivial_module(catalog::two_dim_solvable(f3))));
  CHECK_FALSE(size_warning(small, super::trivial_module(small)));
  super::LieSuperAlgebra big(f7, super::SuperSpace({"a", "b", "c"}, {}));
  CHECK(size_warning(big, super::trivial_module(big)).has_value());
}
