#include "doctest.h"

#include "support.hpp"
#include "supercoh/catalog.hpp"
#include "supercoh/errors.hpp"
#include "supercoh/super.hpp"

using namespace supercoh;
using namespace supercoh::super;
using testing::random_vec;

namespace {

Vec even_random(const LieSuperAlgebra& g, std::mt19937_64& rng) {
  Vec v = random_vec(g.field, g.dim(), rng);
  for (std::size_t i = g.even_dim(); i < g.dim(); ++i) v[i] = 0;
  return v;
}

}  // namespace

TEST_CASE("super space keeps evens first") {
  SuperSpace s({"a", "b"}, {"c"});
  CHECK(s.even_dim() == 2);
  CHECK(s.parity(2) == 1);
  CHECK(s.index_of("c") == 2);
  CHECK(s.index_of("zz") == static_cast<std::size_t>(-1));
  CHECK(s.parity_of({0, 0, 1}) == 1);
  CHECK_THROWS(s.parity_of({1, 0, 1}));

  SumLayout lay = direct_sum(SuperSpace({"x"}, {"y"}), SuperSpace({"m"}, {"n"}), "M.");
  CHECK(lay.space.names() == std::vector<std::string>{"x", "M.m", "y", "M.n"});
  CHECK(lay.first == std::vector<std::size_t>{0, 2});
  CHECK(lay.second == std::vector<std::size_t>{1, 3});
  CHECK(lay.project_second(lay.inject_second({1, 2})) == Vec{1, 2});
}

TEST_CASE("catalog algebras and modules satisfy the axioms") {
  for (const auto& e : catalog::entries()) {
    CAPTURE(e.id);
    CHECK(validate_lie_super(e.g).ok());
    CHECK(validate_pmap(e.g).ok());
    CHECK(validate_module(e.g, e.m, true).ok());
    CHECK(validate_lie_super(semidirect(e.g, e.m)).ok());
    CHECK(validate_pmap(semidirect(e.g, e.m)).ok());
  }
}

TEST_CASE("broken Jacobi is reported with its index triple") {
  Field f(3);
  LieSuperAlgebra g(f, SuperSpace({"a", "b", "c"}, {}));
  g.set_bracket(0, 1, {1, 0, 0});
  g.set_bracket(1, 2, {0, 1, 0});
  auto rep = validate_lie_super(g);
  REQUIRE_FALSE(rep.ok());
  bool found = false;
  for (const auto& v : rep.violations) found = found || (v.axiom == "jacobi" && v.indices.size() == 3);
  CHECK(found);
}

TEST_CASE("odd cube axiom in characteristic 3") {
  // [y,y] = z with [z,y] = w: Jacobi holds for p = 3 but [y,[y,y]] != 0
  Field f(3);
  LieSuperAlgebra g(f, SuperSpace({"z"}, {"y", "w"}));
  g.set_bracket(1, 1, {1, 0, 0});
  g.set_bracket(0, 1, {0, 0, 1});
  auto rep = validate_lie_super(g);
  bool jacobi = false, cube = false;
  for (const auto& v : rep.violations) {
    jacobi = jacobi || v.axiom == "jacobi";
    cube = cube || v.axiom == "odd_cube";
  }
  CHECK_FALSE(jacobi);
  CHECK(cube);
  CHECK(validate_lie_super(catalog::super_heisenberg(f)).ok());
}

TEST_CASE("Jacobson s_i on the two dimensional solvable algebra") {
  Field f(3);
  auto g = catalog::two_dim_solvable(f);
  auto s = jacobson_si(g, {1, 0}, {0, 1});
  REQUIRE(s.size() == 2);
  CHECK(s[0] == Vec{0, 0});
  CHECK(s[1] == Vec{0, 1});
  CHECK(pmap_apply(g, {1, 1}) == Vec{1, 1});
}

TEST_CASE("p-map properties on random even vectors") {
  std::mt19937_64 rng(17);
  for (const auto& e : catalog::entries()) {
    const auto& g = e.g;
    if (g.even_dim() == 0) continue;
    CAPTURE(e.id);
    for (int t = 0; t < 10; ++t) {
      Vec v = even_random(g, rng);
      Vec vp = pmap_apply(g, v);
      CHECK(pmap_apply(g, v, true) == vp);
      CHECK(g.ad(vp) == g.ad(v).power(g.field.p()));
      Scalar c = random_vec(g.field, 1, rng)[0];
      CHECK(pmap_apply(g, g.field.scaled(v, c)) == g.field.scaled(vp, g.field.pow(c, g.field.p())));
    }
  }
}

TEST_CASE("adjoint, coadjoint and hom modules") {
  for (const auto& e : catalog::entries()) {
    CAPTURE(e.id);
    const auto& g = e.g;
    auto ad = adjoint_module(g);
    CHECK(validate_module(g, ad, true).ok());
    CHECK(validate_module(g, dual_module(g, ad), true).ok());
    auto hom = hom_module(g, trivial_module(g, 1, 1), e.m);
    CHECK(validate_module(g, hom.module, true).ok());
    CHECK(hom.module.dim() == 2 * e.m.dim());
  }
}

TEST_CASE("invariants and semilinear spaces") {
  Field f(3);
  auto a4 = catalog::two_dim_solvable(f);
  auto inv = invariants(a4, adjoint_module(a4));
  CHECK(inv.all.dim() == 0);
  auto triv = invariants(a4, trivial_module(a4, 2, 1));
  CHECK(triv.all.dim() == 3);
  CHECK(triv.even.dim() == 2);
  auto s = semilinear_space(a4.even_dim(), triv.even);
  CHECK(s.dim() == 4);
  for (std::size_t k = 0; k < s.dim(); ++k) {
    Vec co = *s.coordinates(s.basis_map(k));
    CHECK(co == gflin::unit_vector(s.dim(), k));
  }
  CHECK_FALSE(s.coordinates({{0, 0, 1}, {0, 0, 0}}).has_value());
}
