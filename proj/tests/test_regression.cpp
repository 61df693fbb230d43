#include "doctest.h"

#include "supercoh/catalog.hpp"
#include "supercoh/envelope.hpp"
#include "supercoh/extensions.hpp"
#include "supercoh/sixterm.hpp"

using namespace supercoh;

TEST_CASE("odd trivial line over the super Heisenberg algebra at p = 3") {
  gflin::Field f(3);
  auto g = catalog::super_heisenberg(f);
  auto m = super::trivial_module(g, 0, 1);
  auto r = sixterm::build_six_term(g, m);
  CHECK(r.dims[4] == 1);
  CHECK(gflin::rank(r.phi) == 0);
  const sixterm::Verdict* at_h2 = nullptr;
  for (const auto& v : r.exactness)
    if (v.name == "exact_at_H2") at_h2 = &v;
  REQUIRE(at_h2 != nullptr);
  CHECK_FALSE(at_h2->ok);
  CHECK(at_h2->witness.has_value());

  // the class is a Lie 2-cocycle whose extension is not a Lie superalgebra
  sixterm::SixTermData d(g, m);
  auto ext = extensions::algebra_ext_from_2cocycle(d.lie(), d.h2().representatives().at(0));
  auto rep = super::validate_lie_super(ext.e);
  bool odd_cube = false;
  for (const auto& v : rep.violations) odd_cube = odd_cube || v.axiom == "odd_cube";
  CHECK(odd_cube);
}

TEST_CASE("the same pair at p = 5 is exact") {
  gflin::Field f(5);
  auto g = catalog::super_heisenberg(f);
  auto r = sixterm::build_six_term(g, super::trivial_module(g, 0, 1));
  CHECK(r.all_exact());
}

TEST_CASE("(ad x)^{p-1}(y) is the reading of the commutator identity that holds") {
  gflin::Field f(3);
  envelope::UAlgebra u(catalog::two_dim_solvable(f), envelope::Mode::restricted);
  auto h = u.generator(0);
  auto x = u.generator(1);
  CHECK(envelope::commutator_identity_holds(u, h, x));
  CHECK_FALSE(envelope::commutator_literal_holds(u, h, x));
}

TEST_CASE("binomial identity at l = p") {
  for (unsigned p : {3U, 5U}) {
    gflin::Field f(p);
    envelope::UAlgebra u(catalog::two_dim_solvable(f), envelope::Mode::restricted);
    auto h = u.generator(0);
    auto x = u.generator(1);
    auto y = u.add(h, x);
    CHECK(envelope::binomial_identity_holds(u, h, x, p));
    CHECK(envelope::binomial_identity_holds(u, y, h, p));
  }
}
