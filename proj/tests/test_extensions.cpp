#include "doctest.h"

#include <optional>

#include "support.hpp"
#include "supercoh/catalog.hpp"
#include "supercoh/errors.hpp"
#include "supercoh/extensions.hpp"
#include "supercoh/sixterm.hpp"

using namespace supercoh;
using namespace supercoh::extensions;
using testing::random_vec;

namespace {

const catalog::Entry& get(const std::vector<catalog::Entry>& all, const char* id) {
  const auto* e = catalog::find(all, id);
  REQUIRE(e);
  return *e;
}

Vec random_cocycle(const cohomology::CohomologyResult& h, std::mt19937_64& rng) {
  return h.z().combination(random_vec(h.z().field(), h.z().dim(), rng));
}

Vec random_coboundary(const LieComplex& c, unsigned n, std::mt19937_64& rng) {
  return c.differential(n - 1).apply(random_vec(c.field(), c.dim(n - 1), rng));
}

}  // namespace

TEST_CASE("trivial extension is a strongly abelian restricted extension") {
  for (const auto& e : catalog::entries()) {
    CAPTURE(e.id);
    CHECK(validate_extension(trivial_extension(e.g, e.m), true).ok());
  }
}

TEST_CASE("module extensions round trip through 1-cocycles") {
  std::mt19937_64 rng(43);
  for (const auto& e : catalog::entries()) {
    CAPTURE(e.id);
    auto k = super::trivial_module(e.g, 1, 1);
    auto hom = super::hom_module(e.g, k, e.m);
    LieComplex c(e.g, hom.module);
    auto h1 = cohomology::lie_cohomology(c, 1);
    Vec f = random_cocycle(h1, rng);
    auto ext = module_ext_from_1cocycle(c, hom, e.m, k, f);
    CHECK(validate_module_extension(e.g, ext, false).ok());
    CHECK(cocycle_from_module_ext(c, hom, ext) == f);
  }
}

TEST_CASE("Lie algebra extensions round trip through 2-cocycles") {
  std::mt19937_64 rng(47);
  for (const auto& e : catalog::entries()) {
    CAPTURE(e.id);
    LieComplex c(e.g, e.m);
    auto h2 = cohomology::lie_cohomology(c, 2);
    for (int t = 0; t < 3; ++t) {
      Vec f = random_cocycle(h2, rng);
      auto ext = algebra_ext_from_2cocycle(c, f);
      CHECK(super::validate_lie_super(ext.e).ok());
      CHECK(validate_extension(ext, true).ok());
      CHECK(cocycle_from_algebra_ext(c, ext) == f);
    }
  }
}

TEST_CASE("a non-cocycle is rejected") {
  bool tested = false;
  for (const auto& e : catalog::entries()) {
    LieComplex c(e.g, e.m);
    for (std::size_t i = 0; i < c.dim(2); ++i) {
      Vec bad = gflin::unit_vector(c.dim(2), i);
      if (gflin::is_zero(c.differential(2).apply(bad))) continue;
      CAPTURE(e.id);
      CHECK_THROWS_AS(algebra_ext_from_2cocycle(c, bad), NotACocycle);
      tested = true;
      break;
    }
  }
  CHECK(tested);
}

TEST_CASE("restricted structures exist exactly when the obstruction vanishes") {
  std::mt19937_64 rng(53);
  for (const auto& e : catalog::entries()) {
    CAPTURE(e.id);
    sixterm::SixTermData d(e.g, e.m);
    const auto& c = d.lie();
    for (int t = 0; t < 3; ++t) {
      Vec f = random_cocycle(d.h2(), rng);
      bool zero = gflin::is_zero(sixterm::map_phi(d, {f}).column(0));
      auto sigma = solve_sigma(c, f);
      CHECK(sigma.has_value() == zero);
      if (sigma) {
        auto ext = restricted_structure_from_sigma(c, f, *sigma);
        CHECK(validate_extension(ext, true).ok());
      } else {
        CHECK_THROWS_AS(restricted_ext_from_2cocycle(c, f), NoSolution);
      }
    }
  }
}

TEST_CASE("associative 2-cocycles give restricted extensions and come back") {
  std::mt19937_64 rng(59);
  for (const auto& e : catalog::entries()) {
    CAPTURE(e.id);
    sixterm::SixTermData d(e.g, e.m);
    Matrix cmp = cohomology::comparison_matrix(d.bar(), d.lie(), 2);
    for (int t = 0; t < 2; ++t) {
      Vec c = random_cocycle(d.h2_star(), rng);
      auto ext = restricted_ext_from_assoc_2cocycle(d.bar(), d.lie(), c);
      REQUIRE(validate_extension(ext, true).ok());
      CHECK(d.h2().b().contains(e.g.field.subtracted(cocycle_from_algebra_ext(d.lie(), ext), cmp.apply(c))));
      Vec back = assoc_2cocycle_from_restricted_ext(d.bar(), ext);
      CHECK(d.h2_star().b().contains(e.g.field.subtracted(back, c)));
      std::vector<Vec> pert;
      for (std::size_t i = 0; i < e.g.dim(); ++i) {
        Vec v = random_vec(e.g.field, e.m.dim(), rng);
        for (std::size_t a = 0; a < e.m.dim(); ++a)
          if (e.m.target.parity(a) != e.g.parity(i)) v[a] = 0;
        pert.push_back(v);
      }
      Vec perturbed = assoc_2cocycle_from_restricted_ext(d.bar(), ext, pert);
      CHECK(d.h2_star().b().contains(e.g.field.subtracted(perturbed, c)));
    }
  }
}

TEST_CASE("automorphisms from 1-cocycles") {
  std::mt19937_64 rng(61);
  for (const auto& e : catalog::entries()) {
    CAPTURE(e.id);
    LieComplex c(e.g, e.m);
    auto ext = trivial_extension(e.g, e.m);
    Vec h = random_cocycle(cohomology::lie_cohomology(c, 1), rng);
    Matrix a = automorphism_from_1cocycle(c, ext, h);
    CHECK(is_lie_homomorphism(ext.e, ext.e, a));
    CHECK(is_extension_morphism(ext, ext, a));
    bool psi_zero = true;
    for (const auto& v : psi_values(c, h)) psi_zero = psi_zero && gflin::is_zero(v);
    CHECK(preserves_pmap(ext.e, ext.e, a) == psi_zero);
  }
}

TEST_CASE("twisting the p-map and equivalence") {
  std::mt19937_64 rng(67);
  for (const auto& e : catalog::entries()) {
    CAPTURE(e.id);
    LieComplex c(e.g, e.m);
    auto ext = trivial_extension(e.g, e.m);
    auto s = super::semilinear_space(e.g.even_dim(), super::invariants(e.g, e.m).even);
    Subspace im = psi_image(c);
    for (std::size_t k = 0; k < s.dim(); ++k) {
      auto twisted = twist_pmap(ext, s.basis_map(k));
      CHECK(validate_extension(twisted, true).ok());
      CHECK(are_equivalent_restricted(c, ext, twisted) == im.contains(gflin::unit_vector(s.dim(), k)));
    }
    Vec h = random_cocycle(cohomology::lie_cohomology(c, 1), rng);
    auto by_psi = twist_pmap(ext, psi_values(c, h));
    CHECK(are_equivalent_restricted(c, ext, by_psi));
  }
}

TEST_CASE("twisting by a non-invariant value is rejected") {
  gflin::Field f(3);
  auto g = catalog::two_dim_solvable(f);
  auto ext = trivial_extension(g, super::adjoint_module(g));
  CHECK_THROWS_AS(twist_pmap(ext, {{0, 1}, {0, 0}}), ValueNotInvariant);
}

TEST_CASE("equivalence needs the same underlying extension") {
  auto all = catalog::entries();
  const auto& e = get(all, "abelian-plane-00-p3");
  LieComplex c(e.g, e.m);
  auto h2 = cohomology::lie_cohomology(c, 2);
  REQUIRE(h2.dim() > 0);
  auto a = trivial_extension(e.g, e.m);
  std::optional<Extension> b;
  for (const auto& f : h2.representatives())
    if (!b && solve_sigma(c, f)) b = restricted_ext_from_2cocycle(c, f);
  REQUIRE(b.has_value());
  CHECK_THROWS_AS(are_equivalent_restricted(c, a, *b), DifferentUnderlying);
}

TEST_CASE("the obstruction representative is a 1-cocycle whose class ignores coboundary shifts") {
  std::mt19937_64 rng(71);
  for (const auto& e : catalog::entries()) {
    CAPTURE(e.id);
    LieComplex c(e.g, e.m);
    auto h1 = cohomology::lie_cohomology(c, 1);
    auto h2 = cohomology::lie_cohomology(c, 2);
    for (const auto& f : h2.representatives())
      for (std::size_t x = 0; x < e.g.even_dim(); ++x) {
        Vec k = phi_representative(c, f, x);
        CHECK(gflin::is_zero(c.differential(1).apply(k)));
        Vec shifted = phi_representative(c, e.g.field.added(f, random_coboundary(c, 2, rng)), x);
        CHECK(h1.h.coordinates(shifted) == h1.h.coordinates(k));
      }
  }
}
