#pragma once

#include <optional>
#include <vector>

#include "supercoh/cohomology.hpp"

namespace supercoh::extensions {

using cohomology::BarComplex;
using cohomology::LieComplex;
using gflin::Field;
using gflin::Matrix;
using gflin::Scalar;
using gflin::Subspace;
using gflin::Vec;
using super::HomModule;
using super::LieSuperAlgebra;
using super::Representation;
using super::SumLayout;
using super::ValidationReport;

/// Module extension 0 -> K -> E -> N -> 0 on coordinates K ⊕ N.
struct ModuleExtension {
  Representation k;
  Representation n;
  Representation e;
  SumLayout layout;  // first = K, second = N
  Matrix embed;      // K -> E
  Matrix project;    // E -> N
};

/// x.(c + d) = x.c + x.d + f(x)(d) for a 1-cocycle f with values in Hom(N, K).
/// `c` is the cochain complex of g with coefficients in hom.module.
ModuleExtension module_ext_from_1cocycle(const LieComplex& c, const HomModule& hom, const Representation& k,
                                         const Representation& n, const Vec& f);
/// f(x)(a) = x.s(a) - s(x.a) for the coordinate section s(a) = (0, a).
Vec cocycle_from_module_ext(const LieComplex& c, const HomModule& hom, const ModuleExtension& ext);
ValidationReport validate_module_extension(const LieSuperAlgebra& g, const ModuleExtension& ext, bool restricted);

/// Extension 0 -> M -> E -> g -> 0 on coordinates g ⊕ M (layout from direct_sum).
/// When `restricted` is set, e.pmap is a p-map on E; otherwise it is unused.
struct Extension {
  LieSuperAlgebra g;
  Representation m;
  SumLayout layout;  // first = g, second = M
  LieSuperAlgebra e;
  bool restricted = false;

  Vec section(std::size_t i) const { return layout.inject_first(g.basis(i)); }
  Vec from_m(const Vec& v) const { return layout.inject_second(v); }
};

// Semidirect product with (x,0)^[p] = (x^[p], 0) and M strongly abelian.
Extension trivial_extension(const LieSuperAlgebra& g, const Representation& m);

/// [(x1,m1),(x2,m2)] = ([x1,x2], x1.m2 - (-1)^{|x1||x2|} x2.m1 + f(x1,x2)).
Extension algebra_ext_from_2cocycle(const LieComplex& c, const Vec& f);
/// M-component of [s(x1), s(x2)] - s([x1,x2]) for the coordinate section s.
Vec cocycle_from_algebra_ext(const LieComplex& c, const Extension& ext);

/// Axioms of E, the projection and (when restricted) the p-map, M as an
/// abelian ideal inducing the given action; `strongly_abelian` adds m^[p] = 0.
ValidationReport validate_extension(const Extension& ext, bool strongly_abelian = true);

/// e^(p) = e^[p] - g(phi(e)) for g given by its values on the even basis of g;
/// values must lie in M_0^g.
Extension twist_pmap(const Extension& ext, const std::vector<Vec>& gmap);
/// Removes the p-map of M (extended by zero on the g-part of the basis).
Extension strongly_abelianize(const Extension& ext);

enum class FxpReading { second_slot, first_slot };

/// k_x + f_{x^[p]} as a 1-cochain for the even basis element x_index:
/// x1 -> sum_i ρ(x)^i f(x, (ad x)^{p-1-i} x1) + f(x1, x^[p]).
/// first_slot uses f(x^[p], x1) instead.
Vec phi_representative(const LieComplex& c, const Vec& f, std::size_t x_index,
                       FxpReading reading = FxpReading::second_slot);

/// For each even basis x, an even ρ(x) in M with x1.ρ(x) = -(k_x + f_{x^[p]})(x1)
/// for all x1; nullopt if some system has no solution.
std::optional<std::vector<Vec>> solve_sigma(const LieComplex& c, const Vec& f);
/// E_f with (x,0)^[p] = (x^[p], ρ(x)) and (0,m)^[p] = 0.
Extension restricted_structure_from_sigma(const LieComplex& c, const Vec& f, const std::vector<Vec>& sigma);
/// Both steps; throws NoSolution when the obstruction class is nonzero.
Extension restricted_ext_from_2cocycle(const LieComplex& c, const Vec& f);

/// Bracket from the antisymmetrization of c on g and (x,0)^[p] = (x^[p], c(x^{p-1}, x)).
Extension restricted_ext_from_assoc_2cocycle(const BarComplex& bar, const LieComplex& lie, const Vec& c);
/// c(u, v) = γ(ψ'(u)ψ'(v) - ψ'(uv)) on the augmentation ideal basis, with
/// ψ(x_i) = (x_i, perturbation[i]) (zero perturbation when empty).
Vec assoc_2cocycle_from_restricted_ext(const BarComplex& bar, const Extension& ext,
                                       const std::vector<Vec>& perturbation = {});

/// α(x, m) = (x, m + h(x)) as a matrix on E coordinates.
Matrix automorphism_from_1cocycle(const LieComplex& c, const Extension& ext, const Vec& h);
// Same matrix without the cocycle check.
Matrix shift_by_1cochain(const LieComplex& c, const Extension& ext, const Vec& h);
bool is_lie_homomorphism(const LieSuperAlgebra& src, const LieSuperAlgebra& dst, const Matrix& alpha);
bool preserves_pmap(const LieSuperAlgebra& src, const LieSuperAlgebra& dst, const Matrix& alpha);
// α fixes M pointwise and commutes with the projections to g.
bool is_extension_morphism(const Extension& src, const Extension& dst, const Matrix& alpha);

/// Ψh(x) = ρ(x)^{p-1} h(x) - h(x^[p]) on the even basis of g.
std::vector<Vec> psi_values(const LieComplex& c, const Vec& h);
/// Image of Ψ on Z^1 inside S(g_0, M_0^g) coordinates.
Subspace psi_image(const LieComplex& c);

/// Decides equivalence of two restricted structures on the same underlying
/// extension; throws DifferentUnderlying if the brackets differ.
bool are_equivalent_restricted(const LieComplex& c, const Extension& e1, const Extension& e2);

}  // namespace supercoh::extensions
