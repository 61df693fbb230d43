#include "supercoh/extensions.hpp"

#include <string>

namespace supercoh::extensions {

namespace {

void require_cocycle(const LieComplex& c, unsigned n, const Vec& f, const char* what) {
  if (f.size() != c.dim(n)) throw UsageError(std::string(what) + ": cochain has the wrong length");
  if (!gflin::is_zero(c.differential(n).apply(f))) throw NotACocycle(std::string(what) + ": argument is not a cocycle");
}

Matrix columns_to_matrix(const Field& f, std::size_t rows, const std::vector<Vec>& cols) {
  return Matrix::from_columns(f, rows, cols);
}

}  // namespace

// ---------------------------------------------------------------------------
// Module extensions

ModuleExtension module_ext_from_1cocycle(const LieComplex& c, const HomModule& hom, const Representation& k,
                                         const Representation& n, const Vec& f) {
  require_cocycle(c, 1, f, "module_ext_from_1cocycle");
  const LieSuperAlgebra& g = c.lie();
  const Field& fld = g.field;
  SumLayout layout = super::direct_sum(k.target, n.target, "N.");
  const std::size_t dim = layout.space.dim();
  Representation e;
  e.target = layout.space;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    Matrix block = hom.to_matrix(c.eval(1, f, {i}), fld);
    std::vector<Vec> cols(dim);
    for (std::size_t a = 0; a < k.dim(); ++a) cols[layout.first[a]] = layout.inject_first(k.rho[i].column(a));
    for (std::size_t b = 0; b < n.dim(); ++b) {
      Vec col = layout.inject_second(n.rho[i].column(b));
      fld.axpy(col, 1, layout.inject_first(block.column(b)));
      cols[layout.second[b]] = std::move(col);
    }
    e.rho.push_back(columns_to_matrix(fld, dim, cols));
  }
  std::vector<Vec> emb;
  for (std::size_t a = 0; a < k.dim(); ++a) emb.push_back(layout.inject_first(gflin::unit_vector(k.dim(), a)));
  std::vector<Vec> proj_rows;
  for (std::size_t b = 0; b < n.dim(); ++b) proj_rows.push_back(gflin::unit_vector(dim, layout.second[b]));
  return ModuleExtension{k, n, std::move(e), layout, columns_to_matrix(fld, dim, emb),
                         Matrix::from_rows(fld, dim, proj_rows)};
}

Vec cocycle_from_module_ext(const LieComplex& c, const HomModule& hom, const ModuleExtension& ext) {
  const Field& fld = c.field();
  return c.from_function(1, [&](const std::vector<std::size_t>& args) {
    const Matrix& r = ext.e.rho.at(args[0]);
    Matrix block(fld, hom.k_dim, hom.n_dim);
    for (std::size_t a = 0; a < hom.k_dim; ++a)
      for (std::size_t b = 0; b < hom.n_dim; ++b)
        block.set(a, b, r.at(ext.layout.first[a], ext.layout.second[b]));
    return hom.from_matrix(block);
  });
}

ValidationReport validate_module_extension(const LieSuperAlgebra& g, const ModuleExtension& ext, bool restricted) {
  ValidationReport rep = super::validate_module(g, ext.e, restricted);
  if (!(ext.project * ext.embed).is_zero()) rep.add("exactness", {}, "projection does not kill the submodule");
  if (gflin::rank(ext.embed) != ext.k.dim()) rep.add("exactness", {}, "embedding is not injective");
  if (gflin::rank(ext.project) != ext.n.dim()) rep.add("exactness", {}, "projection is not surjective");
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (ext.project * ext.e.rho[i] != ext.n.rho[i] * ext.project) rep.add("module_map", {i}, "projection is not g-linear");
    if (ext.e.rho[i] * ext.embed != ext.embed * ext.k.rho[i]) rep.add("module_map", {i}, "embedding is not g-linear");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Algebra extensions

Extension trivial_extension(const LieSuperAlgebra& g, const Representation& m) {
  SumLayout layout = super::direct_sum(g.space, m.target, "M.");
  return Extension{g, m, layout, super::semidirect(g, m), true};
}

Extension algebra_ext_from_2cocycle(const LieComplex& c, const Vec& f) {
  require_cocycle(c, 2, f, "algebra_ext_from_2cocycle");
  const LieSuperAlgebra& g = c.lie();
  const Representation& m = c.module();
  const Field& fld = g.field;
  SumLayout layout = super::direct_sum(g.space, m.target, "M.");
  LieSuperAlgebra e(fld, layout.space);
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i; j < g.dim(); ++j) {
      Vec v = layout.inject_first(g.bracket[i][j]);
      fld.axpy(v, 1, layout.inject_second(c.eval(2, f, {i, j})));
      e.set_bracket(layout.first[i], layout.first[j], v);
    }
    for (std::size_t k = 0; k < m.dim(); ++k)
      e.set_bracket(layout.first[i], layout.second[k], layout.inject_second(m.rho[i].column(k)));
  }
  for (std::size_t i = 0; i < g.even_dim(); ++i) e.pmap[layout.first[i]] = layout.inject_first(g.pmap[i]);
  return Extension{g, m, layout, std::move(e), false};
}

Vec cocycle_from_algebra_ext(const LieComplex& c, const Extension& ext) {
  return c.from_function(2, [&](const std::vector<std::size_t>& args) {
    Vec br = ext.e.bracket_of(ext.section(args[0]), ext.section(args[1]));
    return ext.layout.project_second(br);
  });
}

ValidationReport validate_extension(const Extension& ext, bool strongly_abelian) {
  const LieSuperAlgebra& g = ext.g;
  const LieSuperAlgebra& e = ext.e;
  const auto& lay = ext.layout;
  ValidationReport rep = super::validate_lie_super(e);
  if (ext.restricted && rep.ok()) rep.append(super::validate_pmap(e));
  for (std::size_t a = 0; a < e.dim(); ++a)
    for (std::size_t b = 0; b < e.dim(); ++b) {
      Vec lhs = lay.project_first(e.bracket[a][b]);
      Vec rhs = g.bracket_of(lay.project_first(e.basis(a)), lay.project_first(e.basis(b)));
      if (lhs != rhs) rep.add("projection", {a, b}, "projection to g does not preserve the bracket");
    }
  for (std::size_t c = 0; c < ext.m.dim(); ++c) {
    for (std::size_t d = 0; d < ext.m.dim(); ++d)
      if (!gflin::is_zero(e.bracket[lay.second[c]][lay.second[d]])) rep.add("abelian_ideal", {c, d}, "M is not abelian");
    for (std::size_t i = 0; i < g.dim(); ++i)
      if (e.bracket[lay.first[i]][lay.second[c]] != lay.inject_second(ext.m.rho[i].column(c)))
        rep.add("induced_action", {i, c}, "[s(x), m] differs from x.m");
  }
  if (ext.restricted) {
    for (std::size_t i = 0; i < g.even_dim(); ++i)
      if (lay.project_first(e.pmap[lay.first[i]]) != g.pmap[i])
        rep.add("restricted_projection", {i}, "projection does not commute with the p-maps");
    for (std::size_t c = 0; c < ext.m.target.even_dim(); ++c) {
      const Vec& mp = e.pmap[lay.second[c]];
      if (!gflin::is_zero(lay.project_first(mp)))
        rep.add("restricted_projection", {c}, "p-map of M leaves M");
      if (strongly_abelian && !gflin::is_zero(mp)) rep.add("strongly_abelian", {c}, "m^[p] is not zero");
    }
  }
  return rep;
}

Extension twist_pmap(const Extension& ext, const std::vector<Vec>& gmap) {
  if (gmap.size() != ext.g.even_dim()) throw UsageError("twist_pmap: one value per even basis element is required");
  Subspace inv = super::invariants(ext.g, ext.m).even;
  Extension out = ext;
  const Field& f = ext.g.field;
  for (std::size_t i = 0; i < gmap.size(); ++i) {
    if (!inv.contains(gmap[i])) throw ValueNotInvariant("twist_pmap: value on " + ext.g.space.name(i) + " is not in M_0^g");
    Vec& slot = out.e.pmap[ext.layout.first[i]];
    slot = f.subtracted(slot, ext.layout.inject_second(gmap[i]));
  }
  return out;
}

Extension strongly_abelianize(const Extension& ext) {
  Extension out = ext;
  for (std::size_t c = 0; c < ext.m.target.even_dim(); ++c)
    out.e.pmap[ext.layout.second[c]] = out.e.zero();
  return out;
}

// ---------------------------------------------------------------------------
// Restricted structures from Lie 2-cocycles

Vec phi_representative(const LieComplex& c, const Vec& f, std::size_t x_index, FxpReading reading) {
  const LieSuperAlgebra& g = c.lie();
  const Field& fld = g.field;
  const unsigned p = fld.p();
  if (x_index >= g.even_dim()) throw UsageError("phi_representative: x must be an even basis element");
  Vec x = g.basis(x_index);
  Vec xp = super::pmap_apply(g, x);
  Matrix ad = g.ad(x);
  const Matrix& rho = c.module().rho[x_index];
  std::vector<Matrix> rho_pow{Matrix::identity(fld, c.module().dim())};
  for (unsigned i = 1; i < p; ++i) rho_pow.push_back(rho_pow.back() * rho);
  return c.from_function(1, [&](const std::vector<std::size_t>& args) {
    // ad(x)^k x1 for k = 0..p-1
    std::vector<Vec> iter{g.basis(args[0])};
    for (unsigned k = 1; k < p; ++k) iter.push_back(ad.apply(iter.back()));
    Vec out(c.module().dim(), 0);
    for (unsigned i = 0; i < p; ++i) fld.axpy(out, 1, rho_pow[i].apply(c.eval2(f, x, iter[p - 1 - i])));
    Vec tail = reading == FxpReading::second_slot ? c.eval2(f, g.basis(args[0]), xp) : c.eval2(f, xp, g.basis(args[0]));
    fld.axpy(out, 1, tail);
    return out;
  });
}

std::optional<std::vector<Vec>> solve_sigma(const LieComplex& c, const Vec& f) {
  require_cocycle(c, 2, f, "solve_sigma");
  const LieSuperAlgebra& g = c.lie();
  const Representation& m = c.module();
  const Field& fld = g.field;
  const std::size_t m0 = m.target.even_dim();
  // rows (x1, m), columns even coordinates of M
  Matrix a(fld, g.dim() * m.dim(), m0);
  for (std::size_t j = 0; j < g.dim(); ++j)
    for (std::size_t r = 0; r < m.dim(); ++r)
      for (std::size_t k = 0; k < m0; ++k) a.set(j * m.dim() + r, k, m.rho[j].at(r, k));
  std::vector<Vec> sigma;
  for (std::size_t i = 0; i < g.even_dim(); ++i) {
    Vec rep = phi_representative(c, f, i);
    Vec rhs(g.dim() * m.dim(), 0);
    for (std::size_t j = 0; j < g.dim(); ++j) {
      Vec v = c.eval(1, rep, {j});
      for (std::size_t r = 0; r < m.dim(); ++r) rhs[j * m.dim() + r] = fld.neg(v[r]);
    }
    auto sol = gflin::solve(a, rhs);
    if (!sol) return std::nullopt;
    Vec full(m.dim(), 0);
    for (std::size_t k = 0; k < m0; ++k) full[k] = (*sol)[k];
    sigma.push_back(std::move(full));
  }
  return sigma;
}

Extension restricted_structure_from_sigma(const LieComplex& c, const Vec& f, const std::vector<Vec>& sigma) {
  Extension ext = algebra_ext_from_2cocycle(c, f);
  const Field& fld = c.field();
  if (sigma.size() != ext.g.even_dim()) throw UsageError("restricted_structure_from_sigma: one value per even basis element");
  for (std::size_t i = 0; i < ext.g.even_dim(); ++i) {
    Vec v = ext.layout.inject_first(ext.g.pmap[i]);
    fld.axpy(v, 1, ext.layout.inject_second(sigma[i]));
    ext.e.pmap[ext.layout.first[i]] = std::move(v);
  }
  for (std::size_t k = 0; k < ext.m.target.even_dim(); ++k) ext.e.pmap[ext.layout.second[k]] = ext.e.zero();
  ext.restricted = true;
  return ext;
}

Extension restricted_ext_from_2cocycle(const LieComplex& c, const Vec& f) {
  auto sigma = solve_sigma(c, f);
  if (!sigma) throw NoSolution("the cocycle admits no compatible p-map: its obstruction class is nonzero");
  return restricted_structure_from_sigma(c, f, *sigma);
}

// ---------------------------------------------------------------------------
// Restricted extensions and associative 2-cocycles

Extension restricted_ext_from_assoc_2cocycle(const BarComplex& bar, const LieComplex& lie, const Vec& c) {
  if (c.size() != bar.dim(2)) throw UsageError("restricted_ext_from_assoc_2cocycle: cochain has the wrong length");
  if (!gflin::is_zero(bar.differential(2).apply(c)))
    throw NotACocycle("restricted_ext_from_assoc_2cocycle: argument is not a cocycle");
  Vec f = cohomology::comparison_matrix(bar, lie, 2).apply(c);
  Extension ext = algebra_ext_from_2cocycle(lie, f);
  const auto& u = bar.algebra();
  const Field& fld = lie.field();
  const unsigned p = fld.p();
  for (std::size_t i = 0; i < ext.g.even_dim(); ++i) {
    envelope::Monomial mono{std::vector<std::uint16_t>(u.num_vars(), 0)};
    mono.exps[u.var_of_basis(i)] = static_cast<std::uint16_t>(p - 1);
    auto pos = static_cast<std::uint32_t>(u.index_of(mono) - 1);
    Vec v = ext.layout.inject_first(ext.g.pmap[i]);
    fld.axpy(v, 1, ext.layout.inject_second(bar.eval(2, c, {pos, bar.generator_position(i)})));
    ext.e.pmap[ext.layout.first[i]] = std::move(v);
  }
  for (std::size_t k = 0; k < ext.m.target.even_dim(); ++k) ext.e.pmap[ext.layout.second[k]] = ext.e.zero();
  ext.restricted = true;
  return ext;
}

Vec assoc_2cocycle_from_restricted_ext(const BarComplex& bar, const Extension& ext, const std::vector<Vec>& perturbation) {
  if (!ext.restricted) throw UsageError("assoc_2cocycle_from_restricted_ext: extension has no p-map");
  const auto& ug = bar.algebra();
  const Field& fld = ext.g.field;
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < ext.g.dim(); ++i) order.push_back(ext.layout.first[i]);
  for (std::size_t k = 0; k < ext.m.dim(); ++k) order.push_back(ext.layout.second[k]);
  envelope::UAlgebra ue(ext.e, envelope::Mode::restricted, 0, order);

  std::vector<Vec> psi;
  for (std::size_t i = 0; i < ext.g.dim(); ++i) {
    Vec v = ext.section(i);
    if (!perturbation.empty()) fld.axpy(v, 1, ext.from_m(perturbation.at(i)));
    psi.push_back(std::move(v));
  }
  Matrix psi_prime = envelope::linear_section_extend(ug, ue, psi);
  std::vector<envelope::UElement> images;
  for (std::size_t k = 0; k < ug.dim(); ++k) images.push_back(ue.from_coords(psi_prime.column(k)));

  envelope::IdealSplit split{ext.layout.first_of, ext.layout.second_of};
  return bar.from_function(2, [&](const std::vector<std::uint32_t>& args) {
    envelope::UElement w = ue.multiply(images[args[0] + 1], images[args[1] + 1]);
    for (const auto& [idx, coef] : ug.basis_product(args[0] + 1, args[1] + 1))
      w = ue.sub(w, ue.scale(images[idx], coef));
    return envelope::gamma_map(ue, split, ext.m, w);
  });
}

// ---------------------------------------------------------------------------
// Automorphisms and equivalence

Matrix shift_by_1cochain(const LieComplex& c, const Extension& ext, const Vec& h) {
  const Field& fld = c.field();
  std::vector<Vec> cols(ext.e.dim());
  for (std::size_t i = 0; i < ext.g.dim(); ++i) {
    Vec v = ext.section(i);
    fld.axpy(v, 1, ext.from_m(c.eval(1, h, {i})));
    cols[ext.layout.first[i]] = std::move(v);
  }
  for (std::size_t k = 0; k < ext.m.dim(); ++k) cols[ext.layout.second[k]] = ext.e.basis(ext.layout.second[k]);
  return Matrix::from_columns(fld, ext.e.dim(), cols);
}

Matrix automorphism_from_1cocycle(const LieComplex& c, const Extension& ext, const Vec& h) {
  require_cocycle(c, 1, h, "automorphism_from_1cocycle");
  return shift_by_1cochain(c, ext, h);
}

bool is_lie_homomorphism(const LieSuperAlgebra& src, const LieSuperAlgebra& dst, const Matrix& alpha) {
  for (std::size_t a = 0; a < src.dim(); ++a)
    for (std::size_t b = a; b < src.dim(); ++b)
      if (alpha.apply(src.bracket[a][b]) != dst.bracket_of(alpha.column(a), alpha.column(b))) return false;
  return true;
}

bool preserves_pmap(const LieSuperAlgebra& src, const LieSuperAlgebra& dst, const Matrix& alpha) {
  for (std::size_t a = 0; a < src.even_dim(); ++a)
    if (alpha.apply(src.pmap[a]) != super::pmap_apply(dst, alpha.column(a))) return false;
  return true;
}

bool is_extension_morphism(const Extension& src, const Extension& dst, const Matrix& alpha) {
  for (std::size_t k = 0; k < src.m.dim(); ++k) {
    Vec v = src.from_m(gflin::unit_vector(src.m.dim(), k));
    if (alpha.apply(v) != dst.from_m(gflin::unit_vector(dst.m.dim(), k))) return false;
  }
  for (std::size_t a = 0; a < src.e.dim(); ++a)
    if (dst.layout.project_first(alpha.column(a)) != src.layout.project_first(src.e.basis(a))) return false;
  return true;
}

std::vector<Vec> psi_values(const LieComplex& c, const Vec& h) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < c.lie().even_dim(); ++i)
    out.push_back(cohomology::restrictedness_defect(c, c.lie().basis(i)).apply(h));
  return out;
}

Subspace psi_image(const LieComplex& c) {
  auto s = super::semilinear_space(c.lie().even_dim(), super::invariants(c.lie(), c.module()).even);
  Subspace z = gflin::nullspace(c.differential(1));
  std::vector<Vec> coords;
  for (const auto& h : z.vectors()) {
    auto co = s.coordinates(psi_values(c, h));
    if (!co) throw InvariantViolation("Psi of a 1-cocycle leaves M_0^g");
    coords.push_back(std::move(*co));
  }
  return Subspace::span(c.field(), s.dim(), coords);
}

bool are_equivalent_restricted(const LieComplex& c, const Extension& e1, const Extension& e2) {
  if (e1.e.space != e2.e.space || e1.e.bracket != e2.e.bracket)
    throw DifferentUnderlying("extensions have different brackets");
  const Field& fld = c.field();
  const auto& lay = e1.layout;
  for (std::size_t k = 0; k < e1.m.target.even_dim(); ++k)
    if (e1.e.pmap[lay.second[k]] != e2.e.pmap[lay.second[k]]) return false;
  std::vector<Vec> gvals;
  for (std::size_t i = 0; i < e1.g.even_dim(); ++i) {
    Vec diff = fld.subtracted(e1.e.pmap[lay.first[i]], e2.e.pmap[lay.first[i]]);
    if (!gflin::is_zero(lay.project_first(diff))) return false;
    gvals.push_back(lay.project_second(diff));
  }
  auto s = super::semilinear_space(c.lie().even_dim(), super::invariants(c.lie(), c.module()).even);
  auto coords = s.coordinates(gvals);
  if (!coords) return false;
  return psi_image(c).contains(*coords);
}

}  // namespace supercoh::extensions
