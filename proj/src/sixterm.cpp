#include "supercoh/sixterm.hpp"

#include <chrono>

namespace supercoh::sixterm {

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
auto timed(std::map<std::string, double>& sink, const std::string& name, F&& fn) {
  auto start = Clock::now();
  auto result = fn();
  sink[name] += std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return result;
}

Representation coerce(const Representation& m) {
  Representation out = m;
  out.strongly_abelian_coerced = true;
  return out;
}

Matrix from_cols(const gflin::Field& f, std::size_t rows, const std::vector<Vec>& cols) {
  return Matrix::from_columns(f, rows, cols);
}

}  // namespace

SixTermData::SixTermData(const LieSuperAlgebra& g, const Representation& m)
    : lie_(g, coerce(m)),
      bar_(g, coerce(m)),
      timings_(),
      h1s_(timed(timings_, "restricted_cohomology", [&] { return cohomology::restricted_cohomology(bar_, 1); })),
      h1_(timed(timings_, "lie_cohomology", [&] { return cohomology::lie_cohomology(lie_, 1); })),
      h2s_(timed(timings_, "restricted_cohomology", [&] { return cohomology::restricted_cohomology(bar_, 2); })),
      h2_(timed(timings_, "lie_cohomology", [&] { return cohomology::lie_cohomology(lie_, 2); })),
      s1_(super::semilinear_space(g.even_dim(), super::invariants(g, m).even)) {}

Matrix map_i1(const SixTermData& d) {
  Matrix cmp = cohomology::comparison_matrix(d.bar(), d.lie(), 1);
  std::vector<Vec> cols;
  for (const auto& c : d.h1_star().representatives()) cols.push_back(d.h1().h.coordinates(cmp.apply(c)));
  return from_cols(d.lie().field(), d.h1().dim(), cols);
}

Matrix map_psibar(const SixTermData& d) {
  std::vector<Vec> cols;
  for (const auto& h : d.h1().representatives()) {
    auto co = d.s_invariants().coordinates(extensions::psi_values(d.lie(), h));
    if (!co) throw InvariantViolation("Psi of a 1-cocycle leaves M_0^g");
    cols.push_back(std::move(*co));
  }
  return from_cols(d.lie().field(), d.s_invariants().dim(), cols);
}

Matrix map_fg(const SixTermData& d) {
  const auto& s = d.s_invariants();
  extensions::Extension s0 = extensions::trivial_extension(d.lie().lie(), d.lie().module());
  std::vector<Vec> cols;
  for (std::size_t k = 0; k < s.dim(); ++k) {
    extensions::Extension twisted = extensions::twist_pmap(s0, s.basis_map(k));
    Vec c = extensions::assoc_2cocycle_from_restricted_ext(d.bar(), twisted);
    auto co = d.h2_star().h.try_coordinates(c);
    if (!co) throw InvariantViolation("associative cochain of a restricted extension is not a cocycle");
    cols.push_back(std::move(*co));
  }
  return from_cols(d.lie().field(), d.h2_star().dim(), cols);
}

Matrix map_pi(const SixTermData& d) {
  Matrix cmp = cohomology::comparison_matrix(d.bar(), d.lie(), 2);
  std::vector<Vec> cols;
  for (const auto& c : d.h2_star().representatives()) cols.push_back(d.h2().h.coordinates(cmp.apply(c)));
  return from_cols(d.lie().field(), d.h2().dim(), cols);
}

Matrix map_phi(const SixTermData& d, const std::vector<Vec>& reps, extensions::FxpReading reading) {
  const auto& lie = d.lie();
  const std::size_t n0 = lie.lie().even_dim();
  const std::size_t h1 = d.h1().dim();
  std::vector<Vec> cols;
  for (const auto& f : reps) {
    Vec col(n0 * h1, 0);
    for (std::size_t i = 0; i < n0; ++i) {
      Vec k = extensions::phi_representative(lie, f, i, reading);
      if (!gflin::is_zero(lie.differential(1).apply(k)))
        throw NotACocycle("k_x + f_{x^[p]} is not a 1-cocycle for x = " + lie.lie().space.name(i));
      Vec co = d.h1().h.coordinates(k);
      for (std::size_t j = 0; j < h1; ++j) col[i * h1 + j] = co[j];
    }
    cols.push_back(std::move(col));
  }
  return from_cols(lie.field(), n0 * h1, cols);
}

Matrix map_phi(const SixTermData& d, extensions::FxpReading reading) {
  return map_phi(d, d.h2().representatives(), reading);
}

Verdict exact_at(const std::string& name, const Matrix& prev, const Matrix& next) {
  Verdict v{name, true, std::nullopt, {}};
  Subspace ker = gflin::nullspace(next);
  Subspace im = gflin::image(prev);
  if (gflin::equals(ker, im)) return v;
  v.ok = false;
  for (const auto& w : ker.vectors())
    if (!im.contains(w)) {
      v.witness = w;
      v.detail = "kernel element outside the image";
      return v;
    }
  for (const auto& w : im.vectors())
    if (!ker.contains(w)) {
      v.witness = w;
      v.detail = "image element outside the kernel";
      return v;
    }
  return v;
}

bool SixTermReport::all_exact() const {
  for (const auto& v : exactness)
    if (!v.ok) return false;
  for (const auto& v : composites)
    if (!v.ok) return false;
  return euler_ok;
}

SixTermReport build_six_term(const LieSuperAlgebra& g, const Representation& m, const std::string& algebra_id,
                             const std::string& module_id) {
  SixTermReport r;
  r.algebra_id = algebra_id;
  r.module_id = module_id;
  r.p = g.field.p();
  SixTermData d(g, m);
  r.module_coerced = d.lie().module().strongly_abelian_coerced;
  r.timings = d.timings();
  r.dims = {d.h1_star().dim(), d.h1().dim(), d.s_invariants().dim(), d.h2_star().dim(), d.h2().dim(), d.s_h1_dim()};

  r.i1 = timed(r.timings, "map_i1", [&] { return map_i1(d); });
  r.psibar = timed(r.timings, "map_psibar", [&] { return map_psibar(d); });
  r.fg = timed(r.timings, "map_fg", [&] { return map_fg(d); });
  r.pi = timed(r.timings, "map_pi", [&] { return map_pi(d); });
  r.phi = timed(r.timings, "map_phi", [&] { return map_phi(d); });

  Verdict inj{"i1_injective", gflin::rank(r.i1) == r.dims[0], std::nullopt, {}};
  if (!inj.ok) {
    inj.witness = gflin::nullspace(r.i1).vector(0);
    inj.detail = "nonzero restricted class restricts to a coboundary";
  }
  r.exactness.push_back(inj);
  r.exactness.push_back(exact_at("exact_at_H1", r.i1, r.psibar));
  r.exactness.push_back(exact_at("exact_at_S", r.psibar, r.fg));
  r.exactness.push_back(exact_at("exact_at_H2s", r.fg, r.pi));
  r.exactness.push_back(exact_at("exact_at_H2", r.pi, r.phi));

  auto composite = [&](const std::string& name, const Matrix& a, const Matrix& b) {
    bool ok = (b * a).is_zero();
    r.composites.push_back({name, ok, std::nullopt, ok ? "" : "composite is nonzero"});
  };
  composite("psibar_after_i1", r.i1, r.psibar);
  composite("fg_after_psibar", r.psibar, r.fg);
  composite("pi_after_fg", r.fg, r.pi);
  composite("phi_after_pi", r.pi, r.phi);

  long long alt = static_cast<long long>(r.dims[0]) - static_cast<long long>(r.dims[1]) +
                  static_cast<long long>(r.dims[2]) - static_cast<long long>(r.dims[3]) +
                  static_cast<long long>(r.dims[4]);
  r.euler_ok = alt == static_cast<long long>(gflin::rank(r.phi));

  for (unsigned n = 0; n <= 3; ++n) {
    r.sizes["lie_C" + std::to_string(n)] = d.lie().dim(n);
    r.sizes["bar_C" + std::to_string(n)] = d.bar().dim(n);
  }
  for (unsigned n = 0; n < 3; ++n) {
    r.sizes["lie_d" + std::to_string(n) + "_nnz"] = d.lie().differential(n).nnz();
    r.sizes["bar_d" + std::to_string(n) + "_nnz"] = d.bar().differential(n).nnz();
  }
  r.sizes["u_dim"] = d.bar().algebra().dim();
  return r;
}

}  // namespace supercoh::sixterm
