#include "supercoh/selftest.hpp"

#include <sstream>

namespace supercoh::selftest {

using gflin::Field;
using gflin::Matrix;
using gflin::Vec;

void SuiteResult::fail(std::string what) {
  ok = false;
  if (failures.size() < 20) failures.push_back(std::move(what));
}

Vec random_vec(const Field& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, f.p() - 1);
  Vec v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

namespace {

Vec random_parity_vec(const Field& f, const super::SuperSpace& s, unsigned parity, std::mt19937_64& rng) {
  Vec v = random_vec(f, s.dim(), rng);
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (s.parity(i) != parity) v[i] = 0;
  return v;
}

Representation direct_sum(const LieSuperAlgebra& g, const Representation& a, const Representation& b) {
  super::SumLayout lay = super::direct_sum(a.target, b.target, "b.");
  Representation out;
  out.target = lay.space;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    Matrix r(g.field, lay.space.dim(), lay.space.dim());
    for (std::size_t c = 0; c < a.dim(); ++c)
      for (std::size_t d = 0; d < a.dim(); ++d) r.set(lay.first[c], lay.first[d], a.rho[i].at(c, d));
    for (std::size_t c = 0; c < b.dim(); ++c)
      for (std::size_t d = 0; d < b.dim(); ++d) r.set(lay.second[c], lay.second[d], b.rho[i].at(c, d));
    out.rho.push_back(std::move(r));
  }
  return out;
}

Representation conjugate(const LieSuperAlgebra& g, const Representation& m, std::mt19937_64& rng) {
  const Field& f = g.field;
  const std::size_t n = m.dim();
  Matrix p(f, n, n);
  do {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        p.set(r, c, m.target.parity(r) == m.target.parity(c) ? random_vec(f, 1, rng)[0] : 0);
  } while (gflin::rank(p) < n);
  std::vector<Vec> inv_cols;
  for (std::size_t j = 0; j < n; ++j) inv_cols.push_back(*gflin::solve(p, gflin::unit_vector(n, j)));
  Matrix pinv = Matrix::from_columns(f, n, inv_cols);
  Representation out = m;
  for (auto& r : out.rho) r = p * r * pinv;
  return out;
}

bool same_algebra(const LieSuperAlgebra& a, const LieSuperAlgebra& b) {
  return a.field == b.field && a.space == b.space && a.bracket == b.bracket && a.pmap == b.pmap;
}

std::string algebra_id(const catalog::Entry& e) { return e.id; }

}  // namespace

Representation random_module(const LieSuperAlgebra& g, std::mt19937_64& rng, std::size_t max_dim) {
  std::vector<Representation> pool{super::trivial_module(g, 1, 0), super::trivial_module(g, 0, 1)};
  if (g.dim() <= max_dim) {
    pool.push_back(super::adjoint_module(g));
    pool.push_back(super::dual_module(g, super::adjoint_module(g)));
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  Representation m = pool[pick(rng)];
  Representation extra = pool[pick(rng)];
  if (m.dim() + extra.dim() <= max_dim && rng() % 2 == 0) m = direct_sum(g, m, extra);
  return conjugate(g, m, rng);
}

std::vector<catalog::Entry> distinct_algebras(const std::vector<catalog::Entry>& all) {
  std::vector<catalog::Entry> out;
  for (const auto& e : all) {
    bool seen = false;
    for (const auto& o : out) seen = seen || same_algebra(o.g, e.g);
    if (!seen) out.push_back(e);
  }
  return out;
}

SuiteResult delta_squared(const std::vector<catalog::Entry>& all, std::uint64_t seed, unsigned fuzz) {
  SuiteResult r;
  r.name = "delta_squared";
  auto check = [&](const LieSuperAlgebra& g, const Representation& m, const std::string& label, bool with_bar) {
    cohomology::LieComplex lie(g, m);
    for (unsigned n = 0; n + 1 < 3; ++n) {
      ++r.checks;
      if (!(lie.differential(n + 1) * lie.differential(n)).is_zero())
        r.fail(label + ": Lie d" + std::to_string(n + 1) + " d" + std::to_string(n) + " != 0");
    }
    if (!with_bar) return;
    cohomology::BarComplex bar(g, m);
    for (unsigned n = 0; n + 1 < 3; ++n) {
      ++r.checks;
      if (!(bar.differential(n + 1) * bar.differential(n)).is_zero())
        r.fail(label + ": bar d" + std::to_string(n + 1) + " d" + std::to_string(n) + " != 0");
    }
  };
  for (const auto& e : all) check(e.g, e.m, e.id, true);

  std::mt19937_64 rng(seed);
  auto algebras = distinct_algebras(all);
  for (unsigned t = 0; t < fuzz; ++t) {
    const auto& base = algebras[rng() % algebras.size()];
    Representation m = random_module(base.g, rng, 3);
    LieSuperAlgebra e = super::semidirect(base.g, m);
    Representation n = random_module(e, rng, 2);
    double u_dim = 1;
    for (std::size_t i = 0; i < e.dim(); ++i) u_dim *= e.parity(i) ? 2.0 : static_cast<double>(e.field.p());
    std::ostringstream label;
    label << "fuzz " << t << " (" << algebra_id(base) << " x M" << m.dim() << ", N" << n.dim() << ")";
    check(e, n, label.str(), u_dim <= 81);
  }
  return r;
}

SuiteResult u_identities(const std::vector<catalog::Entry>& all, std::uint64_t seed, unsigned samples) {
  SuiteResult r;
  r.name = "u_identities";
  std::mt19937_64 rng(seed);
  for (const auto& e : distinct_algebras(all)) {
    if (e.g.even_dim() == 0) continue;
    envelope::UAlgebra u(e.g, envelope::Mode::restricted);
    auto rep = envelope::check_u_identities(u, samples, rng);
    r.checks += samples;
    for (const auto& v : rep.violations) r.fail(e.id + ": " + v.axiom + " " + v.detail);
  }
  return r;
}

SuiteResult h1_star_agreement(const std::vector<catalog::Entry>& all) {
  SuiteResult r;
  r.name = "h1_star_agreement";
  for (const auto& e : all) {
    cohomology::LieComplex lie(e.g, e.m);
    cohomology::BarComplex bar(e.g, e.m);
    std::size_t a = cohomology::h1_star_via_prop32(lie).dim();
    std::size_t b = cohomology::restricted_cohomology(bar, 1).dim();
    ++r.checks;
    if (a != b) r.fail(e.id + ": " + std::to_string(a) + " != " + std::to_string(b));
  }
  return r;
}

SuiteResult round_trips(const std::vector<catalog::Entry>& all, std::uint64_t seed) {
  SuiteResult r;
  r.name = "round_trips";
  std::mt19937_64 rng(seed);
  for (const auto& e : all) {
    const Field& f = e.g.field;
    const std::string id = e.id;
    sixterm::SixTermData d(e.g, e.m);
    const auto& lie = d.lie();
    const auto& bar = d.bar();

    // module extensions 0 -> M -> E -> k -> 0
    Representation k1 = super::trivial_module(e.g);
    super::HomModule hom = super::hom_module(e.g, k1, e.m);
    cohomology::LieComplex hc(e.g, hom.module);
    auto h1 = cohomology::lie_cohomology(hc, 1);
    for (std::size_t t = 0; t < 3; ++t) {
      Vec fz = h1.z().combination(random_vec(f, h1.z().dim(), rng));
      auto ext = extensions::module_ext_from_1cocycle(hc, hom, e.m, k1, fz);
      ++r.checks;
      if (!extensions::validate_module_extension(e.g, ext, false).ok()) r.fail(id + ": module extension invalid");
      Vec back = extensions::cocycle_from_module_ext(hc, hom, ext);
      ++r.checks;
      if (!h1.b().contains(f.subtracted(back, fz))) r.fail(id + ": module extension round trip");
    }
    auto h1r = cohomology::h1_star_via_prop32(hc);
    for (std::size_t t = 0; t < 3; ++t) {
      Vec fz = h1r.z().combination(random_vec(f, h1r.z().dim(), rng));
      auto ext = extensions::module_ext_from_1cocycle(hc, hom, e.m, k1, fz);
      ++r.checks;
      if (!extensions::validate_module_extension(e.g, ext, true).ok())
        r.fail(id + ": restricted 1-cocycle gives a non-restricted module extension");
    }

    // Lie algebra extensions from 2-cocycles
    const auto& z2 = d.h2().z();
    for (std::size_t t = 0; t < 3; ++t) {
      Vec fz = z2.combination(random_vec(f, z2.dim(), rng));
      auto ext = extensions::algebra_ext_from_2cocycle(lie, fz);
      ++r.checks;
      if (!extensions::validate_extension(ext, true).ok()) r.fail(id + ": algebra extension invalid");
      Vec back = extensions::cocycle_from_algebra_ext(lie, ext);
      ++r.checks;
      if (!d.h2().b().contains(f.subtracted(back, fz))) r.fail(id + ": algebra extension round trip");
      bool liftable = gflin::is_zero(sixterm::map_phi(d, {fz}).column(0));
      ++r.checks;
      try {
        auto rext = extensions::restricted_ext_from_2cocycle(lie, fz);
        if (!liftable) r.fail(id + ": restricted structure found for a class with Phi != 0");
        ++r.checks;
        if (!extensions::validate_extension(rext, true).ok()) r.fail(id + ": restricted structure on E_f invalid");
      } catch (const NoSolution&) {
        if (liftable) r.fail(id + ": no restricted structure for a class with Phi = 0");
      }
    }

    // restricted extensions from associative 2-cocycles
    const auto& z2s = d.h2_star().z();
    Matrix cmp = cohomology::comparison_matrix(bar, lie, 2);
    for (std::size_t t = 0; t < 3; ++t) {
      Vec c = z2s.combination(random_vec(f, z2s.dim(), rng));
      auto ext = extensions::restricted_ext_from_assoc_2cocycle(bar, lie, c);
      ++r.checks;
      if (!extensions::validate_extension(ext, true).ok()) {
        r.fail(id + ": restricted extension from an associative cocycle invalid");
        continue;
      }
      ++r.checks;
      if (!d.h2().b().contains(f.subtracted(extensions::cocycle_from_algebra_ext(lie, ext), cmp.apply(c))))
        r.fail(id + ": Lie cocycle of the restricted extension differs from the comparison map");
      std::vector<Vec> pert;
      for (std::size_t i = 0; i < e.g.dim(); ++i) pert.push_back(random_parity_vec(f, e.m.target, e.g.parity(i), rng));
      for (const auto& perturbation : {std::vector<Vec>{}, pert}) {
        Vec back = extensions::assoc_2cocycle_from_restricted_ext(bar, ext, perturbation);
        ++r.checks;
        if (!d.h2_star().b().contains(f.subtracted(back, c)))
          r.fail(id + (perturbation.empty() ? ": associative round trip" : ": associative round trip, perturbed section"));
      }
    }
  }
  return r;
}

SuiteResult phi_independence(const std::vector<catalog::Entry>& all, std::uint64_t seed, unsigned shifts) {
  SuiteResult r;
  r.name = "phi_independence";
  std::mt19937_64 rng(seed);
  for (const auto& e : all) {
    sixterm::SixTermData d(e.g, e.m);
    const Field& f = e.g.field;
    Matrix base = sixterm::map_phi(d);
    auto reps = d.h2().representatives();
    for (unsigned t = 0; t < shifts; ++t) {
      auto shifted = reps;
      for (auto& v : shifted)
        v = f.added(v, d.lie().differential(1).apply(random_vec(f, d.lie().dim(1), rng)));
      ++r.checks;
      if (!(sixterm::map_phi(d, shifted) == base)) r.fail(e.id + ": Phi changed under a coboundary shift");
    }
  }
  return r;
}

SuiteResult six_term(const std::vector<catalog::Entry>& all) {
  SuiteResult r;
  r.name = "six_term";
  for (const auto& e : all) {
    auto rep = sixterm::build_six_term(e.g, e.m, e.id, e.module_name);
    for (const auto* list : {&rep.exactness, &rep.composites})
      for (const auto& v : *list) {
        ++r.checks;
        if (!v.ok) r.fail(e.id + ": " + v.name);
      }
    ++r.checks;
    if (!rep.euler_ok) r.fail(e.id + ": alternating dimension count");
  }
  return r;
}

std::vector<SuiteResult> run_all(std::uint64_t seed) {
  auto all = catalog::entries();
  return {delta_squared(all, seed),       u_identities(all, seed), h1_star_agreement(all), round_trips(all, seed),
          phi_independence(all, seed),    six_term(all)};
}

}  // namespace supercoh::selftest
