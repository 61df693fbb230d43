#include "supercoh/super.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace supercoh::super {

// ---------------------------------------------------------------------------
// SuperSpace

SuperSpace::SuperSpace(std::vector<std::string> even, std::vector<std::string> odd) : n_even_(even.size()) {
  names_ = std::move(even);
  names_.insert(names_.end(), odd.begin(), odd.end());
  std::map<std::string, int> seen;
  for (const auto& n : names_)
    if (seen[n]++ > 0) throw UsageError("duplicate basis name '" + n + "'");
}

std::size_t SuperSpace::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return static_cast<std::size_t>(-1);
}

unsigned SuperSpace::parity_of(const Vec& v) const {
  bool has_even = false, has_odd = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    (parity(i) == 0 ? has_even : has_odd) = true;
  }
  if (has_even && has_odd) throw UsageError("vector is not homogeneous");
  return has_odd ? 1U : 0U;
}

bool SuperSpace::is_even_vector(const Vec& v) const {
  for (std::size_t i = n_even_; i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

SumLayout direct_sum(const SuperSpace& a, const SuperSpace& b, const std::string& second_prefix) {
  SumLayout out;
  std::vector<std::string> even, odd;
  for (std::size_t i = 0; i < a.even_dim(); ++i) even.push_back(a.name(i));
  for (std::size_t i = 0; i < b.even_dim(); ++i) even.push_back(second_prefix + b.name(i));
  for (std::size_t i = a.even_dim(); i < a.dim(); ++i) odd.push_back(a.name(i));
  for (std::size_t i = b.even_dim(); i < b.dim(); ++i) odd.push_back(second_prefix + b.name(i));
  out.space = SuperSpace(std::move(even), std::move(odd));
  std::size_t total = a.dim() + b.dim();
  out.first.resize(a.dim());
  out.second.resize(b.dim());
  out.first_of.assign(total, -1);
  out.second_of.assign(total, -1);
  for (std::size_t i = 0; i < a.dim(); ++i)
    out.first[i] = i < a.even_dim() ? i : b.even_dim() + i;
  for (std::size_t i = 0; i < b.dim(); ++i)
    out.second[i] = i < b.even_dim() ? a.even_dim() + i : a.dim() + i;
  for (std::size_t i = 0; i < a.dim(); ++i) out.first_of[out.first[i]] = static_cast<std::ptrdiff_t>(i);
  for (std::size_t i = 0; i < b.dim(); ++i) out.second_of[out.second[i]] = static_cast<std::ptrdiff_t>(i);
  return out;
}

Vec SumLayout::inject_first(const Vec& a) const {
  Vec out(space.dim(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[first.at(i)] = a[i];
  return out;
}

Vec SumLayout::inject_second(const Vec& b) const {
  Vec out(space.dim(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) out[second.at(i)] = b[i];
  return out;
}

Vec SumLayout::project_first(const Vec& s) const {
  Vec out(first.size(), 0);
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = s.at(first[i]);
  return out;
}

Vec SumLayout::project_second(const Vec& s) const {
  Vec out(second.size(), 0);
  for (std::size_t i = 0; i < second.size(); ++i) out[i] = s.at(second[i]);
  return out;
}

// ---------------------------------------------------------------------------
// LieSuperAlgebra

LieSuperAlgebra::LieSuperAlgebra(Field f, SuperSpace s)
    : field(f), space(std::move(s)),
      bracket(space.dim(), std::vector<Vec>(space.dim(), Vec(space.dim(), 0))),
      pmap(space.even_dim(), Vec(space.dim(), 0)) {}

void LieSuperAlgebra::set_bracket(std::size_t i, std::size_t j, const Vec& v) {
  if (v.size() != dim()) throw UsageError("set_bracket: vector length mismatch");
  bracket.at(i).at(j) = v;
  Scalar s = field.neg(field.sign(parity(i) * parity(j)));
  bracket.at(j).at(i) = field.scaled(v, s);
  if (i == j && field.scaled(v, s) != v)
    throw UsageError("set_bracket: [x,x] must vanish for even x");
}

Vec LieSuperAlgebra::bracket_of(const Vec& u, const Vec& v) const {
  Vec out(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (v[j] == 0) continue;
      field.axpy(out, field.mul(u[i], v[j]), bracket[i][j]);
    }
  }
  return out;
}

Matrix LieSuperAlgebra::ad(const Vec& v) const {
  std::vector<Vec> cols;
  cols.reserve(dim());
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(bracket_of(v, basis(j)));
  return Matrix::from_columns(field, dim(), cols);
}

// ---------------------------------------------------------------------------
// Validation

void ValidationReport::add(std::string axiom, std::vector<std::size_t> indices, std::string detail) {
  violations.push_back({std::move(axiom), std::move(indices), std::move(detail)});
}

void ValidationReport::append(const ValidationReport& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

ValidationReport validate_lie_super(const LieSuperAlgebra& g) {
  ValidationReport rep;
  const Field& f = g.field;
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (g.bracket[i][j][k] != 0 && g.parity(k) != ((g.parity(i) + g.parity(j)) & 1U))
          rep.add("parity", {i, j, k}, "[" + g.space.name(i) + "," + g.space.name(j) + "] has a component on " + g.space.name(k));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Scalar s = f.neg(f.sign(g.parity(i) * g.parity(j)));
      if (g.bracket[j][i] != f.scaled(g.bracket[i][j], s))
        rep.add("skew_symmetry", {i, j}, "[" + g.space.name(j) + "," + g.space.name(i) + "] != -(-1)^{|i||j|}[" + g.space.name(i) + "," + g.space.name(j) + "]");
    }

  // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec x = g.basis(i), y = g.basis(j), z = g.basis(k);
        Vec lhs = g.bracket_of(x, g.bracket_of(y, z));
        Vec rhs = g.bracket_of(g.bracket_of(x, y), z);
        f.axpy(rhs, f.sign(g.parity(i) * g.parity(j)), g.bracket_of(y, g.bracket_of(x, z)));
        if (lhs != rhs) rep.add("jacobi", {i, j, k});
      }

  // In characteristic 3 Jacobi does not force [y,[y,y]] = 0 for odd y. The
  // cubic form vanishes iff, for every multiset {i,j,k} of odd indices, the
  // sum of [y_a,[y_b,y_c]] over its distinct orderings is zero.
  if (f.p() == 3) {
    for (std::size_t i = g.even_dim(); i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        for (std::size_t k = j; k < n; ++k) {
          std::vector<std::size_t> idx{i, j, k};
          Vec sum = g.zero();
          do {
            f.axpy(sum, 1, g.bracket_of(g.basis(idx[0]), g.bracket[idx[1]][idx[2]]));
          } while (std::next_permutation(idx.begin(), idx.end()));
          if (!gflin::is_zero(sum)) rep.add("odd_cube", {i, j, k}, "[y,[y,y]] != 0 for some odd y");
        }
  }
  return rep;
}

std::vector<Vec> jacobson_si(const LieSuperAlgebra& g, const Vec& x, const Vec& y) {
  const Field& f = g.field;
  const unsigned p = f.p();
  if (!g.space.is_even_vector(x) || !g.space.is_even_vector(y)) throw UsageError("jacobson_si: arguments must be even");
  // poly[k] = coefficient of lambda^k
  std::vector<Vec> poly{x};
  for (unsigned step = 0; step + 1 < p; ++step) {
    std::vector<Vec> next(poly.size() + 1, g.zero());
    for (std::size_t k = 0; k < poly.size(); ++k) {
      f.axpy(next[k], 1, g.bracket_of(y, poly[k]));
      f.axpy(next[k + 1], 1, g.bracket_of(x, poly[k]));
    }
    poly = std::move(next);
  }
  std::vector<Vec> s;
  for (unsigned i = 1; i < p; ++i) s.push_back(f.scaled(poly[i - 1], f.inv(i)));
  return s;
}

Vec pmap_apply(const LieSuperAlgebra& g, const Vec& v, bool descending) {
  const Field& f = g.field;
  if (v.size() != g.dim() || !g.space.is_even_vector(v)) throw UsageError("pmap_apply: argument must be an even vector");
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < g.even_dim(); ++i)
    if (v[i] != 0) order.push_back(i);
  if (descending) std::reverse(order.begin(), order.end());

  Vec acc = g.zero(), acc_p = g.zero();
  bool first = true;
  for (auto i : order) {
    Vec term = f.scaled(g.basis(i), v[i]);
    Vec term_p = f.scaled(g.pmap[i], f.pow(v[i], f.p()));
    if (!first) {
      for (const auto& s : jacobson_si(g, acc, term)) f.axpy(acc_p, 1, s);
    }
    f.axpy(acc_p, 1, term_p);
    f.axpy(acc, 1, term);
    first = false;
  }
  return acc_p;
}

ValidationReport validate_pmap(const LieSuperAlgebra& g) {
  ValidationReport rep;
  const Field& f = g.field;
  for (std::size_t i = 0; i < g.even_dim(); ++i) {
    if (!g.space.is_even_vector(g.pmap[i])) {
      rep.add("pmap_even", {i}, g.space.name(i) + "^[p] has odd components");
      continue;
    }
    Matrix lhs = g.ad(g.pmap[i]);
    Matrix rhs = g.ad(g.basis(i)).power(f.p());
    if (lhs != rhs) {
      for (std::size_t j = 0; j < g.dim(); ++j)
        if (lhs.column(j) != rhs.column(j))
          rep.add("pmap_ad", {i, j}, "[" + g.space.name(i) + "^[p], " + g.space.name(j) + "] != (ad " + g.space.name(i) + ")^p(" + g.space.name(j) + ")");
    }
  }
  if (!rep.ok()) return rep;
  for (std::size_t i = 0; i < g.even_dim(); ++i)
    for (std::size_t j = i + 1; j < g.even_dim(); ++j) {
      Vec v = f.added(g.basis(i), g.basis(j));
      if (pmap_apply(g, v, false) != pmap_apply(g, v, true))
        rep.add("pmap_additivity", {i, j}, "(x_i + x_j)^[p] depends on the fold order");
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Representations

Matrix Representation::action(const Vec& x) const {
  if (rho.empty()) throw UsageError("representation has no action matrices");
  const Field& f = rho.front().field();
  Matrix out(f, dim(), dim());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) out = out + rho[i].scaled(x[i]);
  return out;
}

Representation trivial_module(const LieSuperAlgebra& g, std::size_t even_dim, std::size_t odd_dim) {
  Representation r;
  std::vector<std::string> even, odd;
  for (std::size_t i = 0; i < even_dim; ++i) even.push_back("v" + std::to_string(i));
  for (std::size_t i = 0; i < odd_dim; ++i) odd.push_back("w" + std::to_string(i));
  r.target = SuperSpace(even, odd);
  r.rho.assign(g.dim(), Matrix(g.field, even_dim + odd_dim, even_dim + odd_dim));
  return r;
}

Representation adjoint_module(const LieSuperAlgebra& g) {
  Representation r;
  std::vector<std::string> even, odd;
  for (std::size_t i = 0; i < g.dim(); ++i) (i < g.even_dim() ? even : odd).push_back(g.space.name(i));
  r.target = SuperSpace(even, odd);
  for (std::size_t i = 0; i < g.dim(); ++i) r.rho.push_back(g.ad(g.basis(i)));
  return r;
}

Representation dual_module(const LieSuperAlgebra& g, const Representation& m) {
  const Field& f = g.field;
  Representation out;
  out.target = m.target;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    Matrix r(f, m.dim(), m.dim());
    for (std::size_t a = 0; a < m.dim(); ++a)
      for (std::size_t b = 0; b < m.dim(); ++b) {
        Scalar v = m.rho[i].at(b, a);
        if (v != 0) r.set(a, b, f.mul(f.neg(f.sign(g.parity(i) * m.target.parity(a))), v));
      }
    out.rho.push_back(std::move(r));
  }
  return out;
}

ValidationReport validate_module(const LieSuperAlgebra& g, const Representation& rep, bool restricted) {
  ValidationReport out;
  const Field& f = g.field;
  if (rep.rho.size() != g.dim()) {
    out.add("shape", {rep.rho.size()}, "expected one action matrix per basis element of g");
    return out;
  }
  for (std::size_t i = 0; i < g.dim(); ++i) {
    const Matrix& m = rep.rho[i];
    if (m.rows() != rep.dim() || m.cols() != rep.dim()) {
      out.add("shape", {i}, "action matrix has the wrong size");
      return out;
    }
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (const auto& e : m.row(r))
        if (rep.target.parity(r) != ((rep.target.parity(e.col) + g.parity(i)) & 1U))
          out.add("grading", {i, r, e.col}, "action of " + g.space.name(i) + " does not respect the grading");
  }
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i; j < g.dim(); ++j) {
      Matrix lhs = rep.action(g.bracket[i][j]);
      Matrix rhs = rep.rho[i] * rep.rho[j] - (rep.rho[j] * rep.rho[i]).scaled(f.sign(g.parity(i) * g.parity(j)));
      if (lhs != rhs) out.add("bracket", {i, j}, "rho([x_i,x_j]) != [rho(x_i), rho(x_j)]");
    }
  if (restricted) {
    for (std::size_t i = 0; i < g.even_dim(); ++i)
      if (rep.rho[i].power(f.p()) != rep.action(g.pmap[i]))
        out.add("restricted", {i}, "rho(" + g.space.name(i) + ")^p != rho(" + g.space.name(i) + "^[p])");
  }
  return out;
}

HomModule hom_module(const LieSuperAlgebra& g, const Representation& n, const Representation& k) {
  const Field& f = g.field;
  HomModule h;
  h.k_dim = k.dim();
  h.n_dim = n.dim();
  std::vector<std::pair<std::size_t, std::size_t>> even_units, odd_units;
  std::vector<std::string> even_names, odd_names;
  for (std::size_t a = 0; a < k.dim(); ++a)
    for (std::size_t b = 0; b < n.dim(); ++b) {
      bool odd = ((k.target.parity(a) + n.target.parity(b)) & 1U) != 0;
      (odd ? odd_units : even_units).emplace_back(a, b);
      (odd ? odd_names : even_names).push_back(k.target.name(a) + "<-" + n.target.name(b));
    }
  h.unit = even_units;
  h.unit.insert(h.unit.end(), odd_units.begin(), odd_units.end());
  h.module.target = SuperSpace(even_names, odd_names);

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t u = 0; u < h.unit.size(); ++u) index[h.unit[u]] = u;

  const std::size_t dim = h.unit.size();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    Matrix act(f, dim, dim);
    const Matrix& rk = k.rho[i];
    const Matrix& rn = n.rho[i];
    for (std::size_t u = 0; u < dim; ++u) {
      auto [a, b] = h.unit[u];
      unsigned pm = h.module.target.parity(u);
      Scalar s = f.neg(f.sign(g.parity(i) * pm));
      // rho_K(x) E_{ab} = sum_a' rho_K[a'][a] E_{a'b}
      for (std::size_t a2 = 0; a2 < k.dim(); ++a2) {
        Scalar c = rk.at(a2, a);
        if (c != 0) act.add_to(index.at({a2, b}), u, c);
      }
      // E_{ab} rho_N(x) = sum_b' rho_N[b][b'] E_{ab'}
      for (const auto& e : rn.row(b)) act.add_to(index.at({a, e.col}), u, f.mul(s, e.value));
    }
    h.module.rho.push_back(std::move(act));
  }
  return h;
}

Matrix HomModule::to_matrix(const Vec& coords, const Field& f) const {
  Matrix m(f, k_dim, n_dim);
  for (std::size_t u = 0; u < unit.size(); ++u)
    if (coords.at(u) != 0) m.set(unit[u].first, unit[u].second, coords[u]);
  return m;
}

Vec HomModule::from_matrix(const Matrix& m) const {
  Vec out(unit.size(), 0);
  for (std::size_t u = 0; u < unit.size(); ++u) out[u] = m.at(unit[u].first, unit[u].second);
  return out;
}

InvariantSpaces invariants(const LieSuperAlgebra& g, const Representation& m) {
  const Field& f = g.field;
  Matrix stacked(f, 0, m.dim());
  for (const auto& r : m.rho) stacked = stacked.vstack(r);
  Subspace all = gflin::nullspace(stacked);
  std::vector<Vec> even_units;
  for (std::size_t i = 0; i < m.target.even_dim(); ++i) even_units.push_back(gflin::unit_vector(m.dim(), i));
  Subspace even = gflin::subspace_intersect(all, Subspace::span(f, m.dim(), even_units));
  return {std::move(all), std::move(even)};
}

SemilinearSpace semilinear_space(std::size_t even_dim, Subspace target) {
  return SemilinearSpace{even_dim, std::move(target)};
}

std::vector<Vec> SemilinearSpace::basis_map(std::size_t k) const {
  if (k >= dim()) throw UsageError("semilinear basis index out of range");
  std::size_t w = target.dim();
  std::vector<Vec> values(source_dim, Vec(target.ambient_dim(), 0));
  values[k / w] = target.vector(k % w);
  return values;
}

std::optional<Vec> SemilinearSpace::coordinates(const std::vector<Vec>& values) const {
  if (values.size() != source_dim) throw UsageError("semilinear map: wrong number of values");
  Vec out;
  for (const auto& v : values) {
    auto c = target.coordinates(v);
    if (!c) return std::nullopt;
    out.insert(out.end(), c->begin(), c->end());
  }
  return out;
}

LieSuperAlgebra semidirect(const LieSuperAlgebra& g, const Representation& m) {
  SumLayout layout = direct_sum(g.space, m.target, "M.");
  LieSuperAlgebra e(g.field, layout.space);
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i; j < g.dim(); ++j)
      e.set_bracket(layout.first[i], layout.first[j], layout.inject_first(g.bracket[i][j]));
    for (std::size_t c = 0; c < m.dim(); ++c)
      e.set_bracket(layout.first[i], layout.second[c], layout.inject_second(m.rho[i].column(c)));
  }
  for (std::size_t i = 0; i < g.even_dim(); ++i) e.pmap[layout.first[i]] = layout.inject_first(g.pmap[i]);
  return e;
}

Matrix monomial_action(const Representation& rep, const std::vector<std::size_t>& word) {
  if (rep.rho.empty()) throw UsageError("representation has no action matrices");
  Matrix out = Matrix::identity(rep.rho.front().field(), rep.dim());
  for (auto i : word) out = out * rep.rho.at(i);
  return out;
}

}  // namespace supercoh::super
