#include "supercoh/cohomology.hpp"

#include <algorithm>
#include <numeric>

namespace supercoh::cohomology {

namespace {

// Sparse row accumulator keyed by column.
class RowBuilder {
public:
  explicit RowBuilder(const Field& f) : f_(f) {}
  void add(std::size_t col, Scalar v) {
    if (v == 0) return;
    Scalar& slot = entries_[static_cast<std::uint32_t>(col)];
    slot = f_.add(slot, v);
  }
  gflin::SparseRow take() {
    gflin::SparseRow row;
    for (const auto& [c, v] : entries_)
      if (v != 0) row.push_back({c, v});
    entries_.clear();
    return row;
  }

private:
  const Field& f_;
  std::map<std::uint32_t, Scalar> entries_;
};

std::vector<std::uint32_t> without(const std::vector<std::uint32_t>& args, std::size_t a, std::size_t b = SIZE_MAX) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < args.size(); ++i)
    if (i != a && i != b) out.push_back(args[i]);
  return out;
}

std::vector<std::uint32_t> to_u32(const std::vector<std::size_t>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

// ---------------------------------------------------------------------------
// Lie complex

LieComplex::LieComplex(LieSuperAlgebra g, Representation m) : g_(std::move(g)), m_(std::move(m)) {
  if (m_.rho.size() != g_.dim()) throw UsageError("module does not match the algebra");
  const std::size_t d = g_.dim();
  for (unsigned n = 0; n <= max_degree; ++n) {
    std::vector<std::uint32_t> cur;
    std::function<void(std::uint32_t)> rec = [&](std::uint32_t start) {
      if (cur.size() == n) {
        unsigned par = 0;
        for (auto a : cur) par += g_.parity(a);
        for (std::uint32_t k = 0; k < m_.dim(); ++k) {
          if (m_.target.parity(k) != (par & 1U)) continue;
          std::vector<std::uint32_t> key = cur;
          key.push_back(k);
          index_[n][key] = basis_[n].size();
          basis_[n].push_back({cur, k});
        }
        return;
      }
      for (std::uint32_t a = start; a < d; ++a) {
        cur.push_back(a);
        // even indices may not repeat, odd ones may
        rec(g_.parity(a) == 0 ? a + 1 : a);
        cur.pop_back();
      }
    };
    rec(0);
  }
}

std::optional<std::size_t> LieComplex::index_of(unsigned n, const std::vector<std::uint32_t>& args, std::uint32_t m) const {
  std::vector<std::uint32_t> key = args;
  key.push_back(m);
  auto it = index_.at(n).find(key);
  if (it == index_[n].end()) return std::nullopt;
  return it->second;
}

std::optional<std::pair<Scalar, std::vector<std::uint32_t>>> LieComplex::canonical(std::vector<std::uint32_t> args) const {
  const Field& f = field();
  Scalar sign = 1;
  for (std::size_t i = 0; i < args.size(); ++i)
    for (std::size_t j = 0; j + 1 < args.size() - i; ++j)
      if (args[j] > args[j + 1]) {
        // f(..a,b..) = -(-1)^{|a||b|} f(..b,a..)
        sign = f.mul(sign, f.neg(f.sign(g_.parity(args[j]) * g_.parity(args[j + 1]))));
        std::swap(args[j], args[j + 1]);
      }
  for (std::size_t i = 0; i + 1 < args.size(); ++i)
    if (args[i] == args[i + 1] && g_.parity(args[i]) == 0) return std::nullopt;
  return std::make_pair(sign, std::move(args));
}

Matrix LieComplex::build_unified(unsigned n) const {
  const Field& f = field();
  Matrix out(f, dim(n + 1), dim(n));
  RowBuilder row(f);
  for (std::size_t r = 0; r < dim(n + 1); ++r) {
    const Tuple& t = basis_[n + 1][r];
    const auto& x = t.args;
    std::vector<unsigned> before(x.size() + 1, 0);  // sum of parities of x_1..x_{s-1}
    for (std::size_t i = 0; i < x.size(); ++i) before[i + 1] = before[i] + g_.parity(x[i]);

    // action terms, s is 0-based here so (-1)^{s-1} becomes (-1)^s
    for (std::size_t s = 0; s < x.size(); ++s) {
      auto c = canonical(without(x, s));
      if (!c) continue;
      Scalar sign = f.mul(c->first, f.sign(static_cast<unsigned>(s) + g_.parity(x[s]) * before[s]));
      for (const auto& e : m_.rho[x[s]].row(t.m)) {
        auto col = index_of(n, c->second, e.col);
        if (col) row.add(*col, f.mul(sign, e.value));
      }
    }
    // bracket terms; with 1-based s, t the exponent is s + t + ..., parity unchanged for 0-based
    for (std::size_t s = 0; s < x.size(); ++s)
      for (std::size_t u = s + 1; u < x.size(); ++u) {
        const Vec& br = g_.bracket[x[s]][x[u]];
        unsigned e = static_cast<unsigned>(s + u) + g_.parity(x[s]) * before[s] + g_.parity(x[u]) * before[u] +
                     g_.parity(x[s]) * g_.parity(x[u]);
        Scalar sign = f.sign(e);
        auto rest = without(x, s, u);
        for (std::uint32_t k = 0; k < br.size(); ++k) {
          if (br[k] == 0) continue;
          std::vector<std::uint32_t> args{k};
          args.insert(args.end(), rest.begin(), rest.end());
          auto c = canonical(args);
          if (!c) continue;
          auto col = index_of(n, c->second, t.m);
          if (col) row.add(*col, f.mul(f.mul(sign, c->first), br[k]));
        }
      }
    out.set_row(r, row.take());
  }
  return out;
}

const Matrix& LieComplex::differential(unsigned n) const {
  if (n >= max_degree) throw UsageError("differential degree out of range");
  std::lock_guard<std::mutex> lock(mutex_);
  if (!diff_[n]) diff_[n] = std::make_unique<Matrix>(build_unified(n));
  return *diff_[n];
}

Matrix LieComplex::differential_split(unsigned n) const {
  if (n >= max_degree) throw UsageError("differential degree out of range");
  const Field& f = field();
  Matrix out(f, dim(n + 1), dim(n));
  RowBuilder row(f);
  auto add_value = [&](Scalar coef, const std::vector<std::uint32_t>& args, std::uint32_t m, const Matrix* act) {
    auto c = canonical(args);
    if (!c) return;
    Scalar s = f.mul(coef, c->first);
    if (act == nullptr) {
      auto col = index_of(n, c->second, m);
      if (col) row.add(*col, s);
    } else {
      for (const auto& e : act->row(m)) {
        auto col = index_of(n, c->second, e.col);
        if (col) row.add(*col, f.mul(s, e.value));
      }
    }
  };
  for (std::size_t r = 0; r < dim(n + 1); ++r) {
    const Tuple& t = basis_[n + 1][r];
    std::vector<std::uint32_t> xs, ys;
    for (auto a : t.args) (g_.parity(a) == 0 ? xs : ys).push_back(a);
    const std::size_t n0 = xs.size(), n1 = ys.size();
    auto join = [](std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b) {
      a.insert(a.end(), b.begin(), b.end());
      return a;
    };
    for (std::size_t s = 0; s < n0; ++s)
      add_value(f.sign(static_cast<unsigned>(s)), join(without(xs, s), ys), t.m, &m_.rho[xs[s]]);
    for (std::size_t u = 0; u < n1; ++u)
      add_value(f.sign(static_cast<unsigned>(n0)), join(xs, without(ys, u)), t.m, &m_.rho[ys[u]]);
    for (std::size_t s = 0; s < n0; ++s)
      for (std::size_t u = s + 1; u < n0; ++u) {
        const Vec& br = g_.bracket[xs[s]][xs[u]];
        for (std::uint32_t k = 0; k < br.size(); ++k)
          if (br[k] != 0)
            add_value(f.mul(f.sign(static_cast<unsigned>(s + u)), br[k]),
                      join(join({k}, without(xs, s, u)), ys), t.m, nullptr);
      }
    for (std::size_t s = 0; s < n0; ++s)
      for (std::size_t u = 0; u < n1; ++u) {
        const Vec& br = g_.bracket[xs[s]][ys[u]];
        // 1-based (-1)^s
        for (std::uint32_t k = 0; k < br.size(); ++k)
          if (br[k] != 0)
            add_value(f.mul(f.sign(static_cast<unsigned>(s + 1)), br[k]),
                      join(join(without(xs, s), {k}), without(ys, u)), t.m, nullptr);
      }
    for (std::size_t s = 0; s < n1; ++s)
      for (std::size_t u = s + 1; u < n1; ++u) {
        const Vec& br = g_.bracket[ys[s]][ys[u]];
        for (std::uint32_t k = 0; k < br.size(); ++k)
          if (br[k] != 0) add_value(f.neg(br[k]), join(join({k}, xs), without(ys, s, u)), t.m, nullptr);
      }
    out.set_row(r, row.take());
  }
  return out;
}

Vec LieComplex::eval(unsigned n, const Vec& f, const std::vector<std::size_t>& args) const {
  if (args.size() != n || f.size() != dim(n)) throw UsageError("eval: cochain/argument size mismatch");
  Vec out(m_.dim(), 0);
  auto c = canonical(to_u32(args));
  if (!c) return out;
  for (std::uint32_t k = 0; k < m_.dim(); ++k) {
    auto idx = index_of(n, c->second, k);
    if (idx) out[k] = field().mul(c->first, f[*idx]);
  }
  return out;
}

Vec LieComplex::eval1(const Vec& f, const Vec& v) const {
  Vec out(m_.dim(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) field().axpy(out, v[i], eval(1, f, {i}));
  return out;
}

Vec LieComplex::eval2(const Vec& f, const Vec& u, const Vec& v) const {
  Vec out(m_.dim(), 0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) field().axpy(out, field().mul(u[i], v[j]), eval(2, f, {i, j}));
  }
  return out;
}

Vec LieComplex::from_function(unsigned n, const std::function<Vec(const std::vector<std::size_t>&)>& fn) const {
  Vec out(dim(n), 0);
  std::vector<std::uint32_t> last;
  Vec value;
  bool have = false;
  for (std::size_t i = 0; i < dim(n); ++i) {
    const Tuple& t = basis_[n][i];
    if (!have || t.args != last) {
      value = fn(std::vector<std::size_t>(t.args.begin(), t.args.end()));
      if (value.size() != m_.dim()) throw UsageError("from_function: value has the wrong length");
      last = t.args;
      have = true;
    }
    out[i] = value[t.m];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bar complex

BarComplex::BarComplex(LieSuperAlgebra g, Representation m)
    : u_(std::make_unique<envelope::UAlgebra>(std::move(g), envelope::Mode::restricted)), m_(std::move(m)) {
  if (m_.rho.size() != u_->lie().dim()) throw UsageError("module does not match the algebra");
  const auto& pbw = u_->pbw_basis();
  const std::size_t a = aug_dim();
  for (std::size_t i = 1; i < pbw.size(); ++i) {
    actions_.push_back(super::monomial_action(m_, u_->word(pbw[i])));
    parity_.push_back(u_->parity(pbw[i]));
  }
  for (unsigned n = 0; n <= max_degree; ++n) {
    std::size_t total = m_.dim();
    for (unsigned k = 0; k < n; ++k) total *= a;
    index_[n].assign(total, -1);
    std::vector<std::uint32_t> cur(n, 0);
    if (n > 0 && a == 0) continue;
    while (true) {
      unsigned par = 0;
      for (auto s : cur) par += parity_[s];
      for (std::uint32_t k = 0; k < m_.dim(); ++k) {
        if (m_.target.parity(k) != (par & 1U)) continue;
        index_[n][flat(cur, k)] = static_cast<std::int64_t>(basis_[n].size());
        basis_[n].push_back({cur, k});
      }
      // odometer, last slot fastest
      std::size_t pos = n;
      while (pos > 0 && cur[pos - 1] + 1 == a) cur[--pos] = 0;
      if (pos == 0) break;
      ++cur[pos - 1];
    }
  }
}

std::size_t BarComplex::flat(const std::vector<std::uint32_t>& args, std::uint32_t m) const {
  std::size_t key = 0;
  for (auto s : args) key = key * aug_dim() + s;
  return key * m_.dim() + m;
}

std::uint32_t BarComplex::generator_position(std::size_t i) const {
  envelope::Monomial mono{std::vector<std::uint16_t>(u_->num_vars(), 0)};
  mono.exps.at(u_->var_of_basis(i)) = 1;
  return static_cast<std::uint32_t>(u_->index_of(mono) - 1);
}

std::optional<std::size_t> BarComplex::index_of(unsigned n, const std::vector<std::uint32_t>& args, std::uint32_t m) const {
  if (args.size() != n) throw UsageError("index_of: wrong number of arguments");
  std::int64_t v = index_.at(n).at(flat(args, m));
  if (v < 0) return std::nullopt;
  return static_cast<std::size_t>(v);
}

Matrix BarComplex::build(unsigned n) const {
  const Field& f = field();
  Matrix out(f, dim(n + 1), dim(n));
  RowBuilder row(f);
  for (std::size_t r = 0; r < dim(n + 1); ++r) {
    const Tuple& t = basis_[n + 1][r];
    const auto& s = t.args;
    // s1 . f(s2, ..., s_{n+1})
    std::vector<std::uint32_t> tail(s.begin() + 1, s.end());
    for (const auto& e : actions_[s[0]].row(t.m)) {
      auto col = index_of(n, tail, e.col);
      if (col) row.add(*col, e.value);
    }
    // (-1)^i f(s1, ..., s_i s_{i+1}, ..., s_{n+1})
    for (std::size_t i = 0; i < n; ++i) {
      const auto& prod = u_->basis_product(s[i] + 1, s[i + 1] + 1);
      Scalar sign = f.sign(static_cast<unsigned>(i + 1));
      for (const auto& [idx, c] : prod) {
        if (idx == 0) throw InvariantViolation("product of augmentation ideal elements has a unit component");
        std::vector<std::uint32_t> args;
        args.insert(args.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i));
        args.push_back(idx - 1);
        args.insert(args.end(), s.begin() + static_cast<std::ptrdiff_t>(i + 2), s.end());
        auto col = index_of(n, args, t.m);
        if (col) row.add(*col, f.mul(sign, c));
      }
    }
    out.set_row(r, row.take());
  }
  return out;
}

const Matrix& BarComplex::differential(unsigned n) const {
  if (n >= max_degree) throw UsageError("differential degree out of range");
  std::lock_guard<std::mutex> lock(mutex_);
  if (!diff_[n]) diff_[n] = std::make_unique<Matrix>(build(n));
  return *diff_[n];
}

Vec BarComplex::eval(unsigned n, const Vec& f, const std::vector<std::uint32_t>& args) const {
  if (args.size() != n || f.size() != dim(n)) throw UsageError("eval: cochain/argument size mismatch");
  Vec out(m_.dim(), 0);
  for (std::uint32_t k = 0; k < m_.dim(); ++k) {
    auto idx = index_of(n, args, k);
    if (idx) out[k] = f[*idx];
  }
  return out;
}

Vec BarComplex::eval1(const Vec& f, const Vec& u) const {
  if (u.size() != u_->dim() || u[0] != 0) throw UsageError("eval1: argument must lie in the augmentation ideal");
  Vec out(m_.dim(), 0);
  for (std::uint32_t a = 0; a < aug_dim(); ++a)
    if (u[a + 1] != 0) field().axpy(out, u[a + 1], eval(1, f, {a}));
  return out;
}

Vec BarComplex::eval2(const Vec& f, const Vec& u, const Vec& v) const {
  if (u.size() != u_->dim() || v.size() != u_->dim() || u[0] != 0 || v[0] != 0)
    throw UsageError("eval2: arguments must lie in the augmentation ideal");
  Vec out(m_.dim(), 0);
  for (std::uint32_t a = 0; a < aug_dim(); ++a) {
    if (u[a + 1] == 0) continue;
    for (std::uint32_t b = 0; b < aug_dim(); ++b)
      if (v[b + 1] != 0) field().axpy(out, field().mul(u[a + 1], v[b + 1]), eval(2, f, {a, b}));
  }
  return out;
}

Vec BarComplex::from_function(unsigned n, const std::function<Vec(const std::vector<std::uint32_t>&)>& fn) const {
  Vec out(dim(n), 0);
  std::vector<std::uint32_t> last;
  Vec value;
  bool have = false;
  for (std::size_t i = 0; i < dim(n); ++i) {
    const Tuple& t = basis_[n][i];
    if (!have || t.args != last) {
      value = fn(t.args);
      if (value.size() != m_.dim()) throw UsageError("from_function: value has the wrong length");
      last = t.args;
      have = true;
    }
    out[i] = value[t.m];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cohomology

namespace {

template <class Complex>
CohomologyResult cohomology_of(const Complex& c, unsigned n, Kind kind) {
  if (n > 2) throw UsageError("cohomology is computed in degrees 0, 1, 2");
  Subspace z = gflin::nullspace(c.differential(n));
  Subspace b = n == 0 ? Subspace::zero(c.field(), c.dim(0)) : gflin::image(c.differential(n - 1));
  return CohomologyResult{n, kind, Quotient(std::move(z), std::move(b))};
}

}  // namespace

CohomologyResult lie_cohomology(const LieComplex& c, unsigned n) {
  return cohomology_of(c, n, Kind::lie);
}

CohomologyResult restricted_cohomology(const BarComplex& c, unsigned n) {
  return cohomology_of(c, n, Kind::restricted);
}

int sgn_marked(const std::vector<std::size_t>& sigma, std::size_t n0) {
  const std::size_t n = sigma.size();
  if (n0 > n) throw UsageError("sgn_marked: n0 exceeds n");
  std::vector<char> used(n, 0);
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (sigma[i] >= n || used[sigma[i]]) throw UsageError("sgn_marked: not a permutation");
    for (std::size_t j = 0; j < n0; ++j)
      if (!used[j] && j < sigma[i]) ++total;
    used[sigma[i]] = 1;
  }
  return (total % 2 == 0) ? 1 : -1;
}

Matrix comparison_matrix(const BarComplex& bar, const LieComplex& lie, unsigned n) {
  if (n > 2) throw UsageError("comparison is built in degrees 0, 1, 2");
  const Field& f = lie.field();
  Matrix out(f, lie.dim(n), bar.dim(n));
  RowBuilder row(f);
  for (std::size_t r = 0; r < lie.dim(n); ++r) {
    const Tuple& t = lie.basis(n)[r];
    std::size_t n0 = 0;
    for (auto a : t.args)
      if (lie.lie().parity(a) == 0) ++n0;
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      std::vector<std::uint32_t> args;
      for (auto s : sigma) args.push_back(bar.generator_position(t.args[s]));
      auto col = bar.index_of(n, args, t.m);
      if (col) row.add(*col, sgn_marked(sigma, n0) > 0 ? 1 : f.neg(1));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    out.set_row(r, row.take());
  }
  return out;
}

Matrix restrictedness_defect(const LieComplex& c, const Vec& v) {
  const LieSuperAlgebra& g = c.lie();
  const Field& f = c.field();
  const auto& m = c.module();
  Vec vp = super::pmap_apply(g, v);
  Matrix act = m.action(v).power(f.p() - 1);
  std::vector<Vec> cols;
  for (const auto& t : c.basis(1)) {
    Vec col = f.scaled(act.column(t.m), v[t.args[0]]);
    col[t.m] = f.sub(col[t.m], vp[t.args[0]]);
    cols.push_back(std::move(col));
  }
  return Matrix::from_columns(f, m.dim(), cols);
}

CohomologyResult h1_star_via_prop32(const LieComplex& c) {
  const LieSuperAlgebra& g = c.lie();
  const Field& f = c.field();
  Matrix stacked = c.differential(1);
  std::vector<Vec> points;
  for (std::size_t i = 0; i < g.even_dim(); ++i) {
    points.push_back(g.basis(i));
    for (std::size_t j = i + 1; j < g.even_dim(); ++j) points.push_back(f.added(g.basis(i), g.basis(j)));
  }
  for (const auto& v : points) stacked = stacked.vstack(restrictedness_defect(c, v));
  Subspace z = gflin::nullspace(stacked);
  Subspace b = gflin::image(c.differential(0));
  return CohomologyResult{1, Kind::restricted, Quotient(std::move(z), std::move(b))};
}

}  // namespace supercoh::cohomology
