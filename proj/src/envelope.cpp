#include "supercoh/envelope.hpp"

#include <algorithm>
#include <sstream>

namespace supercoh::envelope {

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exps) d += e;
  return d;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // x1 before x2: a larger exponent on an earlier variable sorts first
  for (std::size_t i = 0; i < a.exps.size() && i < b.exps.size(); ++i)
    if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i];
  return a.exps.size() < b.exps.size();
}

Scalar UElement::coefficient(const Monomial& m) const {
  auto it = terms.find(m);
  return it == terms.end() ? 0 : it->second;
}

namespace {

std::string key_of(const Monomial& m) {
  std::string k;
  k.reserve(m.exps.size() * 2);
  for (auto e : m.exps) {
    k.push_back(static_cast<char>(e & 0xFF));
    k.push_back(static_cast<char>(e >> 8));
  }
  return k;
}

}  // namespace

UAlgebra::UAlgebra(LieSuperAlgebra g, Mode mode, unsigned degree_bound, std::vector<std::size_t> var_order)
    : g_(std::move(g)), mode_(mode), degree_bound_(degree_bound) {
  const std::size_t n = g_.dim();
  if (var_order.empty())
    for (std::size_t i = 0; i < n; ++i) var_order.push_back(i);
  if (var_order.size() != n) throw UsageError("UAlgebra: variable order must list every basis element once");
  basis_to_var_.assign(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    if (var_order[v] >= n || basis_to_var_[var_order[v]] != n)
      throw UsageError("UAlgebra: variable order must list every basis element once");
    basis_to_var_[var_order[v]] = v;
  }
  var_to_basis_ = std::move(var_order);
  if (mode_ == Mode::truncated && degree_bound_ == 0) degree_bound_ = g_.field.p() + 2;
  build_basis();
}

void UAlgebra::build_basis() {
  const std::size_t n = num_vars();
  const unsigned p = field().p();
  unsigned max_deg = 0;
  if (mode_ == Mode::restricted) {
    for (std::size_t v = 0; v < n; ++v) max_deg += var_is_odd(v) ? 1 : p - 1;
  } else {
    max_deg = degree_bound_;
  }
  // enumerate exponent vectors by odometer, keep those within the bound
  Monomial m{std::vector<std::uint16_t>(n, 0)};
  std::vector<Monomial> all;
  auto cap = [&](std::size_t v) -> unsigned {
    if (var_is_odd(v)) return 1;
    return mode_ == Mode::restricted ? p - 1 : degree_bound_;
  };
  while (true) {
    if (m.degree() <= max_deg) all.push_back(m);
    std::size_t v = 0;
    while (v < n && m.exps[v] == cap(v)) m.exps[v++] = 0;
    if (v == n) break;
    ++m.exps[v];
  }
  std::sort(all.begin(), all.end(), MonomialLess{});
  basis_ = std::move(all);
  for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
}

unsigned UAlgebra::parity(const Monomial& m) const {
  unsigned s = 0;
  for (std::size_t v = 0; v < m.exps.size(); ++v)
    if (var_is_odd(v)) s += m.exps[v];
  return s & 1U;
}

std::vector<Monomial> UAlgebra::aug_ideal_basis() const {
  return {basis_.begin() + 1, basis_.end()};
}

std::size_t UAlgebra::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw UsageError("monomial is not in the PBW basis");
  return it->second;
}

std::vector<std::size_t> UAlgebra::word(const Monomial& m) const {
  std::vector<std::size_t> w;
  for (std::size_t v = 0; v < m.exps.size(); ++v)
    for (unsigned e = 0; e < m.exps[v]; ++e) w.push_back(var_to_basis_[v]);
  return w;
}

UElement UAlgebra::one() const {
  return monomial(Monomial{std::vector<std::uint16_t>(num_vars(), 0)});
}

UElement UAlgebra::monomial(const Monomial& m, Scalar c) const {
  UElement u{this, {}};
  c %= field().p();
  if (c != 0) u.terms[m] = c;
  return u;
}

UElement UAlgebra::generator(std::size_t basis_index) const {
  Monomial m{std::vector<std::uint16_t>(num_vars(), 0)};
  m.exps.at(var_of_basis(basis_index)) = 1;
  if (mode_ == Mode::truncated && degree_bound_ < 1) throw DegreeOverflow("degree bound below 1");
  return monomial(m);
}

UElement UAlgebra::embed(const Vec& v) const {
  if (v.size() != g_.dim()) throw UsageError("embed: vector length mismatch");
  UElement u = zero();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) u = add(u, scale(generator(i), v[i]));
  return u;
}

UElement UAlgebra::from_coords(const Vec& coords) const {
  if (coords.size() != dim()) throw UsageError("from_coords: length mismatch");
  UElement u = zero();
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) u.terms[basis_[i]] = coords[i];
  return u;
}

Vec UAlgebra::to_coords(const UElement& u) const {
  check(u);
  Vec out(dim(), 0);
  for (const auto& [m, c] : u.terms) out[index_of(m)] = c;
  return out;
}

void UAlgebra::check(const UElement& u) const {
  if (u.algebra != this) throw UsageError("element belongs to a different enveloping algebra");
}

void UAlgebra::accumulate(Terms& into, const Terms& t, Scalar c) const {
  const Field& f = field();
  if (c == 0) return;
  for (const auto& [m, v] : t) {
    Scalar add = f.mul(c, v);
    auto it = into.find(m);
    if (it == into.end()) {
      into.emplace(m, add);
    } else {
      it->second = f.add(it->second, add);
      if (it->second == 0) into.erase(it);
    }
  }
}

UElement UAlgebra::add(const UElement& a, const UElement& b) const {
  check(a);
  check(b);
  UElement out = a;
  accumulate(out.terms, b.terms, 1);
  return out;
}

UElement UAlgebra::sub(const UElement& a, const UElement& b) const {
  check(a);
  check(b);
  UElement out = a;
  accumulate(out.terms, b.terms, field().neg(1));
  return out;
}

UElement UAlgebra::scale(const UElement& a, Scalar c) const {
  check(a);
  UElement out{this, {}};
  accumulate(out.terms, a.terms, c % field().p());
  return out;
}

Terms UAlgebra::mul_vec(const Monomial& a, const Vec& v) const {
  Terms out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) accumulate(out, mul_gen(a, basis_to_var_[i]), v[i]);
  return out;
}

// a * x_var in normal form
const Terms& UAlgebra::mul_gen(const Monomial& a, std::size_t var) const {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  std::string key = key_of(a);
  key.push_back(static_cast<char>(var & 0xFF));
  key.push_back(static_cast<char>(var >> 8));
  if (auto it = gen_cache_.find(key); it != gen_cache_.end()) return it->second;

  const Field& f = field();
  const unsigned p = f.p();
  Terms out;
  std::size_t top = a.exps.size();
  for (std::size_t v = a.exps.size(); v-- > 0;)
    if (a.exps[v] != 0) {
      top = v;
      break;
    }

  if (top == a.exps.size() || top < var) {
    Monomial m = a;
    ++m.exps[var];
    if (mode_ == Mode::truncated && m.degree() > degree_bound_)
      throw DegreeOverflow("product exceeds degree bound " + std::to_string(degree_bound_));
    out.emplace(std::move(m), 1);
  } else if (top == var) {
    Monomial rest = a;
    if (var_is_odd(var)) {
      // a' y y = a' (1/2)[y,y]
      --rest.exps[var];
      std::size_t b = var_to_basis_[var];
      out = mul_vec(rest, f.scaled(g_.bracket[b][b], f.half()));
    } else if (mode_ == Mode::restricted && a.exps[var] + 1U == p) {
      rest.exps[var] = 0;
      out = mul_vec(rest, g_.pmap[var_to_basis_[var]]);
    } else {
      ++rest.exps[var];
      if (mode_ == Mode::truncated && rest.degree() > degree_bound_)
        throw DegreeOverflow("product exceeds degree bound " + std::to_string(degree_bound_));
      out.emplace(std::move(rest), 1);
    }
  } else {
    // a = a' x_top, a' x_top x_var = (-1)^{|top||var|} a' x_var x_top + a' [x_top, x_var]
    Monomial rest = a;
    --rest.exps[top];
    std::size_t bt = var_to_basis_[top], bv = var_to_basis_[var];
    Scalar s = f.sign(g_.parity(bt) * g_.parity(bv));
    const Terms& left = mul_gen(rest, var);
    Terms lead;
    for (const auto& [m, c] : left) accumulate(lead, mul_gen(m, top), c);
    accumulate(out, lead, s);
    accumulate(out, mul_vec(rest, g_.bracket[bt][bv]), 1);
  }
  return gen_cache_.emplace(std::move(key), std::move(out)).first->second;
}

Terms UAlgebra::mul_monomials(const Monomial& a, const Monomial& b) const {
  Terms cur;
  cur.emplace(a, 1);
  for (std::size_t v = 0; v < b.exps.size(); ++v)
    for (unsigned e = 0; e < b.exps[v]; ++e) {
      Terms next;
      for (const auto& [m, c] : cur) accumulate(next, mul_gen(m, v), c);
      cur = std::move(next);
    }
  return cur;
}

UElement UAlgebra::multiply(const UElement& a, const UElement& b) const {
  check(a);
  check(b);
  UElement out{this, {}};
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      Terms t;
      {
        std::lock_guard<std::recursive_mutex> lock(mutex_);
        std::string key = key_of(ma) + "|" + key_of(mb);
        auto it = pair_cache_.find(key);
        if (it == pair_cache_.end()) it = pair_cache_.emplace(key, mul_monomials(ma, mb)).first;
        t = it->second;
      }
      accumulate(out.terms, t, field().mul(ca, cb));
    }
  return out;
}

UElement UAlgebra::power(const UElement& a, unsigned k) const {
  check(a);
  UElement out = one();
  for (unsigned i = 0; i < k; ++i) out = multiply(out, a);
  return out;
}

UElement UAlgebra::d_w(const UElement& w, const UElement& z) const {
  return sub(multiply(w, z), multiply(z, w));
}

const std::vector<std::pair<std::uint32_t, Scalar>>& UAlgebra::basis_product(std::size_t i, std::size_t j) const {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  const std::size_t n = dim();
  if (i >= n || j >= n) throw UsageError("basis_product: index out of range");
  if (table_.empty()) {
    table_.resize(n * n);
    table_ready_.assign(n * n, 0);
  }
  std::size_t slot = i * n + j;
  if (!table_ready_[slot]) {
    Terms t = mul_monomials(basis_[i], basis_[j]);
    std::vector<std::pair<std::uint32_t, Scalar>> row;
    for (const auto& [m, c] : t) row.emplace_back(static_cast<std::uint32_t>(index_of(m)), c);
    std::sort(row.begin(), row.end());
    table_[slot] = std::move(row);
    table_ready_[slot] = 1;
  }
  return table_[slot];
}

std::string UAlgebra::to_string(const UElement& u) const {
  if (u.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : u.terms) {
    if (!first) os << " + ";
    first = false;
    os << field().to_signed(c);
    for (std::size_t v = 0; v < m.exps.size(); ++v) {
      if (m.exps[v] == 0) continue;
      os << "*" << g_.space.name(var_to_basis_[v]);
      if (m.exps[v] > 1) os << "^" << m.exps[v];
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Commutator identities

namespace {

Scalar binom(const Field& f, unsigned n, unsigned k) {
  if (k > n) return 0;
  std::vector<Scalar> row{1};
  for (unsigned r = 1; r <= n; ++r) {
    std::vector<Scalar> next(r + 1, 1);
    for (unsigned i = 1; i < r; ++i) next[i] = f.add(row[i - 1], row[i]);
    row = std::move(next);
  }
  return row[k];
}

UElement random_element(const UAlgebra& u, std::mt19937_64& rng) {
  std::uniform_int_distribution<Scalar> d(0, u.field().p() - 1);
  Vec c(u.dim());
  for (auto& s : c) s = d(rng);
  return u.from_coords(c);
}

UElement random_even_generator(const UAlgebra& u, std::mt19937_64& rng) {
  std::uniform_int_distribution<Scalar> d(0, u.field().p() - 1);
  Vec v(u.lie().dim(), 0);
  for (std::size_t i = 0; i < u.lie().even_dim(); ++i) v[i] = d(rng);
  return u.embed(v);
}

}  // namespace

bool commutator_identity_holds(const UAlgebra& u, const UElement& x, const UElement& y) {
  const unsigned p = u.field().p();
  UElement lhs = u.zero();
  for (unsigned i = 0; i < p; ++i)
    lhs = u.add(lhs, u.multiply(u.multiply(u.power(x, i), y), u.power(x, p - 1 - i)));
  UElement rhs = y;
  for (unsigned i = 0; i + 1 < p; ++i) rhs = u.d_w(x, rhs);
  return lhs == rhs;
}

bool commutator_literal_holds(const UAlgebra& u, const UElement& x, const UElement& y) {
  const unsigned p = u.field().p();
  UElement lhs = u.zero();
  for (unsigned i = 0; i < p; ++i)
    lhs = u.add(lhs, u.multiply(u.multiply(u.power(x, i), y), u.power(x, p - 1 - i)));
  return lhs == u.d_w(u.power(x, p - 1), y);
}

bool binomial_identity_holds(const UAlgebra& u, const UElement& x, const UElement& y, unsigned l) {
  const Field& f = u.field();
  std::vector<UElement> iterated{y};
  for (unsigned k = 1; k < l; ++k) iterated.push_back(u.d_w(x, iterated.back()));
  UElement lhs = u.zero();
  for (unsigned i = 0; i < l; ++i) lhs = u.add(lhs, u.multiply(u.power(x, i), iterated[l - 1 - i]));
  UElement rhs = u.zero();
  for (unsigned j = 0; j < l; ++j) {
    Scalar c = f.mul(f.sign(j), binom(f, l, j + 1));
    rhs = u.add(rhs, u.scale(u.multiply(u.multiply(u.power(x, l - 1 - j), y), u.power(x, j)), c));
  }
  return lhs == rhs;
}

ValidationReport check_u_identities(const UAlgebra& u, unsigned trials, std::mt19937_64& rng) {
  ValidationReport rep;
  const unsigned p = u.field().p();
  std::uniform_int_distribution<unsigned> dl(2, p);
  for (unsigned t = 0; t < trials; ++t) {
    UElement x = random_even_generator(u, rng);
    UElement y = random_element(u, rng);
    unsigned l = dl(rng);
    if (!commutator_identity_holds(u, x, y))
      rep.add("commutator_sum", {t}, "x = " + u.to_string(x) + ", y = " + u.to_string(y));
    if (!binomial_identity_holds(u, x, y, l))
      rep.add("binomial_expansion", {t, l}, "x = " + u.to_string(x) + ", y = " + u.to_string(y));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Maps between enveloping algebras

namespace {

Matrix extend_on_words(const UAlgebra& src, const UAlgebra& dst, const std::vector<Vec>& f) {
  if (f.size() != src.lie().dim()) throw UsageError("generator map must give one image per basis element");
  std::vector<UElement> images;
  for (const auto& v : f) images.push_back(dst.embed(v));
  std::vector<Vec> cols;
  for (const auto& m : src.pbw_basis()) {
    UElement acc = dst.one();
    for (auto i : src.word(m)) acc = dst.multiply(acc, images[i]);
    cols.push_back(dst.to_coords(acc));
  }
  return Matrix::from_columns(dst.field(), dst.dim(), cols);
}

}  // namespace

Matrix algebra_hom_extend(const UAlgebra& src, const UAlgebra& dst, const std::vector<Vec>& f) {
  return extend_on_words(src, dst, f);
}

Matrix linear_section_extend(const UAlgebra& src, const UAlgebra& dst, const std::vector<Vec>& psi) {
  return extend_on_words(src, dst, psi);
}

Vec gamma_map(const UAlgebra& u_e, const IdealSplit& split, const Representation& m, const UElement& w) {
  const Field& f = u_e.field();
  Vec out(m.dim(), 0);
  for (const auto& [mono, c] : w.terms) {
    std::vector<std::size_t> g_word;
    std::ptrdiff_t m_coord = -1;
    unsigned m_degree = 0;
    bool m_seen = false;
    for (auto b : u_e.word(mono)) {
      if (split.m_index.at(b) >= 0) {
        m_degree += 1;
        m_coord = split.m_index[b];
        m_seen = true;
      } else {
        if (m_seen) throw UsageError("gamma_map: M-generators must come last in the PBW order");
        g_word.push_back(static_cast<std::size_t>(split.g_index.at(b)));
      }
    }
    if (m_degree == 0) throw NotInIdeal("gamma_map: monomial " + u_e.to_string(u_e.monomial(mono)) + " is not in u(E)M");
    if (m_degree >= 2) continue;
    Matrix act = super::monomial_action(m, g_word);
    f.axpy(out, c, act.column(static_cast<std::size_t>(m_coord)));
  }
  return out;
}

}  // namespace supercoh::envelope
