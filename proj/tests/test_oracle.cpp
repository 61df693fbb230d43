// Closed-form multiplication in u(g) for the four fixture algebras and a
// dense bar complex over it; nothing here goes through the library's
// straightening or cochain code.
#include "doctest.h"

#include <functional>
#include <map>

#include "support.hpp"
#include "supercoh/catalog.hpp"
#include "supercoh/cohomology.hpp"
#include "supercoh/envelope.hpp"

using namespace supercoh;
using testing::dense_rank;
using super::LieSuperAlgebra;

namespace {

using Exps = std::vector<std::uint16_t>;
using Product = std::map<Exps, long long>;

struct Oracle {
  long long p;
  std::vector<Exps> basis;  // unit first
  std::function<unsigned(const Exps&)> parity;
  std::function<Product(const Exps&, const Exps&)> mul;
};

long long mod(long long a, long long p) { return ((a % p) + p) % p; }

long long power(long long a, long long e, long long p) {
  long long r = 1;
  a = mod(a, p);
  for (; e; e >>= 1, a = a * a % p)
    if (e & 1) r = r * a % p;
  return r;
}

long long choose(long long n, long long k) {
  long long r = 1;
  for (long long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

Oracle line_oracle(long long p, bool torus) {
  Oracle o{p, {}, [](const Exps&) { return 0U; }, {}};
  for (std::uint16_t a = 0; a < p; ++a) o.basis.push_back({a});
  o.mul = [p, torus](const Exps& a, const Exps& b) {
    long long n = a[0] + b[0];
    if (n >= p && !torus) return Product{};
    while (n >= p) n -= p - 1;
    return Product{{{static_cast<std::uint16_t>(n)}, 1}};
  };
  return o;
}

// z^b y^a = 2^b y^(a+2b) inside k[y]/(y^(2p)); variables ordered (z, y).
Oracle heisenberg_oracle(long long p) {
  Oracle o{p, {}, [](const Exps& e) { return static_cast<unsigned>(e[1]); }, {}};
  for (std::uint16_t k = 0; k < 2 * p; ++k) o.basis.push_back({static_cast<std::uint16_t>(k / 2), static_cast<std::uint16_t>(k % 2)});
  o.mul = [p](const Exps& a, const Exps& b) {
    long long k = a[1] + 2 * a[0] + b[1] + 2 * b[0];
    if (k >= 2 * p) return Product{};
    long long c = power(2, a[0] + b[0], p) * power(power(2, k / 2, p), p - 2, p) % p;
    return Product{{{static_cast<std::uint16_t>(k / 2), static_cast<std::uint16_t>(k % 2)}, c}};
  };
  return o;
}

// (h^a x^b)(h^c x^d) = h^a (h - b)^c x^(b+d), h^p = h, x^p = 0.
Oracle solvable_oracle(long long p) {
  Oracle o{p, {}, [](const Exps&) { return 0U; }, {}};
  for (std::uint16_t deg = 0; deg <= 2 * (p - 1); ++deg)
    for (std::uint16_t a = p - 1 + 1; a-- > 0;) {
      if (a > deg || deg - a >= p) continue;
      o.basis.push_back({a, static_cast<std::uint16_t>(deg - a)});
    }
  o.mul = [p](const Exps& l, const Exps& r) {
    Product out;
    if (l[1] + r[1] >= p) return out;
    for (long long j = 0; j <= r[0]; ++j) {
      long long c = mod(choose(r[0], j) * power(-static_cast<long long>(l[1]), r[0] - j, p), p);
      long long n = l[0] + j;
      while (n >= p) n -= p - 1;
      Exps key{static_cast<std::uint16_t>(n), static_cast<std::uint16_t>(l[1] + r[1])};
      out[key] = mod(out[key] + c, p);
    }
    for (auto it = out.begin(); it != out.end();) it = it->second ? std::next(it) : out.erase(it);
    return out;
  };
  return o;
}

struct BarDims {
  std::size_t c1, c2, h1, h2;
};

// Even cochains on tuples from u^+ with values in the trivial module k.
BarDims bar_oracle(const Oracle& o) {
  std::vector<Exps> aug(o.basis.begin() + 1, o.basis.end());
  std::map<Exps, std::size_t> pos;
  for (std::size_t i = 0; i < aug.size(); ++i) pos[aug[i]] = i;
  auto tuples = [&](unsigned n) {
    std::vector<std::vector<std::size_t>> out{{}};
    for (unsigned k = 0; k < n; ++k) {
      std::vector<std::vector<std::size_t>> next;
      for (const auto& t : out)
        for (std::size_t i = 0; i < aug.size(); ++i) {
          auto u = t;
          u.push_back(i);
          next.push_back(u);
        }
      out = next;
    }
    std::vector<std::vector<std::size_t>> even;
    for (const auto& t : out) {
      unsigned par = 0;
      for (auto i : t) par += o.parity(aug[i]);
      if (par % 2 == 0) even.push_back(t);
    }
    return even;
  };
  auto delta = [&](unsigned n) {
    auto src = tuples(n), dst = tuples(n + 1);
    std::map<std::vector<std::size_t>, std::size_t> col;
    for (std::size_t i = 0; i < src.size(); ++i) col[src[i]] = i;
    std::vector<std::vector<long long>> m(dst.size(), std::vector<long long>(src.size(), 0));
    for (std::size_t r = 0; r < dst.size(); ++r) {
      const auto& s = dst[r];
      for (unsigned i = 1; i <= n; ++i) {
        for (const auto& [mono, c] : o.mul(aug[s[i - 1]], aug[s[i]])) {
          REQUIRE(pos.count(mono));
          std::vector<std::size_t> t(s.begin(), s.begin() + (i - 1));
          t.push_back(pos[mono]);
          t.insert(t.end(), s.begin() + i + 1, s.end());
          auto it = col.find(t);
          if (it == col.end()) continue;
          m[r][it->second] = mod(m[r][it->second] + (i % 2 ? -c : c), o.p);
        }
      }
    }
    return m;
  };
  std::size_t c1 = tuples(1).size(), c2 = tuples(2).size();
  std::size_t r1 = dense_rank(delta(1), o.p), r2 = dense_rank(delta(2), o.p);
  return {c1, c2, c1 - r1, c2 - r2 - r1};
}

// Chevalley-Eilenberg for purely even g with trivial k.
std::pair<std::size_t, std::size_t> lie_oracle(const LieSuperAlgebra& g) {
  const long long p = g.field.p();
  const std::size_t n = g.dim();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  auto f2 = [&](std::size_t a, std::size_t b, std::size_t pi) -> long long {
    if (a == b) return 0;
    if (pairs[pi] == std::make_pair(a, b)) return 1;
    if (pairs[pi] == std::make_pair(b, a)) return -1;
    return 0;
  };
  std::vector<std::vector<long long>> d1(pairs.size(), std::vector<long long>(n, 0));
  for (std::size_t r = 0; r < pairs.size(); ++r)
    for (std::size_t k = 0; k < n; ++k) d1[r][k] = mod(-static_cast<long long>(g.bracket[pairs[r].first][pairs[r].second][k]), p);
  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) triples.push_back({i, j, k});
  std::vector<std::vector<long long>> d2(triples.size(), std::vector<long long>(pairs.size(), 0));
  for (std::size_t r = 0; r < triples.size(); ++r) {
    auto x = triples[r];
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) {
        int c = 3 - a - b;
        long long sign = (a + b) % 2 ? -1 : 1;
        for (std::size_t k = 0; k < n; ++k) {
          long long coef = g.bracket[x[a]][x[b]][k];
          if (!coef) continue;
          for (std::size_t pi = 0; pi < pairs.size(); ++pi)
            d2[r][pi] = mod(d2[r][pi] + sign * coef * f2(k, x[c], pi), p);
        }
      }
  }
  std::size_t r1 = pairs.empty() ? 0 : dense_rank(d1, p);
  std::size_t r2 = triples.empty() ? 0 : dense_rank(d2, p);
  return {n - r1, pairs.size() - r2 - r1};
}

void compare_products(const Oracle& o, const LieSuperAlgebra& g) {
  envelope::UAlgebra u(g, envelope::Mode::restricted);
  REQUIRE(u.dim() == o.basis.size());
  for (const auto& a : o.basis)
    for (const auto& b : o.basis) {
      auto got = u.multiply(u.monomial({a}), u.monomial({b}));
      Product want = o.mul(a, b);
      std::size_t nonzero = 0;
      for (const auto& [mono, c] : want) {
        if (!c) continue;
        ++nonzero;
        CHECK(u.field().to_signed(got.coefficient({mono})) == u.field().to_signed(static_cast<gflin::Scalar>(c)));
      }
      CHECK(got.terms.size() == nonzero);
    }
}

}  // namespace

TEST_CASE("closed-form products agree with straightening") {
  for (long long p : {3, 5}) {
    gflin::Field f(static_cast<unsigned>(p));
    compare_products(line_oracle(p, false), catalog::line(f, false));
    compare_products(line_oracle(p, true), catalog::line(f, true));
    compare_products(heisenberg_oracle(p), catalog::super_heisenberg(f));
  }
  compare_products(solvable_oracle(3), catalog::two_dim_solvable(gflin::Field(3)));
}

TEST_CASE("fixture values: restricted cohomology from the dense bar oracle") {
  gflin::Field f(3);
  struct Case {
    const char* name;
    Oracle o;
    LieSuperAlgebra g;
    std::size_t h1, h2;
  };
  std::vector<Case> cases{{"A1", line_oracle(3, false), catalog::line(f, false), 1, 1},
                          {"A2", line_oracle(3, true), catalog::line(f, true), 0, 0},
                          {"A3", heisenberg_oracle(3), catalog::super_heisenberg(f), 0, 1},
                          {"A4", solvable_oracle(3), catalog::two_dim_solvable(f), 0, 1}};
  for (const auto& c : cases) {
    CAPTURE(c.name);
    BarDims d = bar_oracle(c.o);
    CHECK(d.h1 == c.h1);
    CHECK(d.h2 == c.h2);
    cohomology::BarComplex bar(c.g, super::trivial_module(c.g));
    CHECK(bar.dim(1) == d.c1);
    CHECK(bar.dim(2) == d.c2);
    CHECK(cohomology::restricted_cohomology(bar, 1).dim() == c.h1);
    CHECK(cohomology::restricted_cohomology(bar, 2).dim() == c.h2);
  }
}

TEST_CASE("fixture values: ordinary cohomology") {
  gflin::Field f(3);
  struct Case {
    const char* name;
    LieSuperAlgebra g;
    std::size_t h1, h2;
  };
  // A3 by hand: C^1 = <z*>, C^2 = <(yy)*>, δ(z*)(y,y) = -1, so H^1 = H^2 = 0.
  std::vector<Case> cases{{"A1", catalog::line(f, false), 1, 0},
                          {"A2", catalog::line(f, true), 1, 0},
                          {"A3", catalog::super_heisenberg(f), 0, 0},
                          {"A4", catalog::two_dim_solvable(f), 1, 0}};
  for (const auto& c : cases) {
    CAPTURE(c.name);
    if (c.g.space.odd_dim() == 0) {
      auto [h1, h2] = lie_oracle(c.g);
      CHECK(h1 == c.h1);
      CHECK(h2 == c.h2);
    }
    cohomology::LieComplex lie(c.g, super::trivial_module(c.g));
    CHECK(cohomology::lie_cohomology(lie, 1).dim() == c.h1);
    CHECK(cohomology::lie_cohomology(lie, 2).dim() == c.h2);
  }
  cohomology::LieComplex a3(catalog::super_heisenberg(f), super::trivial_module(catalog::super_heisenberg(f)));
  CHECK(a3.dim(1) == 1);
  CHECK(a3.dim(2) == 1);
  CHECK(a3.differential(1).at(0, 0) == f.from_int(-1));
}

TEST_CASE("fixture values: the hand eliminations for k[x]/(x^3)") {
  // Z^1 = {f(x^2) = 0}, Z^2 = {f(x,x^2) = f(x^2,x), f(x^2,x^2) = 0}, B^2 one dimensional
  BarDims d = bar_oracle(line_oracle(3, false));
  CHECK(d.c1 == 2);
  CHECK(d.c2 == 4);
  CHECK(d.h1 == 1);
  CHECK(d.h2 == 1);
  // k[x]/(x^3 - x): Z^1 = 0, Z^2 = B^2 of dimension 2
  BarDims t = bar_oracle(line_oracle(3, true));
  CHECK(t.h1 == 0);
  CHECK(t.h2 == 0);
}
