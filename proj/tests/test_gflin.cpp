#include "doctest.h"

#include "support.hpp"
#include "supercoh/errors.hpp"

using namespace supercoh;
using namespace supercoh::gflin;
using testing::dense_rank;
using testing::random_matrix;
using testing::random_vec;

TEST_CASE("field arithmetic") {
  for (unsigned p : {3U, 5U, 7U, 13U}) {
    Field f(p);
    for (Scalar a = 1; a < p; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.pow(2, p - 1) == 1);
    CHECK(f.from_int(-1) == p - 1);
    CHECK(f.to_signed(p - 1) == -1);
    CHECK(f.half() * 2 % p == 1);
  }
  CHECK_THROWS_AS(Field(4), UsageError);
  CHECK_THROWS_AS(Field(3).inv(0), UsageError);
}

TEST_CASE("rank agrees with an independent dense elimination") {
  std::mt19937_64 rng(7);
  for (unsigned p : {3U, 5U}) {
    Field f(p);
    for (int t = 0; t < 60; ++t) {
      std::size_t r = 1 + rng() % 9, c = 1 + rng() % 9;
      Matrix m = random_matrix(f, r, c, rng, t % 2 ? 0.3 : 1.0);
      CHECK(rank(m) == dense_rank(testing::to_dense(m), p));
    }
  }
}

TEST_CASE("nullspace, image and rank-nullity") {
  std::mt19937_64 rng(11);
  Field f(5);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
    Matrix m = random_matrix(f, r, c, rng, 0.5);
    Subspace k = nullspace(m);
    Subspace im = image(m);
    CHECK(k.dim() + im.dim() == c);
    for (const auto& v : k.vectors()) CHECK(is_zero(m.apply(v)));
    Vec x = random_vec(f, c, rng);
    CHECK(im.contains(m.apply(x)));
  }
}

TEST_CASE("solve returns a preimage or nothing") {
  std::mt19937_64 rng(3);
  Field f(3);
  for (int t = 0; t < 40; ++t) {
    Matrix m = random_matrix(f, 4, 3, rng, 0.6);
    Vec b = random_vec(f, 4, rng);
    auto x = solve(m, b);
    CHECK(x.has_value() == image(m).contains(b));
    if (x) CHECK(m.apply(*x) == b);
  }
}

TEST_CASE("sum and intersection satisfy the dimension formula") {
  std::mt19937_64 rng(5);
  Field f(3);
  for (int t = 0; t < 40; ++t) {
    std::vector<Vec> a, b;
    for (std::size_t i = 0; i < rng() % 4; ++i) a.push_back(random_vec(f, 6, rng));
    for (std::size_t i = 0; i < rng() % 4; ++i) b.push_back(random_vec(f, 6, rng));
    Subspace sa = Subspace::span(f, 6, a), sb = Subspace::span(f, 6, b);
    Subspace s = subspace_sum(sa, sb), i = subspace_intersect(sa, sb);
    CHECK(s.dim() + i.dim() == sa.dim() + sb.dim());
    CHECK(is_subspace_of(i, sa));
    CHECK(is_subspace_of(i, sb));
    CHECK(is_subspace_of(sa, s));
  }
}

TEST_CASE("echelon bases are canonical") {
  Field f(5);
  Subspace a = Subspace::span(f, 3, {{1, 2, 0}, {0, 1, 1}});
  Subspace b = Subspace::span(f, 3, {{1, 3, 1}, {2, 4, 0}});
  CHECK(a == b);
  CHECK(a.basis() == b.basis());
}

TEST_CASE("quotient coordinates and representatives") {
  std::mt19937_64 rng(9);
  Field f(3);
  for (int t = 0; t < 30; ++t) {
    std::vector<Vec> zb, bb;
    for (int i = 0; i < 4; ++i) zb.push_back(random_vec(f, 6, rng));
    Subspace z = Subspace::span(f, 6, zb);
    for (int i = 0; i < 2; ++i) bb.push_back(z.combination(random_vec(f, z.dim(), rng)));
    Subspace b = Subspace::span(f, 6, bb);
    Quotient q(z, b);
    CHECK(q.dim() == z.dim() - b.dim());
    Vec coeffs = random_vec(f, q.dim(), rng);
    Vec v = f.added(q.lift(coeffs), b.combination(random_vec(f, b.dim(), rng)));
    CHECK(q.coordinates(v) == coeffs);
    for (std::size_t i = 0; i < q.dim(); ++i) CHECK(!b.contains(q.representative(i)));
  }
  Quotient q(Subspace::span(f, 2, {{1, 0}}), Subspace::zero(f, 2));
  CHECK_FALSE(q.try_coordinates({0, 1}).has_value());
  CHECK_THROWS_AS(q.coordinates({0, 1}), UsageError);
}

TEST_CASE("matrix products and transpose") {
  std::mt19937_64 rng(1);
  Field f(7);
  Matrix a = random_matrix(f, 3, 4, rng), b = random_matrix(f, 4, 2, rng);
  Vec x = random_vec(f, 2, rng);
  CHECK((a * b).apply(x) == a.apply(b.apply(x)));
  CHECK((a * b).transpose() == b.transpose() * a.transpose());
  CHECK(Matrix::identity(f, 3) * a == a);
  CHECK_THROWS_AS(a * a, UsageError);
}
