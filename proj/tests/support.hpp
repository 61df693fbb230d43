#pragma once

#include <random>
#include <vector>

#include "supercoh/matrix.hpp"

namespace testing {

using supercoh::gflin::Field;
using supercoh::gflin::Matrix;
using supercoh::gflin::Scalar;
using supercoh::gflin::Vec;

inline Vec random_vec(const Field& f, std::size_t n, std::mt19937_64& rng, double density = 1.0) {
  std::uniform_int_distribution<Scalar> d(0, f.p() - 1);
  std::bernoulli_distribution keep(density);
  Vec v(n, 0);
  for (auto& x : v)
    if (keep(rng)) x = d(rng);
  return v;
}

inline Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng, double density = 1.0) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < r; ++i) rows.push_back(random_vec(f, c, rng, density));
  return Matrix::from_rows(f, c, rows);
}

// Dense Gaussian elimination on a copy; kept separate from the library.
inline std::size_t dense_rank(std::vector<std::vector<long long>> a, long long p) {
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  auto inv = [p](long long x) {
    long long r = 1, e = p - 2;
    x %= p;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && ((a[piv][c] % p) + p) % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    long long iv = inv(((a[rank][c] % p) + p) % p);
    for (auto& x : a[rank]) x = ((x % p) + p) % p * iv % p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      long long m = ((a[r][c] % p) + p) % p;
      if (!m) continue;
      for (std::size_t k = 0; k < cols; ++k) a[r][k] = ((a[r][k] - m * a[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

inline std::vector<std::vector<long long>> to_dense(const Matrix& m) {
  std::vector<std::vector<long long>> out(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.at(r, c);
  return out;
}

}  // namespace testing
