#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "supercoh/field.hpp"

namespace supercoh::gflin {

struct Entry {
  std::uint32_t col;
  Scalar value;
  bool operator==(const Entry&) const = default;
};

// Sorted by column, no zero values.
using SparseRow = std::vector<Entry>;

/// Matrix over GF(p) stored as compressed sparse rows.
///
/// Only nonzero entries are stored. Rows are kept sorted by column so that
/// two matrices with equal entries compare equal.
class Matrix {
public:
  Matrix(Field f, std::size_t rows, std::size_t cols);

  static Matrix identity(Field f, std::size_t n);
  static Matrix from_dense(Field f, const std::vector<Vec>& rows);
  static Matrix from_dense(Field f, std::size_t rows, std::size_t cols, const std::vector<long long>& row_major);
  static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols);
  static Matrix from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, Scalar v);
  void add_to(std::size_t r, std::size_t c, Scalar v);
  const SparseRow& row(std::size_t r) const { return data_[r]; }
  void set_row(std::size_t r, SparseRow row);
  void set_row_dense(std::size_t r, const Vec& v);
  Vec row_dense(std::size_t r) const;
  Vec column(std::size_t c) const;

  Vec apply(const Vec& x) const;
  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(Scalar c) const;
  Matrix power(unsigned k) const;

  bool is_zero() const;
  bool operator==(const Matrix& o) const;

  // Stacks rows of `below` under this matrix.
  Matrix vstack(const Matrix& below) const;
  std::vector<Vec> to_dense() const;

private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<SparseRow> data_;
};

void check_same_field(const Field& a, const Field& b);

struct RrefResult {
  Matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Subspace of GF(p)^n held by its reduced row echelon basis.
///
/// The basis is canonical, so equality of subspaces is equality of bases.
class Subspace {
public:
  Subspace(Field f, std::size_t ambient);

  static Subspace zero(Field f, std::size_t ambient) { return Subspace(f, ambient); }
  static Subspace full(Field f, std::size_t ambient);
  static Subspace span(Field f, std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace row_space(const Matrix& m);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vec> vectors() const;
  Vec vector(std::size_t i) const { return basis_.row_dense(i); }

  // v minus its projection along the basis onto pivot columns.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  // Coefficients of v in the echelon basis, or nullopt when v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;
  Vec combination(const Vec& coeffs) const;

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
  explicit Subspace(RrefResult r);

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace nullspace(const Matrix& m);
Subspace image(const Matrix& m);
std::optional<Vec> solve(const Matrix& m, const Vec& rhs);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, const Vec& v);
bool equals(const Subspace& a, const Subspace& b);
bool is_subspace_of(const Subspace& a, const Subspace& b);

// Image of a subspace under a linear map (matrix acting on columns).
Subspace map_subspace(const Matrix& m, const Subspace& s);

/// Quotient Z / B with canonical representatives.
///
/// Representatives form the echelon basis of the complement of B inside Z
/// made of vectors vanishing on the pivot columns of B.
class Quotient {
public:
  Quotient(Subspace z, Subspace b);

  std::size_t dim() const { return complement_.dim(); }
  const Subspace& numerator() const { return z_; }
  const Subspace& denominator() const { return b_; }
  std::vector<Vec> representatives() const { return complement_.vectors(); }
  Vec representative(std::size_t i) const { return complement_.vector(i); }

  // Class coordinates of v; throws UsageError when v is not in Z.
  Vec coordinates(const Vec& v) const;
  std::optional<Vec> try_coordinates(const Vec& v) const;
  Vec lift(const Vec& coords) const { return complement_.combination(coords); }

private:
  Subspace z_;
  Subspace b_;
  Subspace complement_;
};

}  // namespace supercoh::gflin
