#include "supercoh/matrix.hpp"

#include <algorithm>
#include <string>

namespace supercoh::gflin {

void check_same_field(const Field& a, const Field& b) {
  if (a != b)
    throw UsageError("mixed moduli: GF(" + std::to_string(a.p()) + ") vs GF(" + std::to_string(b.p()) + ")");
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({static_cast<std::uint32_t>(i), 1});
  return m;
}

Matrix Matrix::from_dense(Field f, const std::vector<Vec>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  return from_rows(f, cols, rows);
}

Matrix Matrix::from_dense(Field f, std::size_t rows, std::size_t cols, const std::vector<long long>& row_major) {
  if (row_major.size() != rows * cols) throw UsageError("from_dense: wrong entry count");
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      Scalar v = f.from_int(row_major[r * cols + c]);
      if (v != 0) m.data_[r].push_back({static_cast<std::uint32_t>(c), v});
    }
  return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row_dense(r, rows[r]);
  return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw UsageError("from_columns: column length mismatch");
    for (std::size_t r = 0; r < rows; ++r)
      if (cols[c][r] != 0) m.data_[r].push_back({static_cast<std::uint32_t>(c), cols[c][r]});
  }
  return m;
}

std::size_t Matrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw UsageError("matrix index out of range");
  const auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.col < col; });
  return (it != row.end() && it->col == c) ? it->value : 0;
}

void Matrix::set(std::size_t r, std::size_t c, Scalar v) {
  if (r >= rows_ || c >= cols_) throw UsageError("matrix index out of range");
  v %= field_.p();
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) {
    if (v == 0)
      row.erase(it);
    else
      it->value = v;
  } else if (v != 0) {
    row.insert(it, {static_cast<std::uint32_t>(c), v});
  }
}

void Matrix::add_to(std::size_t r, std::size_t c, Scalar v) {
  if (v == 0) return;
  set(r, c, field_.add(at(r, c), v));
}

void Matrix::set_row(std::size_t r, SparseRow row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i].col >= cols_ || row[i].value == 0 || (i > 0 && row[i - 1].col >= row[i].col))
      throw UsageError("set_row: row not sorted/nonzero/in range");
  }
  data_.at(r) = std::move(row);
}

void Matrix::set_row_dense(std::size_t r, const Vec& v) {
  if (v.size() != cols_) throw UsageError("set_row_dense: length mismatch");
  SparseRow row;
  for (std::size_t c = 0; c < v.size(); ++c)
    if (v[c] % field_.p() != 0) row.push_back({static_cast<std::uint32_t>(c), v[c] % field_.p()});
  data_.at(r) = std::move(row);
}

Vec Matrix::row_dense(std::size_t r) const {
  Vec v(cols_, 0);
  for (const auto& e : data_.at(r)) v[e.col] = e.value;
  return v;
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw UsageError("apply: vector length " + std::to_string(x.size()) + " != cols " + std::to_string(cols_));
  Vec y(rows_, 0);
  const std::uint64_t p = field_.p();
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (const auto& e : data_[r]) acc = (acc + static_cast<std::uint64_t>(e.value) * x[e.col]) % p;
    y[r] = static_cast<Scalar>(acc);
  }
  return y;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& e : data_[r]) t.data_[e.col].push_back({static_cast<std::uint32_t>(r), e.value});
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_same_field(field_, o.field_);
  if (cols_ != o.rows_) throw UsageError("matrix product: inner dimension mismatch");
  Matrix out(field_, rows_, o.cols_);
  Vec acc(o.cols_, 0);
  std::vector<std::uint32_t> touched;
  std::vector<char> mark(o.cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    touched.clear();
    for (const auto& a : data_[r]) {
      for (const auto& b : o.data_[a.col]) {
        if (!mark[b.col]) {
          mark[b.col] = 1;
          touched.push_back(b.col);
        }
        acc[b.col] = field_.add(acc[b.col], field_.mul(a.value, b.value));
      }
    }
    std::sort(touched.begin(), touched.end());
    auto& row = out.data_[r];
    for (auto c : touched) {
      if (acc[c] != 0) row.push_back({c, acc[c]});
      acc[c] = 0;
      mark[c] = 0;
    }
  }
  return out;
}

namespace {

SparseRow merge_rows(const Field& f, const SparseRow& a, const SparseRow& b, Scalar cb) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].col < a[i].col) {
      Scalar v = f.mul(cb, b[j].value);
      if (v != 0) out.push_back({b[j].col, v});
      ++j;
    } else {
      Scalar v = f.add(a[i].value, f.mul(cb, b[j].value));
      if (v != 0) out.push_back({a[i].col, v});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Matrix Matrix::operator+(const Matrix& o) const {
  check_same_field(field_, o.field_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw UsageError("matrix sum: shape mismatch");
  Matrix out(field_, rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) out.data_[r] = merge_rows(field_, data_[r], o.data_[r], 1);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_same_field(field_, o.field_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw UsageError("matrix difference: shape mismatch");
  Matrix out(field_, rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) out.data_[r] = merge_rows(field_, data_[r], o.data_[r], field_.p() - 1);
  return out;
}

Matrix Matrix::scaled(Scalar c) const {
  Matrix out(field_, rows_, cols_);
  c %= field_.p();
  if (c == 0) return out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out.data_[r] = data_[r];
    for (auto& e : out.data_[r]) e.value = field_.mul(e.value, c);
  }
  return out;
}

Matrix Matrix::power(unsigned k) const {
  if (rows_ != cols_) throw UsageError("matrix power of non-square matrix");
  Matrix result = identity(field_, rows_);
  Matrix base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const SparseRow& r) { return r.empty(); });
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::vstack(const Matrix& below) const {
  check_same_field(field_, below.field_);
  if (cols_ != below.cols_) throw UsageError("vstack: column mismatch");
  Matrix out(field_, rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(rows_));
  return out;
}

std::vector<Vec> Matrix::to_dense() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_dense(r));
  return out;
}

// ---------------------------------------------------------------------------
// Gaussian elimination

namespace {

/// Incremental row echelon builder.
///
/// Incoming rows are reduced in a dense scratch buffer against the existing
/// pivot rows in column order. Pivot rows are stored sparse while their fill
/// stays at or below 25% of the width and dense beyond that.
class Eliminator {
public:
  Eliminator(Field f, std::size_t cols) : f_(f), cols_(cols), pivot_row_(cols, -1), scratch_(cols, 0) {}

  bool insert(const SparseRow& row) {
    if (row.empty()) return false;
    for (const auto& e : row) scratch_[e.col] = e.value;
    return reduce_scratch(row.front().col);
  }

  bool insert_dense(const Vec& v) {
    std::size_t first = cols_;
    for (std::size_t c = 0; c < cols_; ++c) {
      scratch_[c] = v[c] % f_.p();
      if (scratch_[c] != 0 && first == cols_) first = c;
    }
    if (first == cols_) return false;
    return reduce_scratch(first);
  }

  std::size_t rank() const { return rows_.size(); }

  RrefResult finish() {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rows_[a].pivot < rows_[b].pivot; });

    // Back substitution, last pivot first; finished rows vanish on other pivots.
    for (std::size_t k = order.size(); k-- > 0;) {
      PivotRow& pr = rows_[order[k]];
      load(pr);
      for (std::size_t c = pr.pivot + 1; c < cols_; ++c) {
        if (scratch_[c] == 0) continue;
        int j = pivot_row_[c];
        if (j < 0) continue;
        subtract(rows_[static_cast<std::size_t>(j)], scratch_[c]);
      }
      store(pr, pr.pivot);
    }

    Matrix reduced(f_, rows_.size(), cols_);
    std::vector<std::size_t> pivots;
    for (std::size_t k = 0; k < order.size(); ++k) {
      const PivotRow& pr = rows_[order[k]];
      reduced.set_row(k, to_sparse(pr));
      pivots.push_back(pr.pivot);
    }
    return RrefResult{std::move(reduced), rows_.size(), std::move(pivots)};
  }

private:
  struct PivotRow {
    std::size_t pivot = 0;
    bool dense = false;
    SparseRow sparse;
    Vec values;  // dense storage, indexed from `pivot`
  };

  bool reduce_scratch(std::size_t first) {
    for (std::size_t c = first; c < cols_; ++c) {
      Scalar v = scratch_[c];
      if (v == 0) continue;
      int j = pivot_row_[c];
      if (j >= 0) {
        subtract(rows_[static_cast<std::size_t>(j)], v);
        continue;
      }
      Scalar inv = f_.inv(v);
      for (std::size_t k = c; k < cols_; ++k)
        if (scratch_[k] != 0) scratch_[k] = f_.mul(scratch_[k], inv);
      PivotRow pr;
      store(pr, c);
      pivot_row_[c] = static_cast<int>(rows_.size());
      rows_.push_back(std::move(pr));
      return true;
    }
    return false;
  }

  // scratch -= factor * row
  void subtract(const PivotRow& row, Scalar factor) {
    Scalar m = f_.neg(factor);
    if (row.dense) {
      for (std::size_t k = 0; k < row.values.size(); ++k)
        if (row.values[k] != 0) scratch_[row.pivot + k] = f_.add(scratch_[row.pivot + k], f_.mul(m, row.values[k]));
    } else {
      for (const auto& e : row.sparse) scratch_[e.col] = f_.add(scratch_[e.col], f_.mul(m, e.value));
    }
  }

  void load(const PivotRow& row) {
    if (row.dense) {
      for (std::size_t k = 0; k < row.values.size(); ++k) scratch_[row.pivot + k] = row.values[k];
    } else {
      for (const auto& e : row.sparse) scratch_[e.col] = e.value;
    }
  }

  // Moves scratch[from..] into `row` and clears scratch.
  void store(PivotRow& row, std::size_t from) {
    std::size_t nnz = 0;
    for (std::size_t k = from; k < cols_; ++k)
      if (scratch_[k] != 0) ++nnz;
    row.pivot = from;
    row.sparse.clear();
    row.values.clear();
    row.dense = nnz * 4 > cols_;
    if (row.dense) {
      row.values.assign(scratch_.begin() + static_cast<std::ptrdiff_t>(from), scratch_.end());
    } else {
      row.sparse.reserve(nnz);
      for (std::size_t k = from; k < cols_; ++k)
        if (scratch_[k] != 0) row.sparse.push_back({static_cast<std::uint32_t>(k), scratch_[k]});
    }
    std::fill(scratch_.begin() + static_cast<std::ptrdiff_t>(from), scratch_.end(), 0);
  }

  SparseRow to_sparse(const PivotRow& row) const {
    if (!row.dense) return row.sparse;
    SparseRow out;
    for (std::size_t k = 0; k < row.values.size(); ++k)
      if (row.values[k] != 0) out.push_back({static_cast<std::uint32_t>(row.pivot + k), row.values[k]});
    return out;
  }

  Field f_;
  std::size_t cols_;
  std::vector<int> pivot_row_;
  std::vector<PivotRow> rows_;
  Vec scratch_;
};

}  // namespace

RrefResult rref(const Matrix& m) {
  Eliminator el(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    el.insert(m.row(r));
    if (el.rank() == m.cols()) break;
  }
  return el.finish();
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

// ---------------------------------------------------------------------------
// Subspaces

Subspace::Subspace(Field f, std::size_t ambient) : basis_(f, 0, ambient) {}

Subspace::Subspace(RrefResult r) : basis_(std::move(r.reduced)), pivots_(std::move(r.pivots)) {}

Subspace Subspace::full(Field f, std::size_t ambient) { return Subspace(rref(Matrix::identity(f, ambient))); }

Subspace Subspace::span(Field f, std::size_t ambient, const std::vector<Vec>& vectors) {
  Eliminator el(f, ambient);
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw UsageError("span: vector length mismatch");
    el.insert_dense(v);
  }
  return Subspace(el.finish());
}

Subspace Subspace::row_space(const Matrix& m) { return Subspace(rref(m)); }

std::vector<Vec> Subspace::vectors() const { return basis_.to_dense(); }

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_dim()) throw UsageError("reduce: ambient dimension mismatch");
  const Field& f = field();
  Vec out = v;
  for (auto& s : out) s %= f.p();
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Scalar c = out[pivots_[i]];
    if (c == 0) continue;
    Scalar m = f.neg(c);
    for (const auto& e : basis_.row(i)) out[e.col] = f.add(out[e.col], f.mul(m, e.value));
  }
  return out;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  Vec c(dim());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]] % field().p();
  return c;
}

Vec Subspace::combination(const Vec& coeffs) const {
  if (coeffs.size() != dim()) throw UsageError("combination: coefficient count mismatch");
  Vec out(ambient_dim(), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (const auto& e : basis_.row(i)) out[e.col] = field().add(out[e.col], field().mul(coeffs[i], e.value));
  }
  return out;
}

bool Subspace::operator==(const Subspace& o) const { return basis_ == o.basis_; }

Subspace nullspace(const Matrix& m) {
  RrefResult r = rref(m);
  const Field& f = m.field();
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto c : r.pivots) is_pivot[c] = 1;
  std::vector<Vec> vectors;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) {
      Scalar a = r.reduced.at(i, free);
      if (a != 0) v[r.pivots[i]] = f.neg(a);
    }
    vectors.push_back(std::move(v));
  }
  return Subspace::span(f, m.cols(), vectors);
}

Subspace image(const Matrix& m) { return Subspace::row_space(m.transpose()); }

std::optional<Vec> solve(const Matrix& m, const Vec& rhs) {
  if (rhs.size() != m.rows()) throw UsageError("solve: rhs length mismatch");
  const Field& f = m.field();
  Matrix aug(f, m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseRow row = m.row(r);
    if (rhs[r] % f.p() != 0) row.push_back({static_cast<std::uint32_t>(m.cols()), rhs[r] % f.p()});
    aug.set_row(r, std::move(row));
  }
  RrefResult r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols(), 0);
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.reduced.at(i, m.cols());
  return x;
}

namespace {
void check_ambient(const Subspace& a, const Subspace& b) {
  check_same_field(a.field(), b.field());
  if (a.ambient_dim() != b.ambient_dim()) throw UsageError("subspace ambient dimension mismatch");
}
}  // namespace

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  check_ambient(a, b);
  return Subspace::row_space(a.basis().vstack(b.basis()));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  check_ambient(a, b);
  const Field& f = a.field();
  std::size_t da = a.dim(), db = b.dim(), n = a.ambient_dim();
  // lambda*A = mu*B  <=>  [A^T | -B^T] (lambda, mu) = 0
  Matrix stacked(f, n, da + db);
  Matrix at = a.basis().transpose();
  Matrix bt = b.basis().transpose();
  for (std::size_t r = 0; r < n; ++r) {
    SparseRow row = at.row(r);
    for (const auto& e : bt.row(r)) row.push_back({static_cast<std::uint32_t>(da + e.col), f.neg(e.value)});
    stacked.set_row(r, std::move(row));
  }
  Subspace kernel = nullspace(stacked);
  std::vector<Vec> vectors;
  for (const auto& k : kernel.vectors()) {
    Vec lambda(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(da));
    vectors.push_back(a.combination(lambda));
  }
  return Subspace::span(f, n, vectors);
}

bool contains(const Subspace& a, const Vec& v) { return a.contains(v); }

bool equals(const Subspace& a, const Subspace& b) {
  check_ambient(a, b);
  return a == b;
}

bool is_subspace_of(const Subspace& a, const Subspace& b) {
  check_ambient(a, b);
  for (const auto& v : a.vectors())
    if (!b.contains(v)) return false;
  return true;
}

Subspace map_subspace(const Matrix& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim()) throw UsageError("map_subspace: dimension mismatch");
  std::vector<Vec> images;
  for (const auto& v : s.vectors()) images.push_back(m.apply(v));
  return Subspace::span(m.field(), m.rows(), images);
}

// ---------------------------------------------------------------------------
// Quotients

namespace {
Subspace canonical_complement(const Subspace& z, const Subspace& b) {
  std::vector<Vec> reduced;
  for (const auto& v : z.vectors()) reduced.push_back(b.reduce(v));
  return Subspace::span(z.field(), z.ambient_dim(), reduced);
}
}  // namespace

Quotient::Quotient(Subspace z, Subspace b)
    : z_(std::move(z)), b_(std::move(b)), complement_(canonical_complement(z_, b_)) {
  if (!is_subspace_of(b_, z_)) throw InvariantViolation("quotient: denominator is not contained in numerator");
  if (complement_.dim() + b_.dim() != z_.dim()) throw InvariantViolation("quotient: dimension count mismatch");
}

std::optional<Vec> Quotient::try_coordinates(const Vec& v) const {
  if (!z_.contains(v)) return std::nullopt;
  auto c = complement_.coordinates(b_.reduce(v));
  if (!c) throw InvariantViolation("quotient: reduced vector left the complement");
  return c;
}

Vec Quotient::coordinates(const Vec& v) const {
  auto c = try_coordinates(v);
  if (!c) throw UsageError("quotient: vector is not in the numerator subspace");
  return *c;
}

}  // namespace supercoh::gflin
