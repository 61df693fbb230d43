#include "supercoh/field.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

namespace supercoh::gflin {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(std::uint32_t p) : p_(p) {
  if (p < 3 || !is_prime(p) || p > 65521)
    throw UsageError("p must be an odd prime (got " + std::to_string(p) + ")");
}

Scalar Field::inv(Scalar a) const {
  if (a == 0) throw UsageError("division by zero in GF(" + std::to_string(p_) + ")");
  // extended Euclid
  long long t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  return from_int(t);
}

Scalar Field::pow(Scalar a, std::uint64_t e) const {
  Scalar result = 1 % p_;
  Scalar base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

Scalar Field::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Scalar>(r);
}

long long Field::to_signed(Scalar a) const {
  return a > p_ / 2 ? static_cast<long long>(a) - p_ : a;
}

void Field::axpy(Vec& y, Scalar c, const Vec& x) const {
  if (c == 0) return;
  if (y.size() != x.size()) throw UsageError("axpy: length mismatch");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) y[i] = add(y[i], mul(c, x[i]));
}

Vec Field::scaled(const Vec& x, Scalar c) const {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = mul(c, x[i]);
  return out;
}

Vec Field::added(const Vec& a, const Vec& b) const {
  Vec out = a;
  axpy(out, 1, b);
  return out;
}

Vec Field::subtracted(const Vec& a, const Vec& b) const {
  Vec out = a;
  axpy(out, p_ - 1, b);
  return out;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Scalar s) { return s == 0; });
}

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v.at(i) = 1;
  return v;
}

}  // namespace supercoh::gflin
