#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "supercoh/errors.hpp"

namespace supercoh::gflin {

using Scalar = std::uint32_t;
using Vec = std::vector<Scalar>;

/// Prime field GF(p) with p an odd prime.
///
/// Elements are plain integers in [0, p). The field object is a small value
/// type carried by every matrix so that mixing moduli can be detected.
class Field {
public:
  explicit Field(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  Scalar add(Scalar a, Scalar b) const {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
  Scalar pow(Scalar a, std::uint64_t e) const;
  Scalar from_int(long long v) const;
  // Representative in (-p/2, p/2], used for printing.
  long long to_signed(Scalar a) const;

  // (-1)^k as a field element.
  Scalar sign(unsigned k) const { return (k & 1U) ? p_ - 1 : 1; }
  Scalar half() const { return (p_ + 1) / 2; }

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

  // y += c * x
  void axpy(Vec& y, Scalar c, const Vec& x) const;
  Vec scaled(const Vec& x, Scalar c) const;
  Vec added(const Vec& a, const Vec& b) const;
  Vec subtracted(const Vec& a, const Vec& b) const;

private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);
bool is_zero(const Vec& v);
Vec unit_vector(std::size_t n, std::size_t i);

}  // namespace supercoh::gflin
