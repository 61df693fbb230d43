#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "supercoh/envelope.hpp"
#include "supercoh/super.hpp"

namespace supercoh::cohomology {

using gflin::Field;
using gflin::Matrix;
using gflin::Quotient;
using gflin::Scalar;
using gflin::Subspace;
using gflin::Vec;
using super::LieSuperAlgebra;
using super::Representation;

/// Basis functional of a cochain space: the argument tuple and the module
/// coordinate it returns.
struct Tuple {
  std::vector<std::uint32_t> args;
  std::uint32_t m = 0;
};

/// Super Chevalley-Eilenberg complex C^n(g, M) for n <= 3.
///
/// Cochains are even maps on Λ(g_0) ⊗ S(g_1). The basis of C^n consists of
/// canonical tuples (strictly increasing even indices, weakly increasing
/// odd indices) paired with a module coordinate of the same total parity.
class LieComplex {
public:
  static constexpr unsigned max_degree = 3;

  LieComplex(LieSuperAlgebra g, Representation m);

  const LieSuperAlgebra& lie() const { return g_; }
  const Representation& module() const { return m_; }
  const Field& field() const { return g_.field; }

  std::size_t dim(unsigned n) const { return basis_.at(n).size(); }
  const std::vector<Tuple>& basis(unsigned n) const { return basis_.at(n); }
  std::optional<std::size_t> index_of(unsigned n, const std::vector<std::uint32_t>& args, std::uint32_t m) const;

  // δ_n : C^n -> C^{n+1}, acting on coordinate columns; n <= 2.
  const Matrix& differential(unsigned n) const;
  // Same map written with separate even/odd sums.
  Matrix differential_split(unsigned n) const;

  // f(x_{a1}, ..., x_{an}) for basis indices in any order.
  Vec eval(unsigned n, const Vec& f, const std::vector<std::size_t>& args) const;
  // Multilinear extension to arbitrary vectors (n = 1, 2).
  Vec eval1(const Vec& f, const Vec& v) const;
  Vec eval2(const Vec& f, const Vec& u, const Vec& v) const;
  // Cochain whose value on each canonical tuple is fn(args).
  Vec from_function(unsigned n, const std::function<Vec(const std::vector<std::size_t>&)>& fn) const;

private:
  // Sign and canonical order of an argument list; nullopt when the value is forced to 0.
  std::optional<std::pair<Scalar, std::vector<std::uint32_t>>> canonical(std::vector<std::uint32_t> args) const;
  Matrix build_unified(unsigned n) const;

  LieSuperAlgebra g_;
  Representation m_;
  std::array<std::vector<Tuple>, max_degree + 1> basis_;
  std::array<std::map<std::vector<std::uint32_t>, std::size_t>, max_degree + 1> index_;
  mutable std::mutex mutex_;
  mutable std::array<std::unique_ptr<Matrix>, max_degree> diff_;
};

/// Normalized bar complex of u(g)^+ with coefficients in M, n <= 3.
///
/// Arguments are positions in the augmentation ideal basis (PBW index - 1).
/// δf(s1..s_{n+1}) = s1.f(s2..) + sum_i (-1)^i f(.., s_i s_{i+1}, ..).
class BarComplex {
public:
  static constexpr unsigned max_degree = 3;

  BarComplex(LieSuperAlgebra g, Representation m);

  const envelope::UAlgebra& algebra() const { return *u_; }
  const LieSuperAlgebra& lie() const { return u_->lie(); }
  const Representation& module() const { return m_; }
  const Field& field() const { return u_->field(); }
  std::size_t aug_dim() const { return u_->dim() - 1; }
  // aug position of the generator x_i
  std::uint32_t generator_position(std::size_t i) const;

  std::size_t dim(unsigned n) const { return basis_.at(n).size(); }
  const std::vector<Tuple>& basis(unsigned n) const { return basis_.at(n); }
  std::optional<std::size_t> index_of(unsigned n, const std::vector<std::uint32_t>& args, std::uint32_t m) const;

  const Matrix& differential(unsigned n) const;

  // Action of the aug basis element at position a on M.
  const Matrix& action(std::uint32_t a) const { return actions_.at(a); }
  // Value on basis arguments (aug positions).
  Vec eval(unsigned n, const Vec& f, const std::vector<std::uint32_t>& args) const;
  // Multilinear extension to elements given by full u(g) coordinates; the
  // unit coordinate must vanish.
  Vec eval1(const Vec& f, const Vec& u) const;
  Vec eval2(const Vec& f, const Vec& u, const Vec& v) const;
  Vec from_function(unsigned n, const std::function<Vec(const std::vector<std::uint32_t>&)>& fn) const;

private:
  Matrix build(unsigned n) const;
  std::size_t flat(const std::vector<std::uint32_t>& args, std::uint32_t m) const;

  std::unique_ptr<envelope::UAlgebra> u_;
  Representation m_;
  std::vector<Matrix> actions_;
  std::vector<unsigned> parity_;  // parity of each aug basis element
  std::array<std::vector<Tuple>, max_degree + 1> basis_;
  std::array<std::vector<std::int64_t>, max_degree + 1> index_;  // flat key -> basis index or -1
  mutable std::mutex mutex_;
  mutable std::array<std::unique_ptr<Matrix>, max_degree> diff_;
};

enum class Kind { lie, restricted };

struct CohomologyResult {
  unsigned n;
  Kind kind;
  Quotient h;  // Z / B

  const Subspace& z() const { return h.numerator(); }
  const Subspace& b() const { return h.denominator(); }
  std::size_t dim() const { return h.dim(); }
  std::vector<Vec> representatives() const { return h.representatives(); }
};

CohomologyResult lie_cohomology(const LieComplex& c, unsigned n);
CohomologyResult restricted_cohomology(const BarComplex& c, unsigned n);

/// (-1)^{σ̄(1)+...+σ̄(n)} with σ̄(i) = #{j < n0 : j not among σ(0..i-1), j < σ(i)};
/// sigma is a permutation of 0..n-1.
int sgn_marked(const std::vector<std::size_t>& sigma, std::size_t n0);

/// f -> f' from associative to Lie cochains, n <= 2, as a matrix C^n_bar -> C^n_lie.
Matrix comparison_matrix(const BarComplex& bar, const LieComplex& lie, unsigned n);

/// Lie 1-cocycles with ρ(x)^{p-1} f(x) = f(x^[p]) for x running over the even
/// basis and all pairwise sums of even basis elements, modulo B^1.
CohomologyResult h1_star_via_prop32(const LieComplex& c);

/// Linear map f -> (ρ(v)^{p-1} f(v) - f(v^[p])) from C^1 into M.
Matrix restrictedness_defect(const LieComplex& c, const Vec& v);

}  // namespace supercoh::cohomology
