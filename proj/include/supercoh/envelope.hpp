#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "supercoh/super.hpp"

namespace supercoh::envelope {

using gflin::Field;
using gflin::Matrix;
using gflin::Scalar;
using gflin::Vec;
using super::LieSuperAlgebra;
using super::Representation;
using super::ValidationReport;

/// PBW monomial: exponents per PBW variable (positions in the algebra's
/// variable order, not basis indices).
struct Monomial {
  std::vector<std::uint16_t> exps;

  unsigned degree() const;
  bool operator==(const Monomial&) const = default;
};

/// Graded order: lower degree first, then larger exponent on earlier
/// variables first (x1 before x2).
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

using Terms = std::map<Monomial, Scalar, MonomialLess>;

class UAlgebra;

struct UElement {
  const UAlgebra* algebra = nullptr;
  Terms terms;

  bool is_zero() const { return terms.empty(); }
  Scalar coefficient(const Monomial& m) const;
  bool operator==(const UElement& o) const { return algebra == o.algebra && terms == o.terms; }
};

enum class Mode { restricted, truncated };

/// Restricted enveloping algebra u(g), or U(g) truncated at a degree bound.
///
/// Products are computed by straightening: adjacent generators out of PBW
/// order are swapped with the Koszul sign and a bracket correction, odd
/// squares become half brackets and, in restricted mode, p-th powers of even
/// generators become their p-map images. Products are memoized per algebra;
/// the cache is guarded so concurrent readers see a pure function.
class UAlgebra {
public:
  // var_order[v] = basis index of the v-th PBW variable; empty = ascending.
  UAlgebra(LieSuperAlgebra g, Mode mode, unsigned degree_bound = 0, std::vector<std::size_t> var_order = {});
  UAlgebra(const UAlgebra&) = delete;
  UAlgebra& operator=(const UAlgebra&) = delete;

  const LieSuperAlgebra& lie() const { return g_; }
  const Field& field() const { return g_.field; }
  Mode mode() const { return mode_; }
  unsigned degree_bound() const { return degree_bound_; }
  std::size_t num_vars() const { return var_to_basis_.size(); }
  std::size_t basis_of_var(std::size_t v) const { return var_to_basis_.at(v); }
  std::size_t var_of_basis(std::size_t i) const { return basis_to_var_.at(i); }
  bool var_is_odd(std::size_t v) const { return g_.parity(var_to_basis_.at(v)) == 1; }
  unsigned parity(const Monomial& m) const;

  // Restricted mode: all p^{n0} 2^{n1} monomials; truncated mode: up to the bound.
  const std::vector<Monomial>& pbw_basis() const { return basis_; }
  std::vector<Monomial> aug_ideal_basis() const;
  std::size_t dim() const { return basis_.size(); }
  // Position in pbw_basis(); throws if absent.
  std::size_t index_of(const Monomial& m) const;

  // Basis index word of a monomial in PBW order, e.g. x^2 y -> [x, x, y].
  std::vector<std::size_t> word(const Monomial& m) const;

  UElement zero() const { return UElement{this, {}}; }
  UElement one() const;
  UElement monomial(const Monomial& m, Scalar c = 1) const;
  UElement generator(std::size_t basis_index) const;
  UElement embed(const Vec& v) const;
  UElement from_coords(const Vec& coords) const;
  Vec to_coords(const UElement& u) const;

  UElement add(const UElement& a, const UElement& b) const;
  UElement sub(const UElement& a, const UElement& b) const;
  UElement scale(const UElement& a, Scalar c) const;
  UElement multiply(const UElement& a, const UElement& b) const;
  UElement power(const UElement& a, unsigned k) const;
  // w z - z w (plain commutator)
  UElement d_w(const UElement& w, const UElement& z) const;

  // Product of two PBW basis monomials as coordinates (restricted mode).
  const std::vector<std::pair<std::uint32_t, Scalar>>& basis_product(std::size_t i, std::size_t j) const;

  std::string to_string(const UElement& u) const;

private:
  void check(const UElement& u) const;
  Terms mul_monomials(const Monomial& a, const Monomial& b) const;
  const Terms& mul_gen(const Monomial& a, std::size_t var) const;
  Terms mul_vec(const Monomial& a, const Vec& v) const;
  void accumulate(Terms& into, const Terms& t, Scalar c) const;
  void build_basis();

  LieSuperAlgebra g_;
  Mode mode_;
  unsigned degree_bound_;
  std::vector<std::size_t> var_to_basis_;
  std::vector<std::size_t> basis_to_var_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t, MonomialLess> index_;

  mutable std::recursive_mutex mutex_;
  mutable std::unordered_map<std::string, Terms> gen_cache_;
  mutable std::unordered_map<std::string, Terms> pair_cache_;
  mutable std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> table_;
  mutable std::vector<char> table_ready_;
};

/// Identities (1) sum_i x^i y x^{p-1-i} = (ad x)^{p-1}(y) and
/// (2) sum_i x^i D_x^{l-1-i}(y) = sum_j (-1)^j C(l, j+1) x^{l-1-j} y x^j,
/// evaluated in u(g) on random even x, random y and 2 <= l <= p.
ValidationReport check_u_identities(const UAlgebra& u, unsigned trials, std::mt19937_64& rng);

// Identity (1) with the right side read literally as D_{x^{p-1}}(y).
bool commutator_literal_holds(const UAlgebra& u, const UElement& x, const UElement& y);
bool commutator_identity_holds(const UAlgebra& u, const UElement& x, const UElement& y);
bool binomial_identity_holds(const UAlgebra& u, const UElement& x, const UElement& y, unsigned l);

/// Extends a map on generators multiplicatively to PBW monomials:
/// image(x_{i1}...x_{ik}) = f(x_{i1})...f(x_{ik}) straightened in dst.
/// f[i] is the image of basis element i of src's Lie algebra (dst coordinates).
Matrix algebra_hom_extend(const UAlgebra& src, const UAlgebra& dst, const std::vector<Vec>& f);
Matrix linear_section_extend(const UAlgebra& src, const UAlgebra& dst, const std::vector<Vec>& psi);

/// Where each basis element of E = g ⊕ M lives.
struct IdealSplit {
  std::vector<std::ptrdiff_t> g_index;  // E basis -> g basis or -1
  std::vector<std::ptrdiff_t> m_index;  // E basis -> M coordinate or -1
};

/// gamma: u(E)M -> M, u m -> phi'(u).m. Requires the PBW order of u(E) to
/// put every g-generator before every M-generator and the g-generators in
/// the basis order of g.
Vec gamma_map(const UAlgebra& u_e, const IdealSplit& split, const Representation& m, const UElement& w);

}  // namespace supercoh::envelope
