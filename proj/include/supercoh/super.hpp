#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "supercoh/matrix.hpp"

namespace supercoh::super {

using gflin::Field;
using gflin::Matrix;
using gflin::Scalar;
using gflin::Subspace;
using gflin::Vec;

/// Z/2-graded space given by basis names; even names come first.
class SuperSpace {
public:
  SuperSpace() = default;
  SuperSpace(std::vector<std::string> even, std::vector<std::string> odd);

  std::size_t dim() const { return names_.size(); }
  std::size_t even_dim() const { return n_even_; }
  std::size_t odd_dim() const { return names_.size() - n_even_; }
  unsigned parity(std::size_t i) const { return i < n_even_ ? 0U : 1U; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  // npos when absent.
  std::size_t index_of(const std::string& name) const;
  // Parity of a vector; throws when the vector is not homogeneous. Zero is even.
  unsigned parity_of(const Vec& v) const;
  bool is_even_vector(const Vec& v) const;

  bool operator==(const SuperSpace&) const = default;

private:
  std::vector<std::string> names_;
  std::size_t n_even_ = 0;
};

/// Index maps placing A and B inside A ⊕ B with evens (A0, B0) before odds (A1, B1).
struct SumLayout {
  SuperSpace space;
  std::vector<std::size_t> first;   // A index -> sum index
  std::vector<std::size_t> second;  // B index -> sum index
  std::vector<std::ptrdiff_t> first_of;   // sum index -> A index or -1
  std::vector<std::ptrdiff_t> second_of;  // sum index -> B index or -1

  Vec inject_first(const Vec& a) const;
  Vec inject_second(const Vec& b) const;
  Vec project_first(const Vec& s) const;
  Vec project_second(const Vec& s) const;
};

SumLayout direct_sum(const SuperSpace& a, const SuperSpace& b, const std::string& second_prefix = "");

/// Restricted Lie superalgebra given by structure constants and a p-map on
/// the even basis.
struct LieSuperAlgebra {
  Field field;
  SuperSpace space;
  // bracket[i][j] = [x_i, x_j] in basis coordinates
  std::vector<std::vector<Vec>> bracket;
  // pmap[i] = x_i^[p] for even i (coordinates in the full basis)
  std::vector<Vec> pmap;

  LieSuperAlgebra(Field f, SuperSpace s);

  std::size_t dim() const { return space.dim(); }
  std::size_t even_dim() const { return space.even_dim(); }
  unsigned parity(std::size_t i) const { return space.parity(i); }
  Vec basis(std::size_t i) const { return gflin::unit_vector(dim(), i); }
  Vec zero() const { return Vec(dim(), 0); }

  // Sets [x_i,x_j] = v and completes [x_j,x_i] by super skew-symmetry.
  void set_bracket(std::size_t i, std::size_t j, const Vec& v);
  Vec bracket_of(const Vec& u, const Vec& v) const;
  // ad(v) as a matrix acting on coordinate columns.
  Matrix ad(const Vec& v) const;
};

struct Violation {
  std::string axiom;
  std::vector<std::size_t> indices;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string axiom, std::vector<std::size_t> indices, std::string detail = {});
  void append(const ValidationReport& other);
};

ValidationReport validate_lie_super(const LieSuperAlgebra& g);

/// s_1..s_{p-1}(x, y): i*s_i is the coefficient of lambda^{i-1} in
/// (ad(lambda x + y))^{p-1}(x).
std::vector<Vec> jacobson_si(const LieSuperAlgebra& g, const Vec& x, const Vec& y);

/// v^[p] for an arbitrary even vector, folding the basis terms in ascending
/// (or descending) index order through (x+y)^[p] = x^[p] + y^[p] + sum s_i(x,y).
Vec pmap_apply(const LieSuperAlgebra& g, const Vec& v, bool descending = false);

ValidationReport validate_pmap(const LieSuperAlgebra& g);

/// Graded action of g on a super space, rho[i] = action of x_i.
struct Representation {
  SuperSpace target;
  std::vector<Matrix> rho;
  // Set when the module was forced to be a strongly abelian coefficient
  // algebra (zero bracket, zero p-map).
  bool strongly_abelian_coerced = false;

  std::size_t dim() const { return target.dim(); }
  Matrix action(const Vec& x) const;
  Vec act(std::size_t i, const Vec& m) const { return rho.at(i).apply(m); }
};

Representation trivial_module(const LieSuperAlgebra& g, std::size_t even_dim = 1, std::size_t odd_dim = 0);
Representation adjoint_module(const LieSuperAlgebra& g);
// (x.φ)(m) = -(-1)^{|x||φ|} φ(x.m) on the dual basis.
Representation dual_module(const LieSuperAlgebra& g, const Representation& m);

ValidationReport validate_module(const LieSuperAlgebra& g, const Representation& rep, bool restricted);

/// Hom_k(N, K) with basis the matrix units E_{k,n} (even units first).
struct HomModule {
  Representation module;
  // unit[i] = (row in K, column in N) of the i-th basis element
  std::vector<std::pair<std::size_t, std::size_t>> unit;
  std::size_t k_dim = 0;
  std::size_t n_dim = 0;

  Matrix to_matrix(const Vec& coords, const Field& f) const;
  Vec from_matrix(const Matrix& m) const;
};

HomModule hom_module(const LieSuperAlgebra& g, const Representation& n, const Representation& k);

struct InvariantSpaces {
  Subspace all;   // M^g
  Subspace even;  // M_0^g
};

InvariantSpaces invariants(const LieSuperAlgebra& g, const Representation& m);

/// S(g_0, W): p-semilinear maps from the even part into W. Over GF(p)
/// these are the linear maps; coordinates are (even basis i, basis j of W)
/// flattened as i * dim W + j.
struct SemilinearSpace {
  std::size_t source_dim;
  Subspace target;

  std::size_t dim() const { return source_dim * target.dim(); }
  // Values on the even basis (ambient coordinates) of the k-th basis map.
  std::vector<Vec> basis_map(std::size_t k) const;
  // Coordinates of a map given by its values; nullopt if a value leaves W.
  std::optional<Vec> coordinates(const std::vector<Vec>& values) const;
};

SemilinearSpace semilinear_space(std::size_t even_dim, Subspace target);

/// Strongly abelian semidirect product g ⋉ M on the layout direct_sum(g, M):
/// [(x1,m1),(x2,m2)] = ([x1,x2], x1.m2 - (-1)^{|x1||x2|} x2.m1),
/// (x,0)^[p] = (x^[p], 0), (0,m)^[p] = 0.
LieSuperAlgebra semidirect(const LieSuperAlgebra& g, const Representation& m);

// Matrix of the action of the PBW-ordered product of basis elements.
Matrix monomial_action(const Representation& rep, const std::vector<std::size_t>& word);

}  // namespace supercoh::super
