#pragma once

#include <string>
#include <vector>

#include "supercoh/super.hpp"

namespace supercoh::catalog {

using super::LieSuperAlgebra;
using super::Representation;

// <x>, even, x^[p] = 0 (nil) or x^[p] = x (torus).
LieSuperAlgebra line(const gflin::Field& f, bool torus);
// Super Heisenberg <z | y>, [y,y] = z, z^[p] = 0.
LieSuperAlgebra super_heisenberg(const gflin::Field& f);
// <h, x>, [h,x] = x, h^[p] = h, x^[p] = 0.
LieSuperAlgebra two_dim_solvable(const gflin::Field& f);
// <x1, x2> abelian with x1^[p] = a1 x1, x2^[p] = a2 x2.
LieSuperAlgebra abelian_plane(const gflin::Field& f, gflin::Scalar a1, gflin::Scalar a2);
// < | y>, purely odd, [y,y] = 0.
LieSuperAlgebra odd_line(const gflin::Field& f);
// <x | y>, [x,y] = y, x^[p] = x.
LieSuperAlgebra mixed_line(const gflin::Field& f);

struct Entry {
  std::string id;
  std::string description;
  LieSuperAlgebra g;
  std::string module_name;
  Representation m;
};

// Algebra/module pairs run end to end by the example runner.
std::vector<Entry> entries();
const Entry* find(const std::vector<Entry>& all, const std::string& id);

}  // namespace supercoh::catalog
