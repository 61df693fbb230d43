#include "supercoh/catalog.hpp"

namespace supercoh::catalog {

using gflin::Field;
using gflin::Matrix;
using gflin::Vec;
using super::SuperSpace;

LieSuperAlgebra line(const Field& f, bool torus) {
  LieSuperAlgebra g(f, SuperSpace({"x"}, {}));
  g.pmap[0] = Vec{torus ? 1U : 0U};
  return g;
}

LieSuperAlgebra super_heisenberg(const Field& f) {
  LieSuperAlgebra g(f, SuperSpace({"z"}, {"y"}));
  g.set_bracket(1, 1, Vec{1, 0});
  return g;
}

LieSuperAlgebra two_dim_solvable(const Field& f) {
  LieSuperAlgebra g(f, SuperSpace({"h", "x"}, {}));
  g.set_bracket(0, 1, Vec{0, 1});
  g.pmap[0] = Vec{1, 0};
  return g;
}

LieSuperAlgebra abelian_plane(const Field& f, gflin::Scalar a1, gflin::Scalar a2) {
  LieSuperAlgebra g(f, SuperSpace({"x1", "x2"}, {}));
  g.pmap[0] = Vec{a1 % f.p(), 0};
  g.pmap[1] = Vec{0, a2 % f.p()};
  return g;
}

LieSuperAlgebra odd_line(const Field& f) {
  return LieSuperAlgebra(f, SuperSpace({}, {"y"}));
}

LieSuperAlgebra mixed_line(const Field& f) {
  LieSuperAlgebra g(f, SuperSpace({"x"}, {"y"}));
  g.set_bracket(0, 1, Vec{0, 1});
  g.pmap[0] = Vec{1, 0};
  return g;
}

namespace {

Entry make(std::string id, std::string description, LieSuperAlgebra g, std::string module_name, Representation m) {
  return Entry{std::move(id), std::move(description), std::move(g), std::move(module_name), std::move(m)};
}

}  // namespace

std::vector<Entry> entries() {
  std::vector<Entry> out;
  for (unsigned p : {3U, 5U}) {
    Field f(p);
    std::string sp = "-p" + std::to_string(p);
    auto a1 = line(f, false);
    out.push_back(make("A1" + sp, "<x>, x^[p] = 0, trivial k", a1, "k", super::trivial_module(a1)));
    auto a2 = line(f, true);
    out.push_back(make("A2" + sp, "torus <x>, x^[p] = x, trivial k", a2, "k", super::trivial_module(a2)));
    auto a3 = super_heisenberg(f);
    out.push_back(make("A3" + sp, "super Heisenberg [y,y] = z, trivial k", a3, "k", super::trivial_module(a3)));
    if (p == 5)
      out.push_back(make("A3-odd" + sp, "super Heisenberg with an odd trivial line", a3, "odd-k",
                         super::trivial_module(a3, 0, 1)));
  }
  Field f3(3);
  auto a4 = two_dim_solvable(f3);
  out.push_back(make("A4-p3", "[h,x] = x, h^[p] = h, x^[p] = 0, trivial k", a4, "k", super::trivial_module(a4)));
  out.push_back(make("A4-adjoint-p3", "[h,x] = x with the adjoint module", a4, "adjoint", super::adjoint_module(a4)));
  out.push_back(make("A4-coadjoint-p3", "[h,x] = x with the coadjoint module", a4, "coadjoint",
                     super::dual_module(a4, super::adjoint_module(a4))));
  auto a3 = super_heisenberg(f3);
  out.push_back(make("A3-adjoint-p3", "super Heisenberg with the adjoint module", a3, "adjoint", super::adjoint_module(a3)));
  auto plane = abelian_plane(f3, 0, 1);
  out.push_back(make("abelian-plane-p3", "abelian <x1,x2>, x1^[p] = 0, x2^[p] = x2, trivial k", plane, "k",
                     super::trivial_module(plane)));
  auto odd = odd_line(f3);
  out.push_back(make("odd-line-p3", "purely odd abelian < | y>, trivial k", odd, "k", super::trivial_module(odd)));
  auto mixed = mixed_line(f3);
  out.push_back(make("mixed-p3", "<x | y>, [x,y] = y, x^[p] = x, trivial k", mixed, "k", super::trivial_module(mixed)));
  out.push_back(make("mixed-adjoint-p3", "<x | y>, [x,y] = y with the adjoint module", mixed, "adjoint",
                     super::adjoint_module(mixed)));
  out.push_back(make("mixed-coadjoint-p3", "<x | y>, [x,y] = y with the coadjoint module", mixed, "coadjoint",
                     super::dual_module(mixed, super::adjoint_module(mixed))));
  for (auto [a1, a2] : {std::pair<gflin::Scalar, gflin::Scalar>{0, 0}, {1, 1}}) {
    auto pl = abelian_plane(f3, a1, a2);
    out.push_back(make("abelian-plane-" + std::to_string(a1) + std::to_string(a2) + "-p3",
                       "abelian <x1,x2>, x_i^[p] = a_i x_i, trivial k", pl, "k", super::trivial_module(pl)));
  }
  Field f5(5);
  auto plane5 = abelian_plane(f5, 0, 1);
  out.push_back(make("abelian-plane-p5", "abelian <x1,x2>, x1^[p] = 0, x2^[p] = x2, trivial k", plane5, "k",
                     super::trivial_module(plane5)));
  auto mixed5 = mixed_line(f5);
  out.push_back(make("mixed-adjoint-p5", "<x | y>, [x,y] = y with the adjoint module", mixed5, "adjoint",
                     super::adjoint_module(mixed5)));
  auto a1 = line(f3, false);
  Representation jordan = super::trivial_module(a1, 2, 0);
  jordan.rho[0] = Matrix::from_dense(f3, 2, 2, {0, 1, 0, 0});
  out.push_back(make("A1-jordan-p3", "<x>, x^[p] = 0 acting by a nilpotent Jordan block", a1, "jordan", jordan));
  return out;
}

const Entry* find(const std::vector<Entry>& all, const std::string& id) {
  for (const auto& e : all)
    if (e.id == id) return &e;
  return nullptr;
}

}  // namespace supercoh::catalog
