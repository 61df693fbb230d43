#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "supercoh/extensions.hpp"

namespace supercoh::sixterm {

using cohomology::BarComplex;
using cohomology::CohomologyResult;
using cohomology::LieComplex;
using gflin::Matrix;
using gflin::Subspace;
using gflin::Vec;
using super::LieSuperAlgebra;
using super::Representation;

/// Complexes, cohomology and the spaces S(g_0, M_0^g), S(g_0, H^1) of one (g, M).
class SixTermData {
public:
  SixTermData(const LieSuperAlgebra& g, const Representation& m);

  const LieComplex& lie() const { return lie_; }
  const BarComplex& bar() const { return bar_; }
  const CohomologyResult& h1_star() const { return h1s_; }
  const CohomologyResult& h1() const { return h1_; }
  const CohomologyResult& h2_star() const { return h2s_; }
  const CohomologyResult& h2() const { return h2_; }
  const super::SemilinearSpace& s_invariants() const { return s1_; }
  std::size_t s_h1_dim() const { return lie_.lie().even_dim() * h1_.dim(); }
  const std::map<std::string, double>& timings() const { return timings_; }

private:
  LieComplex lie_;
  BarComplex bar_;
  std::map<std::string, double> timings_;
  CohomologyResult h1s_, h1_, h2s_, h2_;
  super::SemilinearSpace s1_;
};

// H^1_* -> H^1
Matrix map_i1(const SixTermData& d);
// H^1 -> S(g_0, M_0^g)
Matrix map_psibar(const SixTermData& d);
// S(g_0, M_0^g) -> H^2_*
Matrix map_fg(const SixTermData& d);
// H^2_* -> H^2
Matrix map_pi(const SixTermData& d);
// H^2 -> S(g_0, H^1); column j uses reps[j] as the representative of the j-th class.
Matrix map_phi(const SixTermData& d, const std::vector<Vec>& reps,
               extensions::FxpReading reading = extensions::FxpReading::second_slot);
Matrix map_phi(const SixTermData& d, extensions::FxpReading reading = extensions::FxpReading::second_slot);

struct Verdict {
  std::string name;
  bool ok = false;
  std::optional<Vec> witness;  // element of Ker \ Im (or Im \ Ker) on failure
  std::string detail;
};

struct SixTermReport {
  std::string algebra_id;
  std::string module_id;
  unsigned p = 0;
  // h1s, h1, s1, h2s, h2, s(g_0, H^1)
  std::array<std::size_t, 6> dims{};
  Matrix i1{gflin::Field(3), 0, 0};
  Matrix psibar = i1, fg = i1, pi = i1, phi = i1;
  std::vector<Verdict> exactness;   // i1_injective, exact_at_H1, exact_at_S, exact_at_H2s, exact_at_H2
  std::vector<Verdict> composites;  // consecutive composites vanish
  bool euler_ok = false;
  bool module_coerced = false;
  std::map<std::string, std::size_t> sizes;
  std::map<std::string, double> timings;

  bool all_exact() const;
};

SixTermReport build_six_term(const LieSuperAlgebra& g, const Representation& m, const std::string& algebra_id = "",
                             const std::string& module_id = "");

// Ker(next) = Im(prev) as subspaces of the middle space.
Verdict exact_at(const std::string& name, const Matrix& prev, const Matrix& next);

}  // namespace supercoh::sixterm
