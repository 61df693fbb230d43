#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "supercoh/catalog.hpp"
#include "supercoh/sixterm.hpp"

namespace supercoh::selftest {

using super::LieSuperAlgebra;
using super::Representation;

struct SuiteResult {
  std::string name;
  bool ok = true;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void fail(std::string what);
};

// Random vector of the given length over f.
gflin::Vec random_vec(const gflin::Field& f, std::size_t n, std::mt19937_64& rng);

// Direct sum of 1-2 catalog-style modules (trivial even/odd, adjoint,
// coadjoint) conjugated by a random parity preserving change of basis.
Representation random_module(const LieSuperAlgebra& g, std::mt19937_64& rng, std::size_t max_dim = 4);

// Algebras of the catalog, one per distinct id prefix.
std::vector<catalog::Entry> distinct_algebras(const std::vector<catalog::Entry>& all);

// δ∘δ = 0 for both complexes at n = 0, 1 on every catalog entry and on
// `fuzz` random semidirect constructions g ⋉ M with coefficients in N.
SuiteResult delta_squared(const std::vector<catalog::Entry>& all, std::uint64_t seed, unsigned fuzz = 50);
// The iterated-ad reading of the commutator identity and the binomial
// identity, `samples` random (x, y, l) per algebra.
SuiteResult u_identities(const std::vector<catalog::Entry>& all, std::uint64_t seed, unsigned samples = 100);
// dim of the Z^1 ∩ {restrictedness} / B^1 description against dim H^1_*.
SuiteResult h1_star_agreement(const std::vector<catalog::Entry>& all);
// cocycle -> extension -> cocycle for module extensions, Lie algebra
// extensions and restricted extensions (associative 2-cocycles).
SuiteResult round_trips(const std::vector<catalog::Entry>& all, std::uint64_t seed);
// Φ after shifting every H^2 representative by `shifts` random coboundaries.
SuiteResult phi_independence(const std::vector<catalog::Entry>& all, std::uint64_t seed, unsigned shifts = 10);
// Every exactness verdict of every catalog pair.
SuiteResult six_term(const std::vector<catalog::Entry>& all);

std::vector<SuiteResult> run_all(std::uint64_t seed);

}  // namespace supercoh::selftest
