#pragma once

// Independent recomputation of H^2 and Sha^2 on small groups. Shares only
// FiniteGroup with the main path: its own cocycle parametrization (left
// multiplication tree), its own subgroup enumeration (inclusion-maximal,
// no conjugacy reduction), and dense elimination over Z/p^a per prime power
// with the invariant factors reassembled by CRT.

#include <string>
#include <vector>

#include "brauer/cohomology.hpp"
#include "brauer/group.hpp"
#include "brauer/zlattice.hpp"

namespace brauer::oracle {

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct OracleReport {
  std::string target;
  Fingerprint main;
  Fingerprint oracle;
  bool match = false;
  std::string witness;  // first disagreement, empty on match
  std::vector<Check> checks;
};

/// H^2(G, Z/r) for the raw r (no modulus capping).
Fingerprint h2_dense(const FiniteGroup& g, Residue r, std::size_t cap = 24);
/// H^2(G, Q/Z), one prime at a time as H^2(G, Z/p^a) / delta(Hom(G, Z/p^a)).
Fingerprint h2_dense(const FiniteGroup& g, const Coefficient& coeff, std::size_t cap = 24);
/// Sha^2_kind(G, M) with the raw coefficient modulus.
Fingerprint sha2_dense(const FiniteGroup& g, const Coefficient& coeff, SubgroupKind kind,
                       std::size_t cap = 24);
/// Hom(G, Z/r) by solving the homomorphism equations; used to cross-check h1.
Fingerprint h1_dense(const FiniteGroup& g, Residue r);

/// Re-checks a main-path H^2 result: cocycle identity of every representative
/// at all triples, that the representatives have the claimed orders and
/// generate a group of the oracle's order, and (|G| <= 8, modulus <= 4) the
/// order |Z^2| / |B^2| from the unparametrized cochain complex.
OracleReport certify(const FiniteGroup& g, const H2Result& result, std::size_t cap = 24);

/// Main-path h2 against h2_dense plus certify.
OracleReport compare_h2(const FiniteGroup& g, const Coefficient& coeff, const Limits& limits = {});

}  // namespace brauer::oracle
