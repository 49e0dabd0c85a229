#pragma once

// Built-in groups by name: C<n>, products C<a>xC<b>x..., D<n> (order 2n),
// Q8, Q16, S3, S4, A4, A5, Heis3, Heis5.

#include <optional>
#include <string>
#include <vector>

#include "brauer/group.hpp"

namespace brauer {

struct ExpectedValue {
  std::string quantity;    // "abelianization", "schur_multiplier", "b0"
  std::string value;       // fingerprint string, e.g. "[2,2]"
  std::string provenance;
};

struct CatalogEntry {
  std::string name;
  std::string family;      // "cyclic", "abelian", "dihedral", ...
  std::vector<unsigned> parameters;
  std::string description;
  std::size_t order = 1;
  std::vector<ExpectedValue> expected;
};

FiniteGroup cyclic_product(const std::vector<unsigned>& factors, std::string name = {});
FiniteGroup dihedral(unsigned n);   // order 2n
FiniteGroup dicyclic(unsigned m);   // order 4m; Q8 = dicyclic(2)
FiniteGroup symmetric(unsigned n);
FiniteGroup alternating(unsigned n);
FiniteGroup heisenberg(unsigned p); // upper unitriangular 3x3 over F_p

/// Invariant factor lists (d1 | d2 | ...) of all abelian groups of the order.
std::vector<std::vector<unsigned>> abelian_invariant_lists(unsigned order);
std::string abelian_name(const std::vector<unsigned>& factors);

/// The listed entries: every abelian group of order <= 64 by invariant
/// factors, D3..D16, and the named non-abelian groups, in a fixed order.
const std::vector<CatalogEntry>& catalog_entries();
std::optional<CatalogEntry> find_entry(const std::string& name);

/// Resolves a catalog name (listed or any C<a>x...); nullopt if not a name.
std::optional<FiniteGroup> catalog_group(const std::string& name);

}  // namespace brauer
