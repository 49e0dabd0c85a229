#pragma once

#include <cstddef>

namespace brauer {

struct Limits {
  std::size_t enumeration_cap = 128;  // subgroup families
  std::size_t cohomology_cap = 64;    // h2 and everything built on it
  std::size_t permutation_cap = 512;  // closure of permutation generators
  std::size_t oracle_cap = 24;        // dense oracle path
  unsigned threads = 1;
};

/// Defaults, with BRAUER_CAP overriding the cohomology cap when set.
Limits default_limits();

}  // namespace brauer
