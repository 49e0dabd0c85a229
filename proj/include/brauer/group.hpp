#pragma once

// Finite groups as validated Cayley tables, plus the subgroup machinery the
// cohomology layer quantifies over.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "brauer/options.hpp"
#include "brauer/zlattice.hpp"

namespace brauer {

using Elem = std::uint32_t;

class FiniteGroup {
 public:
  FiniteGroup();  // trivial group

  /// Validates identity, associativity (all triples) and inverses. The
  /// identity is relabeled to 0 by swapping it with the element labeled 0.
  static FiniteGroup from_cayley_table(const std::vector<std::vector<long long>>& table,
                                       std::string name = {});
  /// Permutations are image lists on {0..degree-1}; the product g*h applies
  /// g first, then h.
  static FiniteGroup from_permutations(const std::vector<std::vector<std::uint32_t>>& gens,
                                       std::size_t degree, std::size_t cap = 512,
                                       std::string name = {});
  /// Table known to be a group with identity 0 (subgroup tables, catalog).
  static FiniteGroup from_trusted_table(std::size_t n, std::vector<Elem> table,
                                        std::string name = {});

  std::size_t order() const { return n_; }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem pow(Elem a, long long k) const;
  Elem conj(Elem x, Elem g) const { return mul(mul(x, g), inv(x)); }  // x g x^-1
  bool commute(Elem a, Elem b) const { return mul(a, b) == mul(b, a); }

  unsigned element_order(Elem g) const { return orders_[g]; }
  std::uint64_t exponent() const;
  bool is_abelian() const;

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  std::vector<std::vector<long long>> table_rows() const;

 private:
  FiniteGroup(std::size_t n, std::vector<Elem> table, std::string name);
  void finish();

  std::size_t n_ = 1;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  std::vector<unsigned> orders_;
  std::string name_;
};

/// Parses one permutation per line in cycle notation, e.g. "(1 2 3)(4 5)",
/// 1-based points; blank lines and '#' comments are skipped. Returns 0-based
/// image lists, all of the same degree.
struct PermutationInput {
  std::vector<std::vector<std::uint32_t>> generators;
  std::size_t degree = 0;
};
PermutationInput parse_permutations(const std::string& text);

// ---------------------------------------------------------------------------
// Element sets

class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  void insert(Elem e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  bool contains(Elem e) const { return (words_[e >> 6] >> (e & 63)) & 1; }
  std::size_t size() const;
  std::size_t universe() const { return n_; }
  bool subset_of(const ElementSet& other) const;
  std::vector<Elem> elements() const;

  bool operator==(const ElementSet&) const = default;
  auto operator<=>(const ElementSet&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

enum class SubgroupKind { Cyclic, Bicyclic, Abelian, General };

const char* kind_name(SubgroupKind kind);
SubgroupKind parse_kind(const std::string& text);

struct SubgroupSet {
  std::vector<Elem> elements;  // sorted, starts with the identity
  SubgroupKind kind = SubgroupKind::General;
  std::vector<Elem> generators;

  std::size_t order() const { return elements.size(); }
  bool contains(Elem e) const;
};

struct SubgroupFamily {
  SubgroupKind kind = SubgroupKind::General;
  std::vector<SubgroupSet> members;
  std::vector<std::string> reduction_log;
};

ElementSet closure(const FiniteGroup& g, std::span<const Elem> gens);
SubgroupSet generated_subgroup(const FiniteGroup& g, std::span<const Elem> gens,
                               SubgroupKind kind = SubgroupKind::General);
bool is_subgroup(const FiniteGroup& g, std::span<const Elem> elements);
bool is_abelian_set(const FiniteGroup& g, std::span<const Elem> elements);
std::vector<Elem> conjugate_elements(const FiniteGroup& g, std::span<const Elem> elements, Elem x);

/// Greedy generating set: repeatedly adds an element of largest order outside
/// the subgroup generated so far (smallest label on ties).
std::vector<Elem> small_generating_set(const FiniteGroup& g);

SubgroupFamily maximal_subgroup_family(const FiniteGroup& g, SubgroupKind kind,
                                       const Limits& limits = {});

SubgroupSet centralizer(const FiniteGroup& g, std::span<const Elem> s);
SubgroupSet center(const FiniteGroup& g);
SubgroupSet commutator_subgroup(const FiniteGroup& g);

struct Abelianization {
  AbelianGroup group;                  // on generators = images of `lifts`
  std::vector<Elem> lifts;             // one element of G per generator
  std::vector<IntVector> projection;   // element -> generator vector
};
Abelianization abelianization(const FiniteGroup& g);

struct SylowResult {
  SubgroupSet subgroup;
  bool abelian = true;
};
SylowResult sylow_subgroup(const FiniteGroup& g, unsigned p);

/// A subgroup as a group in its own right; embedding[i] is the element of G
/// carrying label i (embedding[0] is the identity).
struct EmbeddedGroup {
  FiniteGroup group;
  std::vector<Elem> embedding;
};
EmbeddedGroup subgroup_group(const FiniteGroup& g, const SubgroupSet& h);

std::vector<unsigned> prime_factors(std::uint64_t n);

}  // namespace brauer
