#pragma once

// Base-field profiles and the bounds for the normalized unramified Brauer
// group of k(SL_n/G) built from the Sha groups.
//
// Every report carries the theorem tags that justify its status, in the
// order they were applied.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brauer/cohomology.hpp"
#include "brauer/group.hpp"
#include "brauer/options.hpp"
#include "brauer/zlattice.hpp"

namespace brauer {

enum class Cyclicity { Cyclic, NonCyclic };

struct FieldProfile {
  std::optional<Residue> roots;  // mu(k) = Z/r; nullopt when k has all roots of unity
  std::map<unsigned, Cyclicity> cyclo2;  // s >= 3 -> k(mu_{2^s})/k
  Cyclicity fallback = Cyclicity::Cyclic;  // exponents beyond the table
  std::string name;

  bool all_roots() const { return !roots; }
  /// Cyclicity of k(mu_{2^s})/k; s <= 2 is always cyclic.
  Cyclicity cyclo2_rule(unsigned s) const;
  std::string describe() const;
};

/// Checks r >= 2, r even (-1 is in k) and that the table has no entries
/// below s = 3 other than "cyclic".
void validate_profile(const FieldProfile& p);

/// "C", "R", "Q", "Q2", or "Qp:<p>" / "Qp(<p>)" for an odd prime p.
FieldProfile preset(const std::string& name);
FieldProfile preset_qp(long p);
/// mu(k) = Z/r with every 2-power cyclotomic extension cyclic.
FieldProfile finite_roots_profile(Residue r);

struct CycCheck {
  bool holds = true;
  std::optional<Elem> witness;  // element of minimal violating order
  unsigned witness_order = 0;
};
CycCheck check_cyc(const FiniteGroup& g, const FieldProfile& p);

/// mu_m(k) is everything for every element order m of G.
bool mu_full_for(const FiniteGroup& g, const FieldProfile& p);

/// Sha^2_bicyc(G, Q/Z). Throws TheoremViolation if Sha^2_ab differs.
AbelianGroup bogomolov_multiplier(const FiniteGroup& g, const Limits& limits = {});

enum class Status { Exact, UpperBound, OddPartUpperBound, ZeroByCoprimality, ZeroByTheorem };
std::string status_name(Status s);

struct BrauerReport {
  AbelianGroup bound;
  Status status = Status::Exact;
  std::vector<std::string> applied;
  std::vector<std::string> notes;
  std::string group_name;
  std::size_t group_order = 1;
  std::string profile;
};

BrauerReport brnr_bound(const FiniteGroup& g, const FieldProfile& p, const Limits& limits = {});

/// Ker[G^/r -> prod over maximal abelian A of A^/r]. Requires finite roots
/// and Cyc (CycFailed otherwise).
BrauerReport algebraic_bound(const FiniteGroup& g, const FieldProfile& p,
                             const Limits& limits = {});
/// The kernel itself, without profile checks.
AbelianGroup character_kernel_mod(const FiniteGroup& g, Residue r, const Limits& limits = {});

/// k = R: brnr_bound under preset R plus the algebraic part and the Sylow-2
/// shortcut. Throws TheoremViolation if the bound is not killed by 2.
BrauerReport real_report(const FiniteGroup& g, const Limits& limits = {});

/// G^ = 0 (NotPerfect otherwise), finite roots with Cyc. ZeroByTheorem when
/// B0 also vanishes; UpperBound on the algebraic part if B0 is over the caps.
BrauerReport simple_group_report(const FiniteGroup& g, const FieldProfile& p,
                                 const Limits& limits = {});

}  // namespace brauer
