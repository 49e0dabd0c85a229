#pragma once

// H^1 and H^2 of a finite group with trivial coefficients Z/r or Q/Z, the
// restriction maps to subgroups, and the kernels Sha^i_kind.
//
// Cochains are normalized (vanish when an argument is the identity). A
// 2-cochain is stored as a dense |G| x |G| table of residues.

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "brauer/group.hpp"
#include "brauer/options.hpp"
#include "brauer/zlattice.hpp"

namespace brauer {

struct Coefficient {
  enum class Kind { Zmod, QmodZ };
  Kind kind = Kind::QmodZ;
  Residue r = 0;  // Zmod only

  static Coefficient zmod(Residue r);
  static Coefficient qmodz() { return {}; }
  bool is_qmodz() const { return kind == Kind::QmodZ; }
  std::string to_string() const;
  bool operator==(const Coefficient&) const = default;
};

/// Parses "q", "qmodz", "Q/Z" or a positive integer r.
Coefficient parse_coefficient(const std::string& text);

/// r_eff = prod over p | gcd(r, n) of p^min(v_p r, v_p n).
Residue effective_modulus(Residue r, std::size_t group_order);

using Cochain1 = std::vector<Residue>;
using Cochain2 = std::vector<Residue>;  // index g * |G| + h

struct Triple {
  Elem g, h, k;
};

/// nullopt when c is a normalized 2-cocycle mod m; otherwise the first
/// violating triple (or a normalization violation reported as (g, h, 0)).
std::optional<Triple> cocycle_violation(const FiniteGroup& g, const Cochain2& c, Residue m);
Cochain2 coboundary(const FiniteGroup& g, const Cochain1& c, Residue m);
/// delta of a character chi: G -> Z/n for 0 -> Z/n -> Q/Z -> Q/Z -> 0.
Cochain2 delta_character(const FiniteGroup& g, const Cochain1& chi, Residue n);
/// Pullback along an embedding H -> G.
Cochain2 restrict_cochain(const FiniteGroup& g, const EmbeddedGroup& h, const Cochain2& c);

struct H1Result {
  AbelianGroup group;               // presented by its invariant factors
  std::vector<Cochain1> characters; // one per generator, values mod modulus
  Residue modulus = 1;
  Coefficient coeff;

  IntVector class_of(const Cochain1& chi) const;

  struct Basis {
    std::vector<Elem> elements;     // preimages of the normal basis of G^ab
    std::vector<Residue> scale;     // modulus / gcd(d_k, modulus)
  };
  std::shared_ptr<const Basis> basis;
};

/// Hom(G, M). For Q/Z the characters take values in Z/n with n = modulus
/// (default |G|), i.e. in (1/n)Z/Z.
H1Result h1(const FiniteGroup& g, const Coefficient& coeff,
            std::optional<Residue> modulus = std::nullopt);

class H2Context;

struct H2Result {
  AbelianGroup group;                // presented by its invariant factors
  std::vector<Cochain2> reps;        // one normalized cocycle per generator
  Residue modulus = 1;
  Coefficient coeff;
  std::optional<AbelianGroup> qmodz_divisor;  // image of delta(G^) in H^2(G, Z/n)

  /// Class of a normalized cocycle, as a vector on `group`'s generators.
  IntVector class_of(const Cochain2& c) const;
  /// Whether the cochain passes the linear constraints of the parametrization
  /// (a necessary condition for being a cocycle).
  bool in_cocycle_space(const Cochain2& c) const;

  std::shared_ptr<const H2Context> context;
};

/// H^2(G, Z/r) over r_eff, or H^2(G, Q/Z) as H^2(G, Z/n) / delta(G^) with
/// n = |G| unless `modulus` overrides it (subgroups of a larger group use
/// the ambient modulus so that restriction is defined).
H2Result h2(const FiniteGroup& g, const Coefficient& coeff, const Limits& limits = {},
            std::optional<Residue> modulus = std::nullopt);

/// Modulus used for coefficient Z/r when computing Sha over G and its
/// subgroups.
Residue sha_modulus(const Coefficient& coeff, std::size_t group_order);

AbelianHom restriction_hom(const FiniteGroup& g, const EmbeddedGroup& h, const H2Result& h2g,
                           const H2Result& h2h);
AbelianHom restriction_hom1(const EmbeddedGroup& h, const H1Result& h1g, const H1Result& h1h);

struct ShaResult {
  SubgroupKind kind = SubgroupKind::Abelian;
  AbelianGroup group;
  SubgroupFamily witness_family;
  std::vector<AbelianHom> per_subgroup_maps;
  AbelianHom inclusion;  // into the H^i(G, M) presentation
};

ShaResult sha2(const FiniteGroup& g, const Coefficient& coeff, SubgroupKind kind,
               const Limits& limits = {});
ShaResult sha1(const FiniteGroup& g, const Coefficient& coeff, SubgroupKind kind,
               const Limits& limits = {});

/// Kernel of G^ -> prod over the family of H^ (characters vanishing on every
/// subgroup of the kind).
AbelianGroup character_kernel(const FiniteGroup& g, SubgroupKind kind, const Limits& limits = {});

}  // namespace brauer
