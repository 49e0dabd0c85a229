#include "brauer/brauer.hpp"

#include <bit>
#include <numeric>

#include "brauer/error.hpp"

namespace brauer {

Cyclicity FieldProfile::cyclo2_rule(unsigned s) const {
  if (s <= 2) return Cyclicity::Cyclic;
  auto it = cyclo2.find(s);
  return it == cyclo2.end() ? fallback : it->second;
}

std::string FieldProfile::describe() const {
  std::string mu = roots ? "mu = Z/" + std::to_string(*roots) : "mu = Q/Z";
  return (name.empty() ? std::string("custom") : name) + " (" + mu + ")";
}

void validate_profile(const FieldProfile& p) {
  if (p.roots) {
    if (*p.roots < 2) fail(ErrorCode::InvalidInput, "finite roots of unity need r >= 2");
    if (*p.roots % 2) fail(ErrorCode::InvalidInput, "r must be even since -1 is a root of unity");
  }
  for (auto [s, c] : p.cyclo2)
    if (s <= 2 && c != Cyclicity::Cyclic)
      fail(ErrorCode::InvalidInput,
           "k(mu_" + std::to_string(1u << s) + ")/k has degree <= 2 and is always cyclic");
}

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FieldProfile q_like(std::string name) {
  // (Z/2^s)^x is cyclic only for s <= 2.
  FieldProfile p;
  p.roots = 2;
  p.fallback = Cyclicity::NonCyclic;
  p.name = std::move(name);
  return p;
}

long parse_qp(const std::string& name) {
  std::string digits;
  if (name.rfind("Qp:", 0) == 0) digits = name.substr(3);
  else if (name.rfind("Qp(", 0) == 0 && name.back() == ')') digits = name.substr(3, name.size() - 4);
  else fail(ErrorCode::UnknownPreset, "unknown field preset '" + name + "'");
  if (digits.empty() || digits.size() > 9 ||
      digits.find_first_not_of("0123456789") != std::string::npos)
    fail(ErrorCode::UnknownPreset, "bad prime in '" + name + "'");
  return std::stol(digits);
}

Residue gcd_order(Residue r, std::size_t n) {
  return std::gcd(r, static_cast<Residue>(n));
}

bool is_perfect(const FiniteGroup& g) { return abelianization(g).group.is_trivial(); }

AbelianGroup odd_part(const AbelianGroup& a) {
  return AbelianGroup::from_orders(prime_to_part(a.fingerprint(), 2).invariants);
}

BrauerReport start(const FiniteGroup& g, const FieldProfile& p) {
  BrauerReport rep;
  rep.group_name = g.name();
  rep.group_order = g.order();
  rep.profile = p.describe();
  return rep;
}

void applied(BrauerReport& rep, const std::string& tag) {
  for (const auto& t : rep.applied)
    if (t == tag) return;
  rep.applied.push_back(tag);
}

std::string fp(const AbelianGroup& a) { return a.fingerprint().to_string(); }

// Sha^2_ab(G, M), cross-checked against Sha^2_bicyc when the roots are full.
AbelianGroup sha_ab(const FiniteGroup& g, const Coefficient& c, const Limits& limits,
                    bool check_bicyclic) {
  AbelianGroup ab = sha2(g, c, SubgroupKind::Abelian, limits).group;
  if (check_bicyclic) {
    AbelianGroup bi = sha2(g, c, SubgroupKind::Bicyclic, limits).group;
    if (!(ab.fingerprint() == bi.fingerprint()))
      fail(ErrorCode::TheoremViolation, "Sha2_ab(" + c.to_string() + ") = " + fp(ab) +
                                            " but Sha2_bicyc = " + fp(bi));
  }
  return ab;
}

}  // namespace

FieldProfile preset(const std::string& name) {
  if (name == "C") {
    FieldProfile p;
    p.name = "C";
    return p;
  }
  if (name == "R") {
    // The only proper cyclotomic extension is C/R.
    FieldProfile p;
    p.roots = 2;
    p.name = "R";
    return p;
  }
  if (name == "Q" || name == "Q2") return q_like(name);
  return preset_qp(parse_qp(name));
}

FieldProfile preset_qp(long p) {
  if (p == 2) return q_like("Q2");
  if (!is_prime(p) || p % 2 == 0)
    fail(ErrorCode::PNotOddPrime, std::to_string(p) + " is not an odd prime");
  // 2-power cyclotomic extensions of Q_p are unramified for odd p, so cyclic.
  FieldProfile out;
  out.roots = p - 1;
  out.name = "Qp:" + std::to_string(p);
  return out;
}

FieldProfile finite_roots_profile(Residue r) {
  FieldProfile p;
  p.roots = r;
  p.name = "Finite(" + std::to_string(r) + ")";
  validate_profile(p);
  return p;
}

CycCheck check_cyc(const FiniteGroup& g, const FieldProfile& p) {
  CycCheck out;
  for (Elem x = 0; x < g.order(); ++x) {
    unsigned o = g.element_order(x);
    if (o < 8 || (o & (o - 1))) continue;
    unsigned s = static_cast<unsigned>(std::countr_zero(o));
    if (p.cyclo2_rule(s) == Cyclicity::Cyclic) continue;
    if (out.holds || o < out.witness_order) {
      out.holds = false;
      out.witness = x;
      out.witness_order = o;
    }
  }
  return out;
}

bool mu_full_for(const FiniteGroup& g, const FieldProfile& p) {
  if (p.all_roots()) return true;
  return static_cast<Residue>(g.exponent()) <= *p.roots &&
         *p.roots % static_cast<Residue>(g.exponent()) == 0;
}

AbelianGroup bogomolov_multiplier(const FiniteGroup& g, const Limits& limits) {
  AbelianGroup bi = sha2(g, Coefficient::qmodz(), SubgroupKind::Bicyclic, limits).group;
  AbelianGroup ab = sha2(g, Coefficient::qmodz(), SubgroupKind::Abelian, limits).group;
  if (!(ab.fingerprint() == bi.fingerprint()))
    fail(ErrorCode::TheoremViolation,
         "Sha2_bicyc(Q/Z) = " + fp(bi) + " but Sha2_ab(Q/Z) = " + fp(ab));
  return bi;
}

std::string status_name(Status s) {
  switch (s) {
    case Status::Exact: return "Exact";
    case Status::UpperBound: return "UpperBound";
    case Status::OddPartUpperBound: return "OddPartUpperBound";
    case Status::ZeroByCoprimality: return "ZeroByCoprimality";
    case Status::ZeroByTheorem: return "ZeroByTheorem";
  }
  return "?";
}

BrauerReport brnr_bound(const FiniteGroup& g, const FieldProfile& p, const Limits& limits) {
  validate_profile(p);
  BrauerReport rep = start(g, p);
  const bool full = mu_full_for(g, p);

  // The trivial group satisfies every hypothesis; report it through the
  // exact branch rather than coprimality.
  if (p.roots && g.order() > 1 && gcd_order(*p.roots, g.order()) == 1) {
    rep.status = Status::ZeroByCoprimality;
    applied(rep, "Cor-racines(a)");
    rep.notes.push_back("gcd(" + std::to_string(*p.roots) + ", |G| = " +
                        std::to_string(g.order()) + ") = 1");
    if (p.name == "Q" && g.order() % 2) {
      applied(rep, "Cor-racines(b)");
      rep.notes.push_back("k = Q and |G| is odd: Br_nr(Q(X)^G) = Br(Q)");
    }
    return rep;
  }

  if (full) {
    Coefficient mu = p.roots ? Coefficient::zmod(*p.roots) : Coefficient::qmodz();
    rep.bound = sha_ab(g, mu, limits, true);
    rep.status = Status::Exact;
    applied(rep, "Thm-bogogeneral");
    rep.notes.push_back("mu_m(k) = mu_m(kbar) for every element order m; Br0_nr = Sha2_ab(G, " +
                        mu.to_string() + ") = Sha2_bicyc(G, " + mu.to_string() + ")");
    if (g.is_abelian()) {
      applied(rep, "Thm-principal-1(i)");
      if (!rep.bound.is_trivial())
        fail(ErrorCode::TheoremViolation, "abelian group with nonzero Sha2_ab " + fp(rep.bound));
    }
    return rep;
  }

  const Residue r = *p.roots;
  CycCheck cyc = check_cyc(g, p);
  AbelianGroup sha = sha_ab(g, Coefficient::zmod(r), limits, false);
  if (cyc.holds) {
    rep.bound = sha;
    rep.status = Status::UpperBound;
    applied(rep, "Thm-principal-2(b)");
    rep.notes.push_back("Cyc(G, k) holds; Br0_nr is a subgroup of Sha2_ab(G, Z/" +
                        std::to_string(r) + ") = " + fp(sha));
    if (g.is_abelian()) {
      applied(rep, "Thm-principal-1(i)");
      if (!sha.is_trivial())
        fail(ErrorCode::TheoremViolation, "abelian group with nonzero Sha2_ab " + fp(sha));
    }
    if (p.name == "R") {
      applied(rep, "Cor-racines(c)");
      if (sylow_subgroup(g, 2).abelian) {
        rep.notes.push_back("Sylow 2-subgroup is abelian, so the bound vanishes");
        if (!sha.is_trivial())
          fail(ErrorCode::TheoremViolation,
               "abelian Sylow 2-subgroup but Sha2_ab(G, Z/2) = " + fp(sha));
      }
    }
    if (g.order() > 1 && is_perfect(g)) {
      AbelianGroup b0 = bogomolov_multiplier(g, limits);
      if (b0.is_trivial()) {
        rep.bound = AbelianGroup::trivial();
        rep.status = Status::ZeroByTheorem;
        applied(rep, "Thm-racinesfinies(ii)");
        rep.notes.push_back("G^ = 0 kills the algebraic part and B0(G) = 0 was recomputed");
      } else {
        rep.notes.push_back("G is perfect but B0(G) = " + fp(b0) + "; keeping the Sha bound");
      }
    }
    return rep;
  }

  rep.bound = odd_part(sha);
  rep.status = Status::OddPartUpperBound;
  applied(rep, "Thm-principal-1(iii)");
  applied(rep, "Thm-principal-2(b)");
  rep.notes.push_back("Cyc(G, k) fails: element " + std::to_string(*cyc.witness) + " of order " +
                      std::to_string(cyc.witness_order) + " and k(mu_" +
                      std::to_string(cyc.witness_order) + ")/k is not cyclic");
  rep.notes.push_back("odd part of Sha2_ab(G, Z/" + std::to_string(r) + ") = " + fp(sha) +
                      " bounds the odd part of Br0_nr; the 2-part is not bounded by this method");
  if (g.is_abelian()) {
    // Without Cyc only 2.Br0_nr = 0 is known, so the odd part above is all there is.
    applied(rep, "Thm-principal-1(ii)");
    rep.notes.push_back("G abelian: 2.Br0_nr = 0, but vanishing needs Cyc(G, k)");
  }
  return rep;
}

AbelianGroup character_kernel_mod(const FiniteGroup& g, Residue r, const Limits& limits) {
  if (r < 1) fail(ErrorCode::InvalidInput, "r must be positive");
  H1Result top = h1(g, Coefficient::qmodz());
  AbelianGroup src = quotient_mod_n(top.group, r);
  SubgroupFamily family = maximal_subgroup_family(g, SubgroupKind::Abelian, limits);
  std::vector<AbelianHom> maps;
  std::vector<AbelianGroup> targets;
  for (const auto& a : family.members) {
    EmbeddedGroup e = subgroup_group(g, a);
    H1Result low = h1(e.group, Coefficient::qmodz(), top.modulus);
    AbelianHom res = restriction_hom1(e, top, low);
    AbelianGroup tgt = quotient_mod_n(low.group, r);
    maps.emplace_back(src, tgt, res.matrix());
    targets.push_back(std::move(tgt));
  }
  return hom_kernel(assemble(src, maps, direct_sum_group(targets))).group;
}

BrauerReport algebraic_bound(const FiniteGroup& g, const FieldProfile& p, const Limits& limits) {
  validate_profile(p);
  if (!p.roots) fail(ErrorCode::InvalidInput, "the character-kernel bound needs finitely many roots");
  CycCheck cyc = check_cyc(g, p);
  if (!cyc.holds)
    fail(ErrorCode::CycFailed, "element " + std::to_string(*cyc.witness) + " of order " +
                                   std::to_string(cyc.witness_order) + " violates Cyc");
  const Residue r = *p.roots;
  BrauerReport rep = start(g, p);
  rep.bound = character_kernel_mod(g, r, limits);
  rep.status = Status::UpperBound;
  applied(rep, "Thm-racinesfinies(i)");
  rep.notes.push_back("algebraic part Ker[Br0_nr -> Br(kbar(X)^G)] embeds in Ker[G^/" +
                      std::to_string(r) + " -> prod A^/" + std::to_string(r) +
                      "] over maximal abelian A = " + fp(rep.bound));
  if (abelianization(g).group.is_trivial()) rep.notes.push_back("G^ = 0");
  return rep;
}

BrauerReport real_report(const FiniteGroup& g, const Limits& limits) {
  const FieldProfile real = preset("R");
  BrauerReport rep = brnr_bound(g, real, limits);
  applied(rep, "Cor-racines(c)");
  if (rep.status != Status::ZeroByCoprimality) {
    bool sylow_abelian = sylow_subgroup(g, 2).abelian;
    if (sylow_abelian && !rep.bound.is_trivial())
      fail(ErrorCode::TheoremViolation,
           "abelian Sylow 2-subgroup but bound " + fp(rep.bound));
    AbelianGroup alg = character_kernel_mod(g, 2, limits);
    applied(rep, "Cor-reel");
    rep.notes.push_back("algebraic part embeds in Ker[G^/2 -> prod A^/2] = " + fp(alg));
  }
  for (const auto& d : rep.bound.fingerprint().invariants)
    if (d != 2)
      fail(ErrorCode::TheoremViolation, "real bound " + fp(rep.bound) + " is not killed by 2");
  rep.notes.push_back("2.Br0_nr(R(X)^G) = 0: bound is elementary abelian");
  return rep;
}

BrauerReport simple_group_report(const FiniteGroup& g, const FieldProfile& p,
                                 const Limits& limits) {
  validate_profile(p);
  if (!is_perfect(g)) fail(ErrorCode::NotPerfect, "G^ is nonzero: G is not perfect");
  BrauerReport alg = algebraic_bound(g, p, limits);
  BrauerReport rep = start(g, p);
  rep.applied = alg.applied;
  rep.notes = alg.notes;
  try {
    AbelianGroup b0 = bogomolov_multiplier(g, limits);
    if (b0.is_trivial()) {
      rep.status = Status::ZeroByTheorem;
      applied(rep, "Thm-racinesfinies(ii)");
      applied(rep, "Thm-bogogeneral");
      rep.notes.push_back("B0(G) = 0 recomputed; with G^ = 0 both parts vanish");
      return rep;
    }
    // Perfect but B0 nonzero: fall back to the Sha bound.
    BrauerReport full = brnr_bound(g, p, limits);
    full.notes.push_back("G is perfect but B0(G) = " + fp(b0));
    return full;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::OrderCapExceeded) throw;
    rep.status = Status::UpperBound;
    rep.notes.push_back(std::string("B0 not computed under the caps (") + e.what() +
                        "); only the algebraic part is bounded, by 0");
    return rep;
  }
}

}  // namespace brauer
