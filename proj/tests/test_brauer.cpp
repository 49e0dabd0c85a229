#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "brauer/brauer.hpp"
#include "brauer/catalog.hpp"
#include "test_util.hpp"

using namespace brauer;
using test_util::code_of;

namespace {

FiniteGroup named(const char* name) { return *catalog_group(name); }

std::string fp(const AbelianGroup& a) { return a.fingerprint().to_string(); }

bool has_tag(const BrauerReport& r, const std::string& tag) {
  return std::find(r.applied.begin(), r.applied.end(), tag) != r.applied.end();
}

bool notes_mention(const BrauerReport& r, const std::string& text) {
  return std::any_of(r.notes.begin(), r.notes.end(),
                     [&](const std::string& n) { return n.find(text) != std::string::npos; });
}

// Brute-force side of the character-kernel check.

using Values = std::vector<Residue>;

// All homomorphisms from the subgroup on `elems` into Z/e, as value tables
// indexed by elements of g (entries outside the subgroup unused).
std::vector<Values> all_homs(const FiniteGroup& g, const std::vector<Elem>& elems, Residue e) {
  std::vector<Elem> gens;
  {
    std::set<Elem> span = {0};
    for (Elem x : elems) {
      if (span.count(x)) continue;
      gens.push_back(x);
      span = {0};
      std::vector<Elem> frontier = {0};
      while (!frontier.empty()) {
        Elem y = frontier.back();
        frontier.pop_back();
        for (Elem s : gens)
          if (span.insert(g.mul(y, s)).second) frontier.push_back(g.mul(y, s));
      }
    }
  }
  std::vector<Values> out;
  std::vector<Residue> assign(gens.size(), 0);
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i < gens.size()) {
      for (Residue v = 0; v < e; ++v) {
        assign[i] = v;
        walk(i + 1);
      }
      return;
    }
    Values val(g.order(), -1);
    val[0] = 0;
    std::vector<Elem> frontier = {0};
    bool ok = true;
    while (!frontier.empty() && ok) {
      Elem y = frontier.back();
      frontier.pop_back();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Elem z = g.mul(y, gens[k]);
        Residue v = (val[y] + assign[k]) % e;
        if (val[z] < 0) {
          val[z] = v;
          frontier.push_back(z);
        } else if (val[z] != v) {
          ok = false;
        }
      }
    }
    for (Elem a : elems)
      for (Elem b : elems)
        ok = ok && val[g.mul(a, b)] == (val[a] + val[b]) % e;
    if (ok) out.push_back(val);
  };
  walk(0);
  return out;
}

std::vector<std::vector<Elem>> abelian_subgroups(const FiniteGroup& g) {
  std::set<std::vector<Elem>> seen;
  std::vector<std::vector<Elem>> todo = {{0}};
  seen.insert({0});
  while (!todo.empty()) {
    std::vector<Elem> s = todo.back();
    todo.pop_back();
    for (Elem x = 0; x < g.order(); ++x) {
      if (!std::all_of(s.begin(), s.end(), [&](Elem y) { return g.commute(x, y); })) continue;
      std::vector<Elem> gens = s;
      gens.push_back(x);
      auto c = closure(g, gens).elements();
      std::sort(c.begin(), c.end());
      if (seen.insert(c).second) todo.push_back(c);
    }
  }
  return {seen.begin(), seen.end()};
}

// |Ker[G^/r -> prod A^/r]| with A over all abelian subgroups (a restriction
// that is divisible by r on A stays divisible on subgroups of A).
std::size_t brute_kernel_order(const FiniteGroup& g, Residue r) {
  const Residue e = static_cast<Residue>(g.exponent()) * r;
  std::vector<Elem> all(g.order());
  for (Elem x = 0; x < g.order(); ++x) all[x] = x;
  auto chars = all_homs(g, all, e);
  std::set<Values> r_multiples;
  for (const auto& c : chars) {
    Values m(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) m[i] = (r * c[i]) % e;
    r_multiples.insert(m);
  }
  std::size_t good = 0;
  auto subs = abelian_subgroups(g);
  std::vector<std::set<Values>> divisible(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (const auto& psi : all_homs(g, subs[i], e)) {
      Values m;
      for (Elem a : subs[i]) m.push_back((r * psi[a]) % e);
      divisible[i].insert(m);
    }
  for (const auto& c : chars) {
    bool in = true;
    for (std::size_t i = 0; i < subs.size() && in; ++i) {
      Values m;
      for (Elem a : subs[i]) m.push_back(c[a]);
      in = divisible[i].count(m) > 0;
    }
    good += in;
  }
  return good / r_multiples.size();
}

}  // namespace

TEST_CASE("presets") {
  FieldProfile c = preset("C");
  CHECK(c.all_roots());
  FieldProfile r = preset("R");
  CHECK(*r.roots == 2);
  CHECK(r.cyclo2_rule(6) == Cyclicity::Cyclic);
  FieldProfile q = preset("Q");
  CHECK(q.cyclo2_rule(2) == Cyclicity::Cyclic);
  CHECK(q.cyclo2_rule(3) == Cyclicity::NonCyclic);
  CHECK(preset("Q2").cyclo2_rule(4) == Cyclicity::NonCyclic);
  FieldProfile q7 = preset("Qp:7");
  CHECK(*q7.roots == 6);
  CHECK(q7.cyclo2_rule(5) == Cyclicity::Cyclic);
  CHECK(*preset("Qp(13)").roots == 12);
  CHECK(preset("Qp:2").name == "Q2");
  CHECK(code_of([] { preset("Qp:9"); }) == ErrorCode::PNotOddPrime);
  CHECK(code_of([] { preset_qp(1); }) == ErrorCode::PNotOddPrime);
  CHECK(code_of([] { preset("Qp:x"); }) == ErrorCode::UnknownPreset);
  CHECK(code_of([] { preset("F4"); }) == ErrorCode::UnknownPreset);
  CHECK(code_of([] { finite_roots_profile(3); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { finite_roots_profile(0); }) == ErrorCode::InvalidInput);
  FieldProfile bad = finite_roots_profile(2);
  bad.cyclo2[2] = Cyclicity::NonCyclic;
  CHECK(code_of([&] { validate_profile(bad); }) == ErrorCode::InvalidInput);
}

TEST_CASE("Cyc witnesses have minimal order") {
  FieldProfile q = preset("Q");
  CHECK(check_cyc(named("D4"), q).holds);
  CycCheck c16 = check_cyc(named("C16"), q);
  CHECK_FALSE(c16.holds);
  CHECK(c16.witness_order == 8);
  CHECK(named("C16").element_order(*c16.witness) == 8);
  CHECK(check_cyc(named("C16"), preset("R")).holds);
  FieldProfile custom = finite_roots_profile(2);
  custom.cyclo2[3] = Cyclicity::Cyclic;
  custom.fallback = Cyclicity::NonCyclic;
  CHECK(check_cyc(named("C8"), custom).holds);
  CycCheck c = check_cyc(named("C16"), custom);
  CHECK_FALSE(c.holds);
  CHECK(c.witness_order == 16);
}

TEST_CASE("mu_full_for") {
  CHECK(mu_full_for(named("S4"), preset("C")));
  CHECK(mu_full_for(named("C4"), preset("Qp:5")));
  CHECK_FALSE(mu_full_for(named("C4"), preset("Qp:7")));
  CHECK(mu_full_for(named("S3"), preset("Qp:7")));
  CHECK(mu_full_for(FiniteGroup(), preset("R")));
}

TEST_CASE("coprimality branch") {
  BrauerReport r = brnr_bound(named("C5"), preset("Qp:3"));
  CHECK(r.status == Status::ZeroByCoprimality);
  CHECK(has_tag(r, "Cor-racines(a)"));
  CHECK_FALSE(has_tag(r, "Cor-racines(b)"));
  BrauerReport q = brnr_bound(named("Heis3"), preset("Q"));
  CHECK(q.status == Status::ZeroByCoprimality);
  CHECK(q.applied == std::vector<std::string>{"Cor-racines(a)", "Cor-racines(b)"});
  CHECK(q.bound.is_trivial());
}

TEST_CASE("full roots branch is exact") {
  BrauerReport a = brnr_bound(named("C2xC2"), preset("C"));
  CHECK(a.status == Status::Exact);
  CHECK(a.applied == std::vector<std::string>{"Thm-bogogeneral", "Thm-principal-1(i)"});
  CHECK(a.bound.is_trivial());
  BrauerReport t = brnr_bound(FiniteGroup(), preset("Q"));
  CHECK(t.status == Status::Exact);
  BrauerReport c4 = brnr_bound(named("C2xC4"), preset("Qp:5"));
  CHECK(c4.status == Status::Exact);
  CHECK(notes_mention(c4, "Z/4"));
  BrauerReport s4 = brnr_bound(named("S4"), preset("C"));
  CHECK(s4.status == Status::Exact);
  CHECK_FALSE(has_tag(s4, "Thm-principal-1(i)"));
  CHECK(fp(s4.bound) == fp(bogomolov_multiplier(named("S4"))));
}

TEST_CASE("Cyc branch is an upper bound by Sha2_ab(Z/r)") {
  for (const char* name : {"D4", "Q8", "S4", "A4", "D6", "C2xC2xC4"}) {
    FiniteGroup g = named(name);
    BrauerReport r = brnr_bound(g, preset("Q"));
    INFO(name);
    REQUIRE(r.status == Status::UpperBound);
    CHECK(has_tag(r, "Thm-principal-2(b)"));
    CHECK(fp(r.bound) == fp(sha2(g, Coefficient::zmod(2), SubgroupKind::Abelian).group));
  }
  BrauerReport real = brnr_bound(named("S3"), preset("R"));
  CHECK(has_tag(real, "Cor-racines(c)"));
  CHECK(notes_mention(real, "Sylow 2-subgroup is abelian"));
  CHECK(real.bound.is_trivial());
  BrauerReport d4 = brnr_bound(named("D4"), preset("R"));
  CHECK_FALSE(notes_mention(d4, "Sylow 2-subgroup is abelian"));
}

TEST_CASE("perfect groups with B0 = 0 vanish") {
  BrauerReport r = brnr_bound(named("A5"), preset("Qp:7"));
  CHECK(r.status == Status::ZeroByTheorem);
  CHECK(has_tag(r, "Thm-racinesfinies(ii)"));
  CHECK(r.bound.is_trivial());
}

TEST_CASE("Cyc failure leaves only the odd part") {
  BrauerReport r = brnr_bound(named("C8"), preset("Q"));
  CHECK(r.status == Status::OddPartUpperBound);
  CHECK(r.applied ==
        std::vector<std::string>{"Thm-principal-1(iii)", "Thm-principal-2(b)", "Thm-principal-1(ii)"});
  CHECK(notes_mention(r, "of order 8"));
  CHECK(r.bound.is_trivial());
  CHECK(brnr_bound(named("Q16"), preset("Q")).status == Status::OddPartUpperBound);
  BrauerReport m = brnr_bound(named("C3xC8"), preset("Q2"));
  CHECK(m.status == Status::OddPartUpperBound);
}

TEST_CASE("real reports are elementary abelian") {
  for (const auto& e : catalog_entries()) {
    if (e.order > 32) continue;
    FiniteGroup g = *catalog_group(e.name);
    INFO(e.name);
    BrauerReport r = real_report(g);
    CHECK(has_tag(r, "Cor-racines(c)"));
    for (const auto& d : r.bound.fingerprint().invariants) CHECK(d == 2);
    if (r.status != Status::ZeroByCoprimality) CHECK(has_tag(r, "Cor-reel"));
  }
  CHECK(real_report(named("C3")).status == Status::ZeroByCoprimality);
}

TEST_CASE("character kernel against brute force") {
  CHECK(brute_kernel_order(named("Q8"), 2) == 4);
  CHECK(fp(character_kernel_mod(named("Q8"), 2)) == "[2,2]");
  for (const char* name : {"C4", "C2xC2", "D4", "Q8", "S3", "A4", "D6", "Q16", "C2xC4", "S4"})
    for (Residue r : {2, 4, 6}) {
      FiniteGroup g = named(name);
      INFO(name, " r=", r);
      CHECK(*character_kernel_mod(g, r).order() == BigInt(static_cast<unsigned long>(brute_kernel_order(g, r))));
    }
  CHECK(code_of([] { character_kernel_mod(named("C4"), 0); }) == ErrorCode::InvalidInput);
}

TEST_CASE("algebraic bound preconditions") {
  CHECK(code_of([] { algebraic_bound(named("Q8"), preset("C")); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { algebraic_bound(named("C8"), preset("Q")); }) == ErrorCode::CycFailed);
  BrauerReport r = algebraic_bound(named("Q8"), preset("R"));
  CHECK(r.status == Status::UpperBound);
  CHECK(has_tag(r, "Thm-racinesfinies(i)"));
  CHECK(fp(r.bound) == "[2,2]");
  CHECK(algebraic_bound(named("A5"), preset("Qp:7")).bound.is_trivial());
}

TEST_CASE("simple group reports") {
  CHECK(code_of([] { simple_group_report(named("S3"), preset("Qp:7")); }) == ErrorCode::NotPerfect);
  CHECK(code_of([] { simple_group_report(named("A5"), preset("C")); }) == ErrorCode::InvalidInput);
  BrauerReport r = simple_group_report(named("A5"), preset("Qp:7"));
  CHECK(r.status == Status::ZeroByTheorem);
  CHECK(has_tag(r, "Thm-racinesfinies(ii)"));
  Limits tight;
  tight.cohomology_cap = 32;
  BrauerReport capped = simple_group_report(named("A5"), preset("Qp:7"), tight);
  CHECK(capped.status == Status::UpperBound);
  CHECK(notes_mention(capped, "B0 not computed"));
  CHECK(simple_group_report(FiniteGroup(), preset("R")).status == Status::ZeroByTheorem);
}

TEST_CASE("reports carry their inputs") {
  BrauerReport r = brnr_bound(named("D4"), preset("Qp:3"));
  CHECK(r.group_name == "D4");
  CHECK(r.group_order == 8);
  CHECK(r.profile == "Qp:3 (mu = Z/2)");
  CHECK(status_name(Status::OddPartUpperBound) == "OddPartUpperBound");
}
