#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "brauer/catalog.hpp"
#include "brauer/cohomology.hpp"
#include "test_util.hpp"

using namespace brauer;
using test_util::code_of;

namespace {

std::string fp(const AbelianGroup& a) { return a.fingerprint().to_string(); }

std::string expected(const CatalogEntry& e, const std::string& quantity) {
  for (const auto& v : e.expected)
    if (v.quantity == quantity) return v.value;
  return {};
}

std::vector<BigInt> parse_invariants(const std::string& s) {
  std::vector<BigInt> out;
  std::string cur;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c))) cur += c;
    else if (!cur.empty()) {
      out.emplace_back(cur);
      cur.clear();
    }
  }
  return out;
}

// Z/gcd(d, r) for each d.
std::vector<BigInt> gcds(const std::vector<BigInt>& ds, Residue r) {
  std::vector<BigInt> out;
  for (const auto& d : ds) out.push_back(gcd(d, BigInt(static_cast<long>(r))));
  return out;
}

// Entries small enough for the whole suite to stay quick.
std::vector<CatalogEntry> small_entries(std::size_t max_order) {
  std::vector<CatalogEntry> out;
  for (const auto& e : catalog_entries())
    if (e.order <= max_order) out.push_back(e);
  return out;
}

bool same_class(const AbelianGroup& a, const IntVector& x, const IntVector& y) {
  IntVector d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - y[i];
  return a.is_zero(d);
}

}  // namespace

TEST_CASE("coefficients and effective moduli") {
  CHECK(parse_coefficient("q").is_qmodz());
  CHECK(parse_coefficient("Q/Z").is_qmodz());
  CHECK(parse_coefficient("Z/6") == Coefficient::zmod(6));
  CHECK(code_of([] { parse_coefficient("0"); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { parse_coefficient("-3"); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { parse_coefficient("one"); }) == ErrorCode::InvalidInput);
  CHECK(effective_modulus(12, 8) == 4);
  CHECK(effective_modulus(9, 6) == 3);
  CHECK(effective_modulus(5, 8) == 1);
  CHECK(effective_modulus(64, 24) == 8);
}

TEST_CASE("cyclic groups") {
  for (unsigned n = 1; n <= 12; ++n) {
    FiniteGroup g = cyclic_product({n});
    CHECK(h2(g, Coefficient::qmodz()).group.is_trivial());
    for (Residue r = 1; r <= 12; ++r) {
      INFO("n=", n, " r=", r);
      const long expect = std::gcd<long, long>(n, r);
      CHECK(h2(g, Coefficient::zmod(r)).group.order() == BigInt(expect));
      CHECK(h1(g, Coefficient::zmod(r)).group.order() == BigInt(expect));
    }
  }
}

TEST_CASE("h1 is the product of gcd(d_i, r)") {
  for (const auto& e : small_entries(32))
    for (Residue r : {2, 3, 4, 6, 8}) {
      FiniteGroup g = *catalog_group(e.name);
      auto ab = parse_invariants(expected(e, "abelianization"));
      INFO(e.name, " r=", r);
      CHECK(fp(h1(g, Coefficient::zmod(r)).group) == fp(AbelianGroup::from_orders(gcds(ab, r))));
    }
}

TEST_CASE("universal coefficients: H^2(G, Z/r) from M(G) and G^ab") {
  for (const auto& e : small_entries(32)) {
    FiniteGroup g = *catalog_group(e.name);
    auto ab = parse_invariants(expected(e, "abelianization"));
    auto m = parse_invariants(expected(e, "schur_multiplier"));
    CHECK(fp(h2(g, Coefficient::qmodz()).group) == expected(e, "schur_multiplier"));
    for (Residue r : {2, 3, 4, 6}) {
      INFO(e.name, " r=", r);
      auto parts = gcds(m, r);
      for (const auto& d : gcds(ab, r)) parts.push_back(d);
      CHECK(fp(h2(g, Coefficient::zmod(r)).group) == fp(AbelianGroup::from_orders(parts)));
    }
  }
}

TEST_CASE("representatives are cocycles with the claimed classes") {
  std::mt19937_64 rng(17);
  for (const char* name : {"D4", "Q8", "A4", "C2xC4", "S4", "Heis3", "C2xC2xC2"})
    for (Coefficient c : {Coefficient::zmod(2), Coefficient::zmod(4), Coefficient::qmodz()}) {
      FiniteGroup g = *catalog_group(name);
      H2Result h = h2(g, c);
      INFO(name, " ", c.to_string());
      REQUIRE(h.reps.size() == h.group.ngens());
      for (std::size_t i = 0; i < h.reps.size(); ++i) {
        CHECK_FALSE(cocycle_violation(g, h.reps[i], h.modulus).has_value());
        CHECK(h.in_cocycle_space(h.reps[i]));
        IntVector e(h.reps.size(), 0);
        e[i] = 1;
        CHECK(same_class(h.group, h.class_of(h.reps[i]), e));

        Cochain1 b(g.order(), 0);
        for (std::size_t x = 1; x < g.order(); ++x) b[x] = static_cast<Residue>(rng() % h.modulus);
        Cochain2 shifted = coboundary(g, b, h.modulus);
        for (std::size_t k = 0; k < shifted.size(); ++k)
          shifted[k] = (shifted[k] + h.reps[i][k]) % h.modulus;
        CHECK_FALSE(cocycle_violation(g, shifted, h.modulus).has_value());
        CHECK(same_class(h.group, h.class_of(shifted), e));
      }
    }
}

TEST_CASE("a corrupted cocycle is detected") {
  FiniteGroup g = *catalog_group("C2xC2");
  H2Result h = h2(g, Coefficient::zmod(2));
  Cochain2 c = h.reps.front();
  c[1 * g.order() + 2] ^= 1;
  CHECK(cocycle_violation(g, c, 2).has_value());
}

TEST_CASE("restriction is transitive") {
  FiniteGroup g = symmetric(4);
  const Coefficient coeff = Coefficient::zmod(2);
  const Residue mod = sha_modulus(coeff, g.order());
  SylowResult p2 = sylow_subgroup(g, 2);
  EmbeddedGroup h = subgroup_group(g, p2.subgroup);
  H2Result h2g = h2(g, coeff, {}, mod), h2h = h2(h.group, coeff, {}, mod);
  AbelianHom gh = restriction_hom(g, h, h2g, h2h);
  for (Elem x = 1; x < h.group.order(); ++x) {
    Elem gens[] = {x};
    SubgroupSet k_in_h = generated_subgroup(h.group, gens);
    Elem gens_g[] = {h.embedding[x]};
    SubgroupSet k_in_g = generated_subgroup(g, gens_g);
    EmbeddedGroup kh = subgroup_group(h.group, k_in_h), kg = subgroup_group(g, k_in_g);
    H2Result h2k = h2(kh.group, coeff, {}, mod);
    H2Result h2k_g = h2(kg.group, coeff, {}, mod);
    REQUIRE(h2k.group.fingerprint() == h2k_g.group.fingerprint());
    AbelianHom two_step = compose(gh, restriction_hom(h.group, kh, h2h, h2k));
    AbelianHom direct = restriction_hom(g, kg, h2g, h2k_g);
    // Both land on the cyclic group H^2(K, Z/2); compare the orders of images of each generator.
    for (std::size_t i = 0; i < h2g.group.ngens(); ++i) {
      IntVector e(h2g.group.ngens(), 0);
      e[i] = 1;
      CHECK(h2k.group.is_zero(two_step.apply(e)) == h2k_g.group.is_zero(direct.apply(e)));
    }
  }
}

TEST_CASE("sha1 vanishes and the Sha2 kinds are nested") {
  for (const auto& e : small_entries(24)) {
    FiniteGroup g = *catalog_group(e.name);
    for (Coefficient c : {Coefficient::zmod(2), Coefficient::zmod(4), Coefficient::zmod(3),
                          Coefficient::qmodz()}) {
      INFO(e.name, " ", c.to_string());
      for (SubgroupKind k : {SubgroupKind::Cyclic, SubgroupKind::Bicyclic, SubgroupKind::Abelian})
        CHECK(sha1(g, c, k).group.is_trivial());
      auto cyc = sha2(g, c, SubgroupKind::Cyclic), bic = sha2(g, c, SubgroupKind::Bicyclic),
           ab = sha2(g, c, SubgroupKind::Abelian);
      CHECK(*bic.group.order() <= *cyc.group.order());
      CHECK(*ab.group.order() <= *bic.group.order());
      CHECK(*cyc.group.order() % *bic.group.order() == 0);
      CHECK(*bic.group.order() % *ab.group.order() == 0);
      if (g.is_abelian()) CHECK(ab.group.is_trivial());
    }
    CHECK(character_kernel(g, SubgroupKind::Cyclic).is_trivial());
  }
}

TEST_CASE("the inclusion lands in the kernel of every restriction") {
  FiniteGroup g = *catalog_group("C2xC2xC2");
  ShaResult s = sha2(g, Coefficient::qmodz(), SubgroupKind::Cyclic);
  CHECK(s.group.fingerprint().to_string() == "[2,2,2]");
  for (const auto& m : s.per_subgroup_maps) CHECK(compose(s.inclusion, m).is_zero());
}

TEST_CASE("caps and coefficient errors") {
  Limits small;
  small.cohomology_cap = 16;
  CHECK(code_of([&] { h2(symmetric(4), Coefficient::zmod(2), small); }) == ErrorCode::OrderCapExceeded);
  CHECK(code_of([] { h2(cyclic_product({128}), Coefficient::qmodz()); }) == ErrorCode::OrderCapExceeded);
  CHECK(code_of([] { h2(cyclic_product({4}), Coefficient::qmodz(), {}, 6); }) ==
        ErrorCode::CoefficientMismatch);
  FiniteGroup g = cyclic_product({4});
  H1Result a = h1(g, Coefficient::zmod(2)), b = h1(g, Coefficient::zmod(4));
  EmbeddedGroup whole{g, {0, 1, 2, 3}};
  CHECK(code_of([&] { restriction_hom1(whole, a, b); }) == ErrorCode::CoefficientMismatch);
}

TEST_CASE("results do not depend on the thread count") {
  for (const char* name : {"S4", "C2xC2xC4", "Heis3"}) {
    Limits one, many;
    many.threads = 4;
    FiniteGroup g = *catalog_group(name);
    for (SubgroupKind k : {SubgroupKind::Cyclic, SubgroupKind::Bicyclic, SubgroupKind::Abelian}) {
      ShaResult a = sha2(g, Coefficient::qmodz(), k, one), b = sha2(g, Coefficient::qmodz(), k, many);
      CHECK(a.group.fingerprint() == b.group.fingerprint());
      CHECK(a.inclusion.matrix() == b.inclusion.matrix());
    }
    H2Result x = h2(g, Coefficient::zmod(4), one), y = h2(g, Coefficient::zmod(4), many);
    CHECK(x.reps == y.reps);
  }
}
