#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brauer/catalog.hpp"
#include "brauer/cohomology.hpp"
#include "brauer/error.hpp"
#include "brauer/oracle.hpp"
#include "frozen_values.hpp"

using namespace brauer;

namespace {

bool all_passed(const oracle::OracleReport& r) {
  for (const auto& c : r.checks)
    if (!c.passed) return false;
  return r.match;
}

}  // namespace

TEST_CASE("frozen Sha2 values hold on both paths") {
  for (const auto& v : frozen::kSha2) {
    FiniteGroup g = *catalog_group(v.group);
    Coefficient c = parse_coefficient(v.coeff);
    SubgroupKind k = parse_kind(v.kind);
    INFO(v.group, " ", v.coeff, " ", v.kind);
    CHECK(sha2(g, c, k).group.fingerprint().to_string() == v.value);
    CHECK(oracle::sha2_dense(g, c, k, 32).to_string() == v.value);
  }
}

TEST_CASE("frozen H2 values hold on both paths") {
  for (const auto& v : frozen::kH2) {
    FiniteGroup g = *catalog_group(v.group);
    Coefficient c = parse_coefficient(v.coeff);
    INFO(v.group, " ", v.coeff);
    CHECK(h2(g, c).group.fingerprint().to_string() == v.value);
    CHECK(oracle::h2_dense(g, c, 32).to_string() == v.value);
  }
}

TEST_CASE("certify accepts unmodified results") {
  for (const char* name : {"C4", "C2xC4", "D4", "Q8", "S3", "A4", "C2xC2xC2", "S4"})
    for (Coefficient c : {Coefficient::zmod(2), Coefficient::zmod(4), Coefficient::zmod(6),
                          Coefficient::qmodz()}) {
      FiniteGroup g = *catalog_group(name);
      INFO(name, " ", c.to_string());
      oracle::OracleReport r = oracle::certify(g, h2(g, c));
      CHECK(all_passed(r));
      CHECK(r.witness.empty());
    }
}

TEST_CASE("certify catches mutated representatives") {
  FiniteGroup g = *catalog_group("C2xC4");
  const H2Result good = h2(g, Coefficient::zmod(4));
  REQUIRE(good.group.fingerprint().to_string() == "[2,2,4]");
  const std::size_t n = g.order();

  SUBCASE("one corrupted entry") {
    H2Result bad = good;
    Cochain2& c = bad.reps.back();
    c[3 * n + 5] = (c[3 * n + 5] + 1) % bad.modulus;
    oracle::OracleReport r = oracle::certify(g, bad);
    CHECK_FALSE(all_passed(r));
    CHECK_FALSE(r.witness.empty());
  }
  SUBCASE("a representative replaced by zero") {
    H2Result bad = good;
    std::fill(bad.reps.front().begin(), bad.reps.front().end(), 0);
    CHECK_FALSE(all_passed(oracle::certify(g, bad)));
  }
  SUBCASE("the order-4 representative doubled") {
    H2Result bad = good;
    for (auto& v : bad.reps.back()) v = (2 * v) % bad.modulus;
    CHECK_FALSE(all_passed(oracle::certify(g, bad)));
  }
  SUBCASE("a duplicated representative") {
    H2Result bad = good;
    bad.reps[1] = bad.reps[0];
    CHECK_FALSE(all_passed(oracle::certify(g, bad)));
  }
}

TEST_CASE("compare_h2 agrees across the small catalog") {
  for (const auto& e : catalog_entries()) {
    if (e.order > 24) continue;
    FiniteGroup g = *catalog_group(e.name);
    for (Coefficient c : {Coefficient::zmod(2), Coefficient::zmod(3), Coefficient::qmodz()}) {
      INFO(e.name, " ", c.to_string());
      CHECK(all_passed(oracle::compare_h2(g, c)));
    }
  }
}

TEST_CASE("h1 agrees with the homomorphism equations") {
  for (const char* name : {"C6", "C2xC2xC2", "D5", "Q8", "A4", "S4", "Heis3", "C3xC6"})
    for (Residue r : {2, 3, 4, 6, 9}) {
      FiniteGroup g = *catalog_group(name);
      INFO(name, " r=", r);
      CHECK(h1(g, Coefficient::zmod(r)).group.fingerprint() == oracle::h1_dense(g, r));
    }
}

TEST_CASE("the capped modulus gives the raw-modulus answer") {
  // The main path works over r_eff; the oracle solves with r itself.
  for (const char* name : {"C4", "S3", "D4", "Q8", "C2xC6", "A4"})
    for (Residue r : {5, 8, 12, 18, 30, 64}) {
      FiniteGroup g = *catalog_group(name);
      INFO(name, " r=", r);
      CHECK(h2(g, Coefficient::zmod(r)).group.fingerprint() == oracle::h2_dense(g, r));
      CHECK(sha2(g, Coefficient::zmod(r), SubgroupKind::Bicyclic).group.fingerprint() ==
            oracle::sha2_dense(g, Coefficient::zmod(r), SubgroupKind::Bicyclic));
    }
}

TEST_CASE("the oracle refuses groups above its cap") {
  FiniteGroup g = symmetric(4);
  CHECK_THROWS_AS(oracle::h2_dense(g, 2, 16), Error);
  oracle::OracleReport r = oracle::certify(g, h2(g, Coefficient::zmod(2)), 16);
  CHECK(r.match);
  CHECK(r.checks.back().detail.find("skipped") != std::string::npos);
}
