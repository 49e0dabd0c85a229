// Deterministic search for a group of order 64 with nontrivial B0.
//
// Each candidate is built in two steps. First a class <= 2 group Q of order
// 32, a central extension 0 -> F_2^c -> Q -> F_2^a -> 0 given by a bilinear
// cocycle beta: (x, z)(x', z') = (x + x', z + z' + beta(x, x')); bilinear
// cocycles are always associative. Then G is the central extension of Q by
// Z/2 along a random nonzero class of H^2(Q, Z/2), so G ranges over groups
// of order 64 and class <= 3. Samples come from a fixed-seed generator; the
// first hit is confirmed on the oracle path and written as a Cayley table.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "brauer/cohomology.hpp"
#include "brauer/oracle.hpp"

using namespace brauer;

namespace {

FiniteGroup bilinear_extension(unsigned a, unsigned c, const std::vector<std::uint32_t>& beta) {
  const std::size_t q = std::size_t{1} << a;
  const std::size_t n = q << c;
  auto form = [&](std::uint32_t x, std::uint32_t y) {
    std::uint32_t z = 0;
    for (unsigned i = 0; i < a; ++i)
      if (x >> i & 1)
        for (unsigned j = 0; j < a; ++j)
          if (y >> j & 1) z ^= beta[i * a + j];
    return z;
  };
  std::vector<Elem> t(n * n);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = 0; v < n; ++v) {
      std::uint32_t x = u % q, z = u / q, x2 = v % q, z2 = v / q;
      t[u * n + v] = static_cast<Elem>((x ^ x2) + q * (z ^ z2 ^ form(x, x2)));
    }
  return FiniteGroup::from_trusted_table(n, std::move(t));
}

FiniteGroup extend(const FiniteGroup& q, const Cochain2& f) {
  const std::size_t m = q.order(), n = 2 * m;
  std::vector<Elem> t(n * n);
  for (Elem u = 0; u < n; ++u)
    for (Elem v = 0; v < n; ++v) {
      Elem x = u % m, y = v % m;
      Elem z = (u / m + v / m + static_cast<Elem>(f[x * m + y])) & 1;
      t[u * n + v] = q.mul(x, y) + static_cast<Elem>(m) * z;
    }
  return FiniteGroup::from_trusted_table(n, std::move(t));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"search for an order-64 group with nontrivial B0"};
  std::uint64_t seed = 64;
  unsigned samples = 4000;
  std::string out = "fixtures/o64-demarche.json";
  app.add_option("--seed", seed);
  app.add_option("--samples", samples);
  app.add_option("--out", out);
  CLI11_PARSE(app, argc, argv);

  std::mt19937_64 rng(seed);
  Limits limits;
  limits.oracle_cap = 64;
  const std::pair<unsigned, unsigned> shapes[] = {{3, 2}, {4, 1}, {2, 3}};
  auto t0 = std::chrono::steady_clock::now();
  for (unsigned s = 0; s < samples; ++s) {
    auto [a, c] = shapes[s % 3];
    std::vector<std::uint32_t> beta(a * a);
    for (auto& b : beta) b = static_cast<std::uint32_t>(rng() & ((1u << c) - 1));
    FiniteGroup q = bilinear_extension(a, c, beta);
    H2Result h = h2(q, Coefficient::zmod(2), limits);
    if (h.reps.empty()) continue;
    std::vector<unsigned> pick(h.reps.size());
    bool any = false;
    for (auto& bit : pick) any |= (bit = static_cast<unsigned>(rng() & 1));
    if (!any) pick[rng() % pick.size()] = 1;
    Cochain2 f(q.order() * q.order(), 0);
    for (std::size_t i = 0; i < pick.size(); ++i)
      if (pick[i])
        for (std::size_t k = 0; k < f.size(); ++k) f[k] = (f[k] + h.reps[i][k]) % 2;
    FiniteGroup g = extend(q, f);
    if (g.is_abelian()) continue;
    AbelianGroup b0 = sha2(g, Coefficient::qmodz(), SubgroupKind::Bicyclic, limits).group;
    if (b0.is_trivial()) continue;

    Fingerprint main_fp = b0.fingerprint();
    Fingerprint ab_fp = sha2(g, Coefficient::qmodz(), SubgroupKind::Abelian, limits).group.fingerprint();
    Fingerprint oracle_fp = oracle::sha2_dense(g, Coefficient::qmodz(), SubgroupKind::Bicyclic, 64);
    std::cout << "sample " << s << " (a=" << a << ", c=" << c << "): B0 " << main_fp.to_string()
              << ", abelian kind " << ab_fp.to_string() << ", oracle " << oracle_fp.to_string()
              << "\n";
    if (!(main_fp == oracle_fp) || !(main_fp == ab_fp)) {
      std::cerr << "paths disagree on sample " << s << "\n";
      return 4;
    }
    nlohmann::ordered_json j;
    j["name"] = "o64-demarche";
    j["order"] = g.order();
    j["table"] = g.table_rows();
    j["provenance"] = {{"tool", "find_fixture"},
                       {"seed", seed},
                       {"sample", s},
                       {"shape", {{"a", a}, {"c", c}}},
                       {"beta", beta},
                       {"extension_class", pick},
                       {"b0", main_fp.to_string()}};
    std::ofstream file(out);
    if (!file) {
      std::cerr << "cannot write " << out << "\n";
      return 2;
    }
    file << j.dump() << "\n";
    std::cout << "wrote " << out << " after "
              << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()
              << "s\n";
    return 0;
  }
  std::cerr << "no candidate with nontrivial B0 in " << samples << " samples\n";
  return 1;
}
