#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <numeric>
#include <random>

#include "brauer/error.hpp"
#include "brauer/zlattice.hpp"

using namespace brauer;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

bool is_unimodular(const IntMatrix& m) {
  BigInt d = determinant(m);
  return d == 1 || d == -1;
}

std::vector<BigInt> big(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

IntMatrix mat(const std::vector<std::vector<long long>>& rows) {
  return IntMatrix::from_rows(rows, rows.front().size());
}

}  // namespace

TEST_CASE("smith form of a textbook matrix") {
  IntMatrix m = mat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  SmithForm s = smith_normal_form(m);
  CHECK(s.diagonal(0) == 2);
  CHECK(s.diagonal(1) == 6);
  CHECK(s.diagonal(2) == 12);
  CHECK(s.U * m * s.V == s.D);
}

TEST_CASE("smith form properties on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    IntMatrix m = random_matrix(rng, r, c, -9, 9);
    SmithForm s = smith_normal_form(m);
    REQUIRE(s.U * m * s.V == s.D);
    CHECK(is_unimodular(s.U));
    CHECK(is_unimodular(s.V));
    CHECK(s.V * s.V_inv == IntMatrix::identity(c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) CHECK(s.D(i, j) == 0);
    const std::size_t k = s.rank();
    for (std::size_t i = 0; i + 1 < k; ++i) {
      CHECK(s.diagonal(i) > 0);
      CHECK(s.diagonal(i + 1) % s.diagonal(i) == 0);
    }
    for (std::size_t i = k; i < std::min(r, c); ++i) CHECK(s.diagonal(i) == 0);
    if (r == c) {
      BigInt prod = 1;
      for (std::size_t i = 0; i < r; ++i) prod *= s.diagonal(i);
      BigInt d = determinant(m);
      CHECK(abs(d) == prod);
    }
  }
}

TEST_CASE("presentations reduce to invariant factors") {
  AbelianGroup a(2, mat({{2, 0}, {0, 3}}));
  CHECK(a.fingerprint().to_string() == "[6]");
  AbelianGroup b(2, mat({{2, 4}}));
  CHECK(b.fingerprint().to_string() == "[2]+Z^1");
  CHECK_FALSE(b.order().has_value());
  AbelianGroup c = AbelianGroup::from_orders(big({4, 6, 1}));
  CHECK(c.fingerprint().to_string() == "[2,12]");
  CHECK(*c.exponent() == 12);
  CHECK(AbelianGroup::trivial().is_trivial());
  CHECK(AbelianGroup::from_orders(big({1, 1})).is_trivial());
}

TEST_CASE("normal coordinates round trip") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 1 + rng() % 4;
    IntMatrix rel = random_matrix(rng, n + rng() % 2, n, -6, 6);
    AbelianGroup a(n, rel);
    for (std::size_t j = 0; j < a.normal_rank(); ++j) {
      IntVector coords = a.normal_coords(a.normal_generator(j));
      for (std::size_t i = 0; i < coords.size(); ++i) CHECK(coords[i] == (i == j ? 1 : 0));
    }
    for (std::size_t i = 0; i < rel.rows(); ++i) CHECK(a.is_zero(rel.row(i)));
  }
}

TEST_CASE("hom validation rejects maps that ignore relations") {
  AbelianGroup z4 = AbelianGroup::from_orders(big({4}));
  AbelianGroup z2 = AbelianGroup::from_orders(big({2}));
  CHECK_NOTHROW(AbelianHom(z4, z2, mat({{1}})));
  CHECK_THROWS_AS(AbelianHom(z2, z4, mat({{1}})), Error);
  CHECK_NOTHROW(AbelianHom(z2, z4, mat({{2}})));
}

TEST_CASE("kernel, image and cokernel orders are exact") {
  // |ker| |im| = |A| and |im| |coker| = |B| on random homs of finite groups.
  std::mt19937_64 rng(3);
  const long sizes[] = {2, 3, 4, 6, 8, 9, 12};
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<BigInt> a_ord, b_ord;
    for (std::size_t i = 0, n = 1 + rng() % 3; i < n; ++i) a_ord.push_back(sizes[rng() % 7]);
    for (std::size_t i = 0, n = 1 + rng() % 3; i < n; ++i) b_ord.push_back(sizes[rng() % 7]);
    AbelianGroup a = AbelianGroup::from_orders(a_ord), b = AbelianGroup::from_orders(b_ord);
    IntMatrix m(a_ord.size(), b_ord.size());
    for (std::size_t i = 0; i < a_ord.size(); ++i)
      for (std::size_t j = 0; j < b_ord.size(); ++j) {
        // a_i * m_ij must vanish mod b_j.
        BigInt step = b_ord[j] / gcd(a_ord[i], b_ord[j]);
        m(i, j) = step * static_cast<long>(rng() % 5);
      }
    AbelianHom f(a, b, m);
    BigInt ker = *hom_kernel(f).group.order();
    BigInt im = *hom_image(f).order();
    BigInt cok = *hom_cokernel(f).group.order();
    CHECK(ker * im == *a.order());
    CHECK(im * cok == *b.order());
  }
}

TEST_CASE("kernel inclusion lands in the kernel") {
  AbelianGroup z4 = AbelianGroup::from_orders(big({4}));
  AbelianGroup z2 = AbelianGroup::from_orders(big({2}));
  AbelianHom f(z4, z2, mat({{1}}));
  KernelResult k = hom_kernel(f);
  CHECK(k.group.fingerprint().to_string() == "[2]");
  AbelianHom zero = compose(k.inclusion, f);
  CHECK(zero.is_zero());
  CokernelResult c = hom_cokernel(AbelianHom(z2, z4, mat({{2}})));
  CHECK(c.group.fingerprint().to_string() == "[2]");
}

TEST_CASE("direct sums and quotients") {
  auto s = direct_sum({AbelianGroup::from_orders(big({2})), AbelianGroup::from_orders(big({3}))});
  CHECK(s.group.fingerprint().to_string() == "[6]");
  CHECK(direct_sum_group({AbelianGroup::from_orders(big({2})), AbelianGroup::from_orders(big({4}))})
            .fingerprint()
            .to_string() == "[2,4]");
  CHECK(quotient_mod_n(AbelianGroup::from_orders(big({4, 6})), 2).fingerprint().to_string() == "[2,2]");
  CHECK(prime_to_part(AbelianGroup::from_orders(big({2, 12})).fingerprint(), 2).to_string() == "[3]");
}

TEST_CASE("residue helpers") {
  CHECK(mod_reduce(-3, 7) == 4);
  CHECK(gcd_residue(12, 18) == 6);
  for (Residue n : {5, 8, 9, 12, 64})
    for (Residue a = 1; a < n; ++a)
      if (std::gcd(a, n) == 1) CHECK(mod_reduce(a * mod_inverse(a, n), n) == 1);
}

TEST_CASE("modular kernel agrees with brute-force enumeration") {
  std::mt19937_64 rng(5);
  const Residue moduli[] = {2, 4, 6, 8, 9, 12};
  for (int trial = 0; trial < 120; ++trial) {
    const Residue n = moduli[rng() % 6];
    const std::size_t cols = 1 + rng() % 3, rows = rng() % 4;
    std::vector<std::vector<Residue>> m(rows, std::vector<Residue>(cols));
    for (auto& row : m)
      for (auto& v : row) v = static_cast<Residue>(rng() % n);
    ModularKernel k(m, cols, n);
    k.finalize();

    std::size_t count = 0;
    std::vector<Residue> x(cols, 0);
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
      if (i == cols) {
        bool zero = true;
        for (const auto& row : m) {
          Residue s = 0;
          for (std::size_t j = 0; j < cols; ++j) s = (s + row[j] * x[j]) % n;
          zero &= s == 0;
        }
        CHECK(k.contains(x) == zero);
        if (zero) {
          ++count;
          std::vector<Residue> c = k.coords(x);
          std::vector<Residue> back(cols, 0);
          for (std::size_t g = 0; g < k.ngens(); ++g)
            for (std::size_t j = 0; j < cols; ++j) back[j] = (back[j] + c[g] * k.generator(g)[j]) % n;
          CHECK(back == x);
        }
        return;
      }
      for (Residue v = 0; v < n; ++v) {
        x[i] = v;
        walk(i + 1);
      }
    };
    walk(0);
    std::size_t prod = 1;
    for (Residue o : k.orders()) prod *= static_cast<std::size_t>(o);
    CHECK(prod == count);
  }
}
