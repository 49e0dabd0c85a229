#include "brauer/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "brauer/error.hpp"

namespace brauer {

FiniteGroup cyclic_product(const std::vector<unsigned>& factors, std::string name) {
  std::size_t n = 1;
  for (unsigned m : factors) n *= m;
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t x = a, y = b, r = 0, place = 1;
      for (unsigned m : factors) {
        r += ((x % m + y % m) % m) * place;
        place *= m;
        x /= m;
        y /= m;
      }
      t[a * n + b] = static_cast<Elem>(r);
    }
  if (name.empty()) name = abelian_name(factors);
  return FiniteGroup::from_trusted_table(n, std::move(t), std::move(name));
}

FiniteGroup dihedral(unsigned n) {
  // r^i s^j at index i + n j; s r s = r^-1.
  const std::size_t N = 2 * std::size_t{n};
  std::vector<Elem> t(N * N);
  for (unsigned a = 0; a < N; ++a)
    for (unsigned b = 0; b < N; ++b) {
      unsigned i = a % n, j = a / n, k = b % n, l = b / n;
      unsigned e = j ? (i + n - k) % n : (i + k) % n;
      t[a * N + b] = e + n * ((j + l) % 2);
    }
  return FiniteGroup::from_trusted_table(N, std::move(t), "D" + std::to_string(n));
}

FiniteGroup dicyclic(unsigned m) {
  // a^i b^j at index i + 2m j; a^2m = 1, b^2 = a^m, b a b^-1 = a^-1.
  const unsigned o = 2 * m;
  const std::size_t N = 4 * std::size_t{m};
  std::vector<Elem> t(N * N);
  for (unsigned a = 0; a < N; ++a)
    for (unsigned b = 0; b < N; ++b) {
      unsigned i = a % o, j = a / o, k = b % o, l = b / o;
      Elem e;
      if (!j) e = (i + k) % o + o * l;
      else if (!l) e = (i + o - k) % o + o;
      else e = (i + o - k + m) % o;
      t[a * N + b] = e;
    }
  return FiniteGroup::from_trusted_table(N, std::move(t), "Q" + std::to_string(N));
}

FiniteGroup symmetric(unsigned n) {
  std::vector<std::uint32_t> swap(n), cyc(n);
  for (unsigned i = 0; i < n; ++i) {
    swap[i] = i;
    cyc[i] = (i + 1) % n;
  }
  if (n >= 2) std::swap(swap[0], swap[1]);
  return FiniteGroup::from_permutations({swap, cyc}, n, 512, "S" + std::to_string(n));
}

FiniteGroup alternating(unsigned n) {
  // 3-cycles (0 1 k) generate A_n.
  std::vector<std::vector<std::uint32_t>> gens;
  for (unsigned k = 2; k < n; ++k) {
    std::vector<std::uint32_t> p(n);
    std::iota(p.begin(), p.end(), 0u);
    p[0] = 1;
    p[1] = k;
    p[k] = 0;
    gens.push_back(p);
  }
  if (gens.empty()) gens.push_back(std::vector<std::uint32_t>(n ? n : 1, 0));
  return FiniteGroup::from_permutations(gens, n ? n : 1, 512, "A" + std::to_string(n));
}

FiniteGroup heisenberg(unsigned p) {
  // (a, b, c) at index a + p b + p^2 c; (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
  const std::size_t N = std::size_t{p} * p * p;
  std::vector<Elem> t(N * N);
  for (unsigned x = 0; x < N; ++x)
    for (unsigned y = 0; y < N; ++y) {
      unsigned a = x % p, b = x / p % p, c = x / p / p;
      unsigned a2 = y % p, b2 = y / p % p, c2 = y / p / p;
      unsigned ra = (a + a2) % p, rb = (b + b2) % p, rc = (c + c2 + a * b2) % p;
      t[x * N + y] = ra + p * rb + p * p * rc;
    }
  return FiniteGroup::from_trusted_table(N, std::move(t), "Heis" + std::to_string(p));
}

namespace {

void partitions(unsigned k, unsigned max_part, std::vector<unsigned>& cur,
                std::vector<std::vector<unsigned>>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned part = std::min(k, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(k - part, part, cur, out);
    cur.pop_back();
  }
}

std::string fp_of(const std::vector<unsigned>& orders) {
  std::vector<BigInt> o(orders.begin(), orders.end());
  return AbelianGroup::from_orders(o).fingerprint().to_string();
}

// Multiplier of an abelian group with invariant factors d1 | ... | dk:
// d_i repeated k - i times.
std::string abelian_multiplier(const std::vector<unsigned>& d) {
  std::vector<unsigned> out;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) out.push_back(d[i]);
  return fp_of(out);
}

const char* kDerived = "derived: main and oracle paths, frozen";
const char* kAbelian = "trivial: abelian";

CatalogEntry make(std::string name, std::string family, std::vector<unsigned> params,
                  std::string description, std::size_t order, std::string ab, std::string mult,
                  std::string b0, const char* b0_prov = kDerived) {
  CatalogEntry e{std::move(name), std::move(family), std::move(params), std::move(description),
                 order, {}};
  e.expected.push_back({"abelianization", std::move(ab), kDerived});
  e.expected.push_back({"schur_multiplier", std::move(mult), kDerived});
  e.expected.push_back({"b0", std::move(b0), b0_prov});
  return e;
}

std::vector<CatalogEntry> build_entries() {
  std::vector<CatalogEntry> out;
  for (unsigned n = 1; n <= 64; ++n)
    for (const auto& d : abelian_invariant_lists(n)) {
      std::string desc = d.size() <= 1 ? "cyclic group of order " + std::to_string(n)
                                       : "abelian group with invariant factors " + fp_of(d);
      out.push_back(make(abelian_name(d), d.size() <= 1 ? "cyclic" : "abelian", d, desc, n,
                         fp_of(d), abelian_multiplier(d), "[]", kAbelian));
    }
  for (unsigned n = 3; n <= 16; ++n) {
    std::string ab = n % 2 ? "[2]" : "[2,2]";
    std::string mult = n % 2 ? "[]" : "[2]";
    out.push_back(make("D" + std::to_string(n), "dihedral", {n},
                       "dihedral group of order " + std::to_string(2 * n), 2 * n, ab, mult, "[]"));
  }
  out.push_back(make("Q8", "quaternion", {2}, "quaternion group", 8, "[2,2]", "[]", "[]"));
  out.push_back(make("Q16", "quaternion", {4}, "generalized quaternion group of order 16", 16,
                     "[2,2]", "[]", "[]"));
  out.push_back(make("S3", "symmetric", {3}, "symmetric group on 3 points", 6, "[2]", "[]", "[]"));
  out.push_back(make("S4", "symmetric", {4}, "symmetric group on 4 points", 24, "[2]", "[2]", "[]"));
  out.push_back(make("A4", "alternating", {4}, "alternating group on 4 points", 12, "[3]", "[2]",
                     "[]"));
  out.push_back(make("A5", "alternating", {5}, "alternating group on 5 points", 60, "[]", "[2]",
                     "[]"));
  out.push_back(make("Heis3", "heisenberg", {3}, "unitriangular 3x3 matrices over F_3", 27,
                     "[3,3]", "[3,3]", "[]"));
  out.push_back(make("Heis5", "heisenberg", {5}, "unitriangular 3x3 matrices over F_5", 125,
                     "[5,5]", "[5,5]", "[]"));
  return out;
}

std::optional<std::vector<unsigned>> parse_product(const std::string& name) {
  std::vector<unsigned> factors;
  std::size_t i = 0;
  while (i < name.size()) {
    if (name[i] != 'C') return std::nullopt;
    ++i;
    std::size_t start = i;
    unsigned long long v = 0;
    while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) {
      v = v * 10 + static_cast<unsigned>(name[i] - '0');
      if (v > 4096) return std::nullopt;
      ++i;
    }
    if (i == start || v == 0) return std::nullopt;
    factors.push_back(static_cast<unsigned>(v));
    if (i < name.size()) {
      if (name[i] != 'x') return std::nullopt;
      ++i;
      if (i == name.size()) return std::nullopt;
    }
  }
  if (factors.empty()) return std::nullopt;
  return factors;
}

}  // namespace

std::vector<std::vector<unsigned>> abelian_invariant_lists(unsigned order) {
  // Product over primes of partitions of the exponent, combined into a
  // divisibility chain.
  std::vector<std::pair<unsigned, unsigned>> pe;
  unsigned n = order;
  for (unsigned p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      unsigned e = 0;
      while (n % p == 0) n /= p, ++e;
      pe.push_back({p, e});
    }
  if (n > 1) pe.push_back({n, 1});
  std::vector<std::vector<unsigned>> lists{{}};
  for (auto [p, e] : pe) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> cur;
    partitions(e, e, cur, parts);
    std::vector<std::vector<unsigned>> next;
    for (const auto& base : lists)
      for (const auto& part : parts) {
        // base and part both descending-by-size; align the largest factors.
        std::size_t len = std::max(base.size(), part.size());
        std::vector<unsigned> merged(len, 1);
        for (std::size_t i = 0; i < base.size(); ++i) merged[i] = base[i];
        for (std::size_t i = 0; i < part.size(); ++i) {
          unsigned q = 1;
          for (unsigned k = 0; k < part[i]; ++k) q *= p;
          merged[i] *= q;
        }
        next.push_back(merged);
      }
    lists = std::move(next);
  }
  for (auto& l : lists) std::reverse(l.begin(), l.end());
  std::sort(lists.begin(), lists.end(),
            [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  return lists;
}

std::string abelian_name(const std::vector<unsigned>& factors) {
  if (factors.empty()) return "C1";
  std::string s;
  for (unsigned m : factors) {
    if (!s.empty()) s += "x";
    s += "C" + std::to_string(m);
  }
  return s;
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_entries();
  return entries;
}

std::optional<CatalogEntry> find_entry(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return e;
  return std::nullopt;
}

std::optional<FiniteGroup> catalog_group(const std::string& name) {
  if (auto factors = parse_product(name)) {
    std::size_t n = 1;
    for (unsigned m : *factors) {
      n *= m;
      if (n > 4096) fail(ErrorCode::OrderCapExceeded, "catalog product " + name + " is too large");
    }
    return cyclic_product(*factors, name);
  }
  auto number = [&](std::size_t prefix) -> std::optional<unsigned> {
    if (name.size() <= prefix || name.size() > prefix + 3) return std::nullopt;
    unsigned v = 0;
    for (std::size_t i = prefix; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
      v = v * 10 + static_cast<unsigned>(name[i] - '0');
    }
    return v;
  };
  if (name.rfind("Heis", 0) == 0) {
    auto p = number(4);
    if (p && (*p == 3 || *p == 5)) return heisenberg(*p);
    return std::nullopt;
  }
  if (name.empty()) return std::nullopt;
  auto v = number(1);
  if (!v) return std::nullopt;
  switch (name[0]) {
    case 'D':
      if (*v >= 3 && *v <= 16) return dihedral(*v);
      break;
    case 'Q':
      if (*v == 8) return dicyclic(2);
      if (*v == 16) return dicyclic(4);
      break;
    case 'S':
      if (*v == 3 || *v == 4) return symmetric(*v);
      break;
    case 'A':
      if (*v == 4 || *v == 5) return alternating(*v);
      break;
  }
  return std::nullopt;
}

}  // namespace brauer
