#include "brauer/group.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

#include "brauer/error.hpp"

namespace brauer {

Limits default_limits() {
  Limits l;
  if (const char* env = std::getenv("BRAUER_CAP")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) l.cohomology_cap = v;
  }
  return l;
}

FiniteGroup::FiniteGroup() : n_(1), table_{0} { finish(); }

FiniteGroup::FiniteGroup(std::size_t n, std::vector<Elem> table, std::string name)
    : n_(n), table_(std::move(table)), name_(std::move(name)) {}

void FiniteGroup::finish() {
  inv_.assign(n_, 0);
  for (Elem g = 0; g < n_; ++g)
    for (Elem h = 0; h < n_; ++h)
      if (mul(g, h) == 0) {
        inv_[g] = h;
        break;
      }
  orders_.assign(n_, 1);
  for (Elem g = 1; g < n_; ++g) {
    unsigned k = 1;
    Elem x = g;
    while (x != 0) {
      x = mul(x, g);
      ++k;
    }
    orders_[g] = k;
  }
}

FiniteGroup FiniteGroup::from_trusted_table(std::size_t n, std::vector<Elem> table,
                                            std::string name) {
  FiniteGroup g(n, std::move(table), std::move(name));
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<long long>>& rows,
                                           std::string name) {
  const std::size_t n = rows.size();
  if (n == 0) fail(ErrorCode::InvalidInput, "empty Cayley table");
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      fail(ErrorCode::InvalidInput, "Cayley table is not square (row " + std::to_string(i) + ")");
    for (std::size_t j = 0; j < n; ++j)
      if (rows[i][j] < 0 || static_cast<std::size_t>(rows[i][j]) >= n)
        fail(ErrorCode::InvalidInput, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                          ") out of range");
  }
  auto at = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(rows[a][b]); };

  std::size_t e = n;
  for (std::size_t c = 0; c < n && e == n; ++c) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = at(c, x) == x && at(x, c) == x;
    if (ok) e = c;
  }
  if (e == n) fail(ErrorCode::NoIdentity, "no element acts as a two-sided identity");

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = at(a, b);
      for (std::size_t c = 0; c < n; ++c)
        if (at(ab, c) != at(a, at(b, c))) {
          std::ostringstream os;
          os << "(" << a << "*" << b << ")*" << c << " != " << a << "*(" << b << "*" << c << ")";
          fail(ErrorCode::NotAssociative, os.str());
        }
    }

  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) found = at(a, b) == e && at(b, a) == e;
    if (!found) fail(ErrorCode::NoInverse, "element " + std::to_string(a) + " has no inverse");
  }

  // Swap labels 0 and e.
  auto relabel = [&](std::size_t x) -> Elem {
    if (x == e) return 0;
    if (x == 0) return static_cast<Elem>(e);
    return static_cast<Elem>(x);
  };
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[relabel(a) * n + relabel(b)] = relabel(at(a, b));
  return from_trusted_table(n, std::move(table), std::move(name));
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<std::uint32_t>>& gens,
                                           std::size_t degree, std::size_t cap,
                                           std::string name) {
  using Perm = std::vector<std::uint32_t>;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].size() != degree)
      fail(ErrorCode::InvalidPermutation,
           "generator " + std::to_string(i + 1) + " has wrong degree");
    std::vector<bool> hit(degree, false);
    for (auto v : gens[i]) {
      if (v >= degree || hit[v])
        fail(ErrorCode::InvalidPermutation,
             "generator " + std::to_string(i + 1) + " is not a bijection");
      hit[v] = true;
    }
  }
  auto compose = [&](const Perm& a, const Perm& b) {  // a first, then b
    Perm out(degree);
    for (std::size_t x = 0; x < degree; ++x) out[x] = b[a[x]];
    return out;
  };
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::vector<Perm> elems{id};
  std::map<Perm, Elem> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& s : gens) {
      Perm p = compose(elems[i], s);
      if (index.count(p)) continue;
      if (elems.size() >= cap)
        fail(ErrorCode::OrderCapExceeded,
             "permutation group exceeds order cap " + std::to_string(cap));
      index.emplace(p, static_cast<Elem>(elems.size()));
      elems.push_back(std::move(p));
    }
  const std::size_t n = elems.size();
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elems[a], elems[b]));
  return from_trusted_table(n, std::move(table), std::move(name));
}

Elem FiniteGroup::pow(Elem a, long long k) const {
  const long long m = orders_[a];
  k %= m;
  if (k < 0) k += m;
  Elem x = 0;
  for (long long i = 0; i < k; ++i) x = mul(x, a);
  return x;
}

std::uint64_t FiniteGroup::exponent() const {
  std::uint64_t e = 1;
  for (auto o : orders_) e = std::lcm(e, static_cast<std::uint64_t>(o));
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = a + 1; b < n_; ++b)
      if (!commute(a, b)) return false;
  return true;
}

std::vector<std::vector<long long>> FiniteGroup::table_rows() const {
  std::vector<std::vector<long long>> rows(n_, std::vector<long long>(n_));
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b) rows[a][b] = mul(a, b);
  return rows;
}

PermutationInput parse_permutations(const std::string& text) {
  std::vector<std::vector<std::vector<std::uint32_t>>> cycles_per_line;
  std::size_t degree = 0;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto where = [&](std::size_t col) {
      return "line " + std::to_string(lineno) + ", column " + std::to_string(col + 1);
    };
    std::vector<std::vector<std::uint32_t>> cycles;
    std::size_t i = 0;
    bool any = false;
    while (i < line.size()) {
      char c = line[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (c != '(') fail(ErrorCode::InvalidPermutation, "expected '(' at " + where(i));
      ++i;
      any = true;
      std::vector<std::uint32_t> cyc;
      for (;;) {
        while (i < line.size() && (std::isspace(static_cast<unsigned char>(line[i])) || line[i] == ','))
          ++i;
        if (i >= line.size()) fail(ErrorCode::InvalidPermutation, "unterminated cycle at " + where(i));
        if (line[i] == ')') {
          ++i;
          break;
        }
        if (!std::isdigit(static_cast<unsigned char>(line[i])))
          fail(ErrorCode::InvalidPermutation, "expected a point at " + where(i));
        std::size_t start = i;
        unsigned long v = 0;
        while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
          v = v * 10 + static_cast<unsigned long>(line[i] - '0');
          if (v > 100000) fail(ErrorCode::InvalidPermutation, "point too large at " + where(start));
          ++i;
        }
        if (v == 0) fail(ErrorCode::InvalidPermutation, "points are 1-based, got 0 at " + where(start));
        if (std::find(cyc.begin(), cyc.end(), v - 1) != cyc.end())
          fail(ErrorCode::InvalidPermutation, "repeated point in a cycle at " + where(start));
        cyc.push_back(static_cast<std::uint32_t>(v - 1));
        degree = std::max<std::size_t>(degree, v);
      }
      cycles.push_back(std::move(cyc));
    }
    if (any) cycles_per_line.push_back(std::move(cycles));
  }
  PermutationInput out;
  out.degree = degree;
  for (const auto& cycles : cycles_per_line) {
    std::vector<std::uint32_t> p(degree);
    std::iota(p.begin(), p.end(), 0u);
    // Cycles on one line compose left to right.
    for (const auto& cyc : cycles) {
      std::vector<std::uint32_t> c(degree);
      std::iota(c.begin(), c.end(), 0u);
      for (std::size_t k = 0; k < cyc.size(); ++k) c[cyc[k]] = cyc[(k + 1) % cyc.size()];
      for (auto& v : p) v = c[v];
    }
    out.generators.push_back(std::move(p));
  }
  if (out.generators.empty()) fail(ErrorCode::InvalidPermutation, "no generators given");
  return out;
}

// ---------------------------------------------------------------------------

std::size_t ElementSet::size() const {
  std::size_t s = 0;
  for (auto w : words_) s += static_cast<std::size_t>(std::popcount(w));
  return s;
}

bool ElementSet::subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

std::vector<Elem> ElementSet::elements() const {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(static_cast<Elem>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      w &= w - 1;
    }
  }
  return out;
}

std::vector<unsigned> prime_factors(std::uint64_t n) {
  std::vector<unsigned> out;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(static_cast<unsigned>(p));
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(static_cast<unsigned>(n));
  return out;
}

}  // namespace brauer
