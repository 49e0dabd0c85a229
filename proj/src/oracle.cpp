#include "brauer/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "brauer/error.hpp"

namespace brauer::oracle {
namespace {

using Vec = std::vector<Residue>;
using Mat = std::vector<Vec>;

// Z/p^a
struct Ring {
  Residue p = 2;
  int a = 1;
  Residue q = 2;
};

Ring ring_of(Residue p, int a) {
  Ring r{p, a, 1};
  for (int i = 0; i < a; ++i) r.q *= p;
  return r;
}

Residue mm(Residue x, Residue y, Residue q) {
  return static_cast<Residue>(static_cast<unsigned __int128>(x) * static_cast<unsigned __int128>(y) % q);
}
Residue md(Residue x, Residue q) {
  x %= q;
  return x < 0 ? x + q : x;
}
int val(Residue x, const Ring& R) {
  if (x == 0) return R.a;
  int v = 0;
  while (x % R.p == 0) {
    x /= R.p;
    ++v;
  }
  return v;
}
Residue unit_inverse(Residue u, Residue q) {
  Residue r0 = q, r1 = md(u, q), s0 = 0, s1 = 1;
  while (r1 != 0) {
    Residue k = r0 / r1;
    Residue t = r0 - k * r1;
    r0 = r1;
    r1 = t;
    t = s0 - k * s1;
    s0 = s1;
    s1 = t;
  }
  return md(s0, q);
}
Residue ipow(Residue p, int k) {
  Residue out = 1;
  for (int i = 0; i < k; ++i) out *= p;
  return out;
}

struct Local {
  std::vector<int> v;  // per column; a marks a zero column
  Mat Q, Qi;           // column transform and its inverse (when tracked)
};

// P * A * Q = diag(p^v) over Z/p^a: minimal-valuation pivoting needs no
// gcd steps in a local ring, and the chain is automatic.
Local local_smith(Mat A, std::size_t cols, const Ring& R, bool track) {
  const Residue q = R.q;
  const std::size_t rows = A.size();
  Local L;
  L.v.assign(cols, R.a);
  if (track) {
    L.Q.assign(cols, Vec(cols, 0));
    L.Qi.assign(cols, Vec(cols, 0));
    for (std::size_t i = 0; i < cols; ++i) L.Q[i][i] = L.Qi[i][i] = 1 % q;
  }
  std::size_t live = rows;  // rows [t, live) may be nonzero
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    std::size_t bi = rows, bj = cols;
    int bv = R.a;
    for (std::size_t i = t; i < live && bv > 0; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (A[i][j] == 0) continue;
        int vv = val(A[i][j], R);
        if (vv < bv) {
          bv = vv;
          bi = i;
          bj = j;
          if (vv == 0) break;
        }
      }
    if (bi == rows) break;
    std::swap(A[t], A[bi]);
    if (bj != t) {
      for (std::size_t i = 0; i < live; ++i) std::swap(A[i][t], A[i][bj]);
      if (track) {
        for (auto& row : L.Q) std::swap(row[t], row[bj]);
        std::swap(L.Qi[t], L.Qi[bj]);
      }
    }
    const Residue pv = ipow(R.p, bv);
    const Residue u = A[t][t] / pv;
    const Residue uinv = unit_inverse(u, q);
    for (std::size_t j = t; j < cols; ++j) A[t][j] = mm(A[t][j], uinv, q);
    for (std::size_t i = t + 1; i < live; ++i) {
      if (A[i][t] == 0) continue;
      const Residue c = A[i][t] / pv;
      for (std::size_t j = t; j < cols; ++j)
        if (A[t][j]) A[i][j] = md(A[i][j] - mm(c, A[t][j], q), q);
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (A[t][j] == 0) continue;
      const Residue c = A[t][j] / pv;
      A[t][j] = 0;
      if (track) {
        for (auto& row : L.Q) row[j] = md(row[j] - mm(c, row[t], q), q);
        for (std::size_t l = 0; l < cols; ++l) L.Qi[t][l] = md(L.Qi[t][l] + mm(c, L.Qi[j][l], q), q);
      }
    }
    L.v[t] = bv;
    // Compact: move rows that became zero beyond the live range.
    for (std::size_t i = t + 1; i < live;) {
      bool zero = true;
      for (std::size_t j = t + 1; j < cols && zero; ++j) zero = A[i][j] == 0;
      if (zero) {
        --live;
        std::swap(A[i], A[live]);
      } else {
        ++i;
      }
    }
  }
  return L;
}

struct Module {
  std::vector<Vec> gens;
  std::vector<int> exps;  // order p^exps[i]
};

// Kernel of A (acting on column vectors of length cols).
Module local_kernel(const Mat& A, std::size_t cols, const Ring& R) {
  Local L = local_smith(A, cols, R, true);
  Module m;
  for (std::size_t i = 0; i < cols; ++i) {
    if (L.v[i] == 0) continue;
    const Residue s = ipow(R.p, R.a - L.v[i]);
    Vec g(cols);
    for (std::size_t k = 0; k < cols; ++k) g[k] = mm(L.Q[k][i], s, R.q);
    m.gens.push_back(std::move(g));
    m.exps.push_back(L.v[i]);
  }
  return m;
}

// log_p of the order of the row span.
int span_log(const Mat& rows, std::size_t cols, const Ring& R) {
  if (rows.empty()) return 0;
  Local L = local_smith(rows, cols, R, false);
  int s = 0;
  for (int v : L.v) s += R.a - v;
  return s;
}

// Generators of the row span in reduced form.
Mat span_basis(const Mat& rows, std::size_t cols, const Ring& R) {
  if (rows.empty()) return {};
  Local L = local_smith(rows, cols, R, true);
  Mat out;
  for (std::size_t i = 0; i < cols; ++i) {
    if (L.v[i] >= R.a) continue;
    const Residue s = ipow(R.p, L.v[i]);
    Vec b(cols);
    for (std::size_t k = 0; k < cols; ++k) b[k] = mm(L.Qi[i][k], s, R.q);
    out.push_back(std::move(b));
  }
  return out;
}

// Exponents of the p-group (W + B) / B, read off from |p^k W + B|.
std::vector<int> quotient_exponents(const Mat& W, const Mat& B, std::size_t cols, const Ring& R) {
  const int base = span_log(B, cols, R);
  std::vector<int> s(R.a + 2, 0);
  for (int k = 0; k <= R.a; ++k) {
    Mat rows = B;
    const Residue pk = ipow(R.p, k) % R.q;
    for (const auto& w : W) {
      Vec x(cols);
      for (std::size_t j = 0; j < cols; ++j) x[j] = mm(w[j], pk, R.q);
      rows.push_back(std::move(x));
    }
    s[k] = span_log(rows, cols, R) - base;
  }
  std::vector<int> exps;
  // number of cyclic factors of exponent > k is s_k - s_{k+1}
  for (int e = R.a; e >= 1; --e) {
    int more = s[e - 1] - s[e];
    int more_next = s[e] - s[e + 1];
    for (int c = 0; c < more - more_next; ++c) exps.push_back(e);
  }
  return exps;
}

// ---------------------------------------------------------------------------
// Group helpers kept separate from the main path.

std::vector<bool> span_of(const FiniteGroup& g, const std::vector<Elem>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> list{0};
  in[0] = true;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (Elem s : gens) {
      Elem x = g.mul(s, list[i]);
      if (!in[x]) {
        in[x] = true;
        list.push_back(x);
      }
    }
  return in;
}

std::vector<Elem> members(const std::vector<bool>& in) {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < in.size(); ++i)
    if (in[i]) out.push_back(static_cast<Elem>(i));
  return out;
}

std::vector<Elem> first_fit_generators(const FiniteGroup& g) {
  std::vector<Elem> gens;
  std::vector<bool> cur = span_of(g, gens);
  for (Elem x = 1; x < g.order(); ++x)
    if (!cur[x]) {
      gens.push_back(x);
      cur = span_of(g, gens);
    }
  return gens;
}

// Left-tree parametrization: unknowns f(s, h), s in S, h != 1. For x = s p
// along the tree, f(x, k) = f(p, k) + f(s, p k) - f(s, p).
struct LeftParam {
  const FiniteGroup& g;
  std::vector<Elem> gens;
  std::vector<Elem> order;  // tree order, identity first
  std::vector<Elem> parent;
  std::vector<std::size_t> label;
  std::vector<std::pair<std::size_t, Elem>> loose;
  std::size_t N = 0;

  explicit LeftParam(const FiniteGroup& grp) : g(grp), gens(first_fit_generators(grp)) {
    const std::size_t n = g.order();
    N = gens.size() * (n - 1);
    parent.assign(n, 0);
    label.assign(n, 0);
    std::vector<bool> seen(n, false);
    seen[0] = true;
    order.push_back(0);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t s = 0; s < gens.size(); ++s) {
        const Elem p = order[i];
        const Elem x = g.mul(gens[s], p);
        if (!seen[x]) {
          seen[x] = true;
          parent[x] = p;
          label[x] = s;
          order.push_back(x);
        } else {
          loose.emplace_back(s, p);
        }
      }
  }

  std::size_t idx(std::size_t s, Elem h) const { return s * (g.order() - 1) + (h - 1); }

  Mat constraints(Residue q) const {
    const std::size_t n = g.order();
    std::vector<Mat> sym(n, Mat(n, Vec()));
    auto zero = Vec(N, 0);
    for (Elem k = 0; k < n; ++k) sym[0][k] = zero;
    auto bump = [&](Vec& v, std::size_t s, Elem h, Residue c) {
      if (h != 0) v[idx(s, h)] = md(v[idx(s, h)] + c, q);
    };
    for (std::size_t i = 1; i < order.size(); ++i) {
      const Elem x = order[i], p = parent[x];
      const std::size_t s = label[x];
      for (Elem k = 0; k < n; ++k) {
        Vec v = sym[p][k];
        bump(v, s, g.mul(p, k), 1);
        bump(v, s, p, -1);
        sym[x][k] = std::move(v);
      }
    }
    Mat rows;
    for (auto [s, p] : loose) {
      const Elem x = g.mul(gens[s], p);
      for (Elem k = 1; k < n; ++k) {
        Vec r(N);
        for (std::size_t j = 0; j < N; ++j) r[j] = md(sym[x][k][j] - sym[p][k][j], q);
        bump(r, s, g.mul(p, k), -1);
        bump(r, s, p, 1);
        if (std::any_of(r.begin(), r.end(), [](Residue v) { return v != 0; })) rows.push_back(std::move(r));
      }
    }
    return rows;
  }

  Vec params(const Cochain2& c, Residue q) const {
    const std::size_t n = g.order();
    Vec x(N);
    for (std::size_t s = 0; s < gens.size(); ++s)
      for (Elem h = 1; h < n; ++h) x[idx(s, h)] = md(c[gens[s] * n + h], q);
    return x;
  }

  Cochain2 table(const Vec& x, Residue q) const {
    const std::size_t n = g.order();
    Cochain2 f(n * n, 0);
    auto P = [&](std::size_t s, Elem h) -> Residue { return h == 0 ? 0 : x[idx(s, h)]; };
    for (std::size_t i = 1; i < order.size(); ++i) {
      const Elem y = order[i], p = parent[y];
      const std::size_t s = label[y];
      for (Elem k = 0; k < n; ++k) f[y * n + k] = md(f[p * n + k] + P(s, g.mul(p, k)) - P(s, p), q);
    }
    return f;
  }

  Vec coboundary_of_point(Elem x, Residue q) const {
    Vec v(N, 0);
    for (std::size_t s = 0; s < gens.size(); ++s)
      for (Elem h = 1; h < g.order(); ++h) {
        Residue val = (gens[s] == x) + (h == x) - (g.mul(gens[s], h) == x);
        v[idx(s, h)] = md(val, q);
      }
    return v;
  }
};

// Generators of Hom(H, Z/q) from the homomorphism equations.
std::vector<Vec> characters(const FiniteGroup& h, const Ring& R) {
  const std::size_t n = h.order();
  if (n == 1) return {};
  Mat rows;
  for (Elem a = 1; a < n; ++a)
    for (Elem b = 1; b < n; ++b) {
      Vec r(n - 1, 0);
      auto add = [&](Elem e, Residue c) {
        if (e != 0) r[e - 1] = md(r[e - 1] + c, R.q);
      };
      add(a, 1);
      add(b, 1);
      add(h.mul(a, b), -1);
      if (std::any_of(r.begin(), r.end(), [](Residue v) { return v != 0; })) rows.push_back(std::move(r));
    }
  Module k = local_kernel(rows, n - 1, R);
  std::vector<Vec> out;
  for (auto& gvec : k.gens) {
    Vec chi(n, 0);
    for (std::size_t i = 1; i < n; ++i) chi[i] = gvec[i - 1];
    out.push_back(std::move(chi));
  }
  return out;
}

// delta(chi)(a, b) = (c(a) + c(b) - c(ab)) / q mod q with c the lift to [0, q).
Cochain2 delta_char(const FiniteGroup& g, const Vec& chi, Residue q) {
  const std::size_t n = g.order();
  Cochain2 out(n * n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) out[a * n + b] = md((chi[a] + chi[b] - chi[g.mul(a, b)]) / q, q);
  return out;
}

std::vector<std::pair<Residue, int>> prime_powers(Residue r) {
  std::vector<std::pair<Residue, int>> out;
  for (Residue p = 2; p * p <= r; ++p)
    if (r % p == 0) {
      int a = 0;
      while (r % p == 0) {
        r /= p;
        ++a;
      }
      out.emplace_back(p, a);
    }
  if (r > 1) out.emplace_back(r, 1);
  return out;
}

Fingerprint reassemble(const std::map<Residue, std::vector<int>>& parts) {
  std::size_t len = 0;
  std::map<Residue, std::vector<int>> sorted;
  for (const auto& [p, e] : parts) {
    auto v = e;
    std::sort(v.begin(), v.end(), std::greater<int>());
    len = std::max(len, v.size());
    sorted[p] = std::move(v);
  }
  std::vector<BigInt> factors;
  for (std::size_t i = 0; i < len; ++i) {
    BigInt d = 1;
    for (const auto& [p, v] : sorted)
      if (i < v.size())
        for (int k = 0; k < v[i]; ++k) d *= static_cast<long>(p);
    factors.push_back(d);
  }
  std::reverse(factors.begin(), factors.end());
  factors.erase(std::remove(factors.begin(), factors.end(), BigInt(1)), factors.end());
  for (std::size_t i = 1; i < factors.size(); ++i)
    if (!mpz_divisible_p(factors[i].get_mpz_t(), factors[i - 1].get_mpz_t()))
      fail(ErrorCode::OracleMismatch, "CRT reassembly broke the divisibility chain");
  Fingerprint fp;
  fp.invariants = std::move(factors);
  return fp;
}

void check_cap(const FiniteGroup& g, std::size_t cap) {
  if (g.order() > cap)
    fail(ErrorCode::OrderCapExceeded, "oracle needs |G| <= " + std::to_string(cap) + ", got " +
                                          std::to_string(g.order()));
}

// Prime powers the computation splits into.
std::vector<Ring> rings_for(const FiniteGroup& g, const Coefficient& coeff) {
  std::vector<Ring> out;
  Residue r = coeff.is_qmodz() ? static_cast<Residue>(g.order()) : coeff.r;
  for (auto [p, a] : prime_powers(r)) out.push_back(ring_of(p, a));
  return out;
}

// Z^2 generators and the span of B^2 (+ delta of characters for Q/Z).
struct PrimeData {
  Module z2;
  Mat boundary;
};

PrimeData prime_data(const LeftParam& lp, const Ring& R, bool qmodz) {
  PrimeData d;
  d.z2 = local_kernel(lp.constraints(R.q), lp.N, R);
  for (Elem x = 1; x < lp.g.order(); ++x) d.boundary.push_back(lp.coboundary_of_point(x, R.q));
  if (qmodz)
    for (const auto& chi : characters(lp.g, R)) d.boundary.push_back(lp.params(delta_char(lp.g, chi, R.q), R.q));
  return d;
}

// Oracle's own families: every subgroup of the kind, then inclusion-maximal.
std::vector<std::vector<Elem>> oracle_family(const FiniteGroup& g, SubgroupKind kind) {
  const std::size_t n = g.order();
  std::set<std::vector<bool>> found;
  auto commuting = [&](const std::vector<Elem>& el) {
    for (Elem a : el)
      for (Elem b : el)
        if (g.mul(a, b) != g.mul(b, a)) return false;
    return true;
  };
  if (kind == SubgroupKind::Cyclic || kind == SubgroupKind::Bicyclic) {
    for (Elem a = 0; a < n; ++a) {
      if (kind == SubgroupKind::Cyclic) {
        found.insert(span_of(g, {a}));
        continue;
      }
      for (Elem b = a; b < n; ++b)
        if (g.mul(a, b) == g.mul(b, a)) found.insert(span_of(g, {a, b}));
    }
  } else {
    std::vector<std::vector<bool>> stack{span_of(g, {})};
    found.insert(stack.back());
    while (!stack.empty()) {
      std::vector<bool> cur = std::move(stack.back());
      stack.pop_back();
      std::vector<Elem> el = members(cur);
      for (Elem x = 1; x < n; ++x) {
        if (cur[x]) continue;
        bool ok = true;
        for (Elem y : el)
          if (g.mul(x, y) != g.mul(y, x)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        std::vector<Elem> gens = el;
        gens.push_back(x);
        std::vector<bool> next = span_of(g, gens);
        if (!commuting(members(next))) fail(ErrorCode::OracleMismatch, "abelian growth produced a non-abelian set");
        if (found.insert(next).second) stack.push_back(std::move(next));
      }
    }
  }
  std::vector<std::vector<bool>> all(found.begin(), found.end());
  std::vector<std::vector<Elem>> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool contained = false;
    for (std::size_t j = 0; j < all.size() && !contained; ++j) {
      if (i == j) continue;
      bool sub = true, proper = false;
      for (std::size_t x = 0; x < n; ++x) {
        if (all[i][x] && !all[j][x]) sub = false;
        if (!all[i][x] && all[j][x]) proper = true;
      }
      contained = sub && proper;
    }
    if (!contained) out.push_back(members(all[i]));
  }
  return out;
}

FiniteGroup induced_group(const FiniteGroup& g, const std::vector<Elem>& el) {
  const std::size_t m = el.size();
  std::map<Elem, Elem> pos;
  for (std::size_t i = 0; i < m; ++i) pos[el[i]] = static_cast<Elem>(i);
  std::vector<std::vector<long long>> t(m, std::vector<long long>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) t[a][b] = pos.at(g.mul(el[a], el[b]));
  return FiniteGroup::from_cayley_table(t);
}

std::vector<int> sha_at_prime(const FiniteGroup& g, const LeftParam& lp, const Ring& R, bool qmodz,
                              const std::vector<std::vector<Elem>>& family) {
  const std::size_t n = g.order();
  PrimeData d = prime_data(lp, R, qmodz);
  Mat U = d.z2.gens;
  for (const auto& el : family) {
    if (U.empty()) break;
    const std::size_t m = el.size();
    if (m == 1) continue;
    FiniteGroup h = induced_group(g, el);  // labels follow el, identity first
    std::vector<Cochain2> tables;
    for (const auto& u : U) tables.push_back(lp.table(u, R.q));
    std::vector<Cochain2> dchis;
    if (qmodz)
      for (const auto& chi : characters(h, R)) dchis.push_back(delta_char(h, chi, R.q));
    const std::size_t L = U.size(), C = m - 1, K = dchis.size();
    const std::size_t cols = L + C + K;
    Mat rows;
    for (Elem a = 1; a < m; ++a)
      for (Elem b = 1; b < m; ++b) {
        Vec r(cols, 0);
        for (std::size_t l = 0; l < L; ++l) r[l] = tables[l][el[a] * n + el[b]];
        auto cb = [&](Elem e, Residue c) {
          if (e != 0) r[L + e - 1] = md(r[L + e - 1] + c, R.q);
        };
        cb(a, -1);
        cb(b, -1);
        cb(h.mul(a, b), 1);
        for (std::size_t k = 0; k < K; ++k) r[L + C + k] = md(-dchis[k][a * m + b], R.q);
        rows.push_back(std::move(r));
      }
    Module ker = local_kernel(rows, cols, R);
    Mat next;
    for (const auto& kv : ker.gens) {
      Vec w(lp.N, 0);
      for (std::size_t l = 0; l < L; ++l)
        if (kv[l])
          for (std::size_t j = 0; j < lp.N; ++j) w[j] = md(w[j] + mm(kv[l], U[l][j], R.q), R.q);
      if (std::any_of(w.begin(), w.end(), [](Residue v) { return v != 0; })) next.push_back(std::move(w));
    }
    U = span_basis(next, lp.N, R);
  }
  return quotient_exponents(U, d.boundary, lp.N, R);
}

}  // namespace

Fingerprint h2_dense(const FiniteGroup& g, const Coefficient& coeff, std::size_t cap) {
  check_cap(g, cap);
  std::map<Residue, std::vector<int>> parts;
  if (g.order() == 1) return {};
  LeftParam lp(g);
  for (const Ring& R : rings_for(g, coeff)) {
    PrimeData d = prime_data(lp, R, coeff.is_qmodz());
    parts[R.p] = quotient_exponents(d.z2.gens, d.boundary, lp.N, R);
  }
  return reassemble(parts);
}

Fingerprint h2_dense(const FiniteGroup& g, Residue r, std::size_t cap) {
  return h2_dense(g, Coefficient::zmod(r), cap);
}

Fingerprint sha2_dense(const FiniteGroup& g, const Coefficient& coeff, SubgroupKind kind,
                       std::size_t cap) {
  check_cap(g, cap);
  if (g.order() == 1) return {};
  LeftParam lp(g);
  auto family = oracle_family(g, kind);
  std::map<Residue, std::vector<int>> parts;
  for (const Ring& R : rings_for(g, coeff))
    parts[R.p] = sha_at_prime(g, lp, R, coeff.is_qmodz(), family);
  return reassemble(parts);
}

Fingerprint h1_dense(const FiniteGroup& g, Residue r) {
  std::map<Residue, std::vector<int>> parts;
  for (auto [p, a] : prime_powers(r)) {
    Ring R = ring_of(p, a);
    std::vector<int> exps;
    const std::size_t n = g.order();
    if (n > 1) {
      Mat rows;
      for (Elem x = 1; x < n; ++x)
        for (Elem y = 1; y < n; ++y) {
          Vec row(n - 1, 0);
          auto add = [&](Elem e, Residue c) {
            if (e != 0) row[e - 1] = md(row[e - 1] + c, R.q);
          };
          add(x, 1);
          add(y, 1);
          add(g.mul(x, y), -1);
          rows.push_back(std::move(row));
        }
      exps = local_kernel(rows, n - 1, R).exps;
    }
    parts[p] = exps;
  }
  return reassemble(parts);
}

OracleReport certify(const FiniteGroup& g, const H2Result& result, std::size_t cap) {
  OracleReport rep;
  rep.target = "H2(" + (g.name().empty() ? std::string("G") : g.name()) + ", " +
               result.coeff.to_string() + ")";
  rep.main = result.group.fingerprint();
  const std::size_t n = g.order();
  const Residue m = result.modulus;

  Check cocycle{"cocycle identity", true, ""};
  for (std::size_t j = 0; j < result.reps.size() && cocycle.passed; ++j) {
    const Cochain2& c = result.reps[j];
    auto at = [&](Elem a, Elem b) { return c[a * n + b]; };
    for (Elem a = 0; a < n && cocycle.passed; ++a)
      if (md(at(a, 0), m) || md(at(0, a), m)) {
        cocycle.passed = false;
        cocycle.detail = "rep " + std::to_string(j) + " not normalized at " + std::to_string(a);
      }
    for (Elem a = 0; a < n && cocycle.passed; ++a)
      for (Elem b = 0; b < n && cocycle.passed; ++b)
        for (Elem k = 0; k < n; ++k) {
          Residue v = at(b, k) - at(g.mul(a, b), k) + at(a, g.mul(b, k)) - at(a, b);
          if (md(v, m) != 0) {
            std::ostringstream os;
            os << "rep " << j << " fails at (" << a << "," << b << "," << k << ")";
            cocycle.passed = false;
            cocycle.detail = os.str();
            break;
          }
        }
  }
  rep.checks.push_back(cocycle);

  if (n > cap) {
    rep.checks.push_back({"oracle order", true, "skipped: |G| above oracle cap"});
    rep.oracle = rep.main;
    rep.match = cocycle.passed;
    if (!cocycle.passed) rep.witness = cocycle.detail;
    return rep;
  }

  // The oracle's own group, at the main result's modulus.
  rep.oracle = h2_dense(g, result.coeff.is_qmodz() ? Coefficient::qmodz() : Coefficient::zmod(m), cap);

  Check orders{"representative orders", true, ""};
  Check generation{"representatives generate", true, ""};
  if (n > 1 && cocycle.passed) {
    LeftParam lp(g);
    for (auto [p, a] : prime_powers(m)) {
      Ring R = ring_of(p, a);
      PrimeData d = prime_data(lp, R, result.coeff.is_qmodz());
      const int base = span_log(d.boundary, lp.N, R);
      Mat reps;
      int claimed = 0;
      for (std::size_t j = 0; j < result.reps.size(); ++j) {
        Vec x = lp.params(result.reps[j], R.q);
        BigInt dj = result.group.invariant_factors()[j];
        int e = 0;
        while (mpz_divisible_ui_p(dj.get_mpz_t(), static_cast<unsigned long>(p))) {
          dj /= static_cast<long>(p);
          ++e;
        }
        claimed += e;
        Vec scaled(lp.N);
        const Residue pe = ipow(p, e) % R.q;
        for (std::size_t k = 0; k < lp.N; ++k) scaled[k] = mm(x[k], pe, R.q);
        Mat with = d.boundary;
        with.push_back(scaled);
        if (span_log(with, lp.N, R) != base && orders.passed) {
          orders.passed = false;
          orders.detail = "rep " + std::to_string(j) + " times " + std::to_string(ipow(p, e)) +
                          " is not a coboundary";
        }
        reps.push_back(std::move(x));
      }
      Mat all = d.boundary;
      all.insert(all.end(), reps.begin(), reps.end());
      const int got = span_log(all, lp.N, R) - base;
      int oracle_total = 0;
      for (int e : d.z2.exps) oracle_total += e;
      oracle_total -= base;
      if ((got != claimed || got != oracle_total) && generation.passed) {
        generation.passed = false;
        generation.detail = "p=" + std::to_string(p) + ": span p^" + std::to_string(got) +
                            ", claimed p^" + std::to_string(claimed) + ", oracle p^" +
                            std::to_string(oracle_total);
      }
    }
  }
  rep.checks.push_back(orders);
  rep.checks.push_back(generation);

  if (n <= 8 && m <= 4 && n > 1) {
    // |Z^2| / |B^2| straight from the normalized cochain complex.
    Check counting{"|Z2|/|B2| counting", true, ""};
    const std::size_t N = (n - 1) * (n - 1);
    auto ix = [&](Elem a, Elem b) { return (a - 1) * (n - 1) + (b - 1); };
    BigInt total_order = 1;
    for (auto [p, a] : prime_powers(m)) {
      Ring R = ring_of(p, a);
      Mat d2;
      for (Elem x = 1; x < n; ++x)
        for (Elem y = 1; y < n; ++y)
          for (Elem z = 1; z < n; ++z) {
            Vec r(N, 0);
            auto add = [&](Elem u, Elem v, Residue c) {
              if (u != 0 && v != 0) r[ix(u, v)] = md(r[ix(u, v)] + c, R.q);
            };
            add(y, z, 1);
            add(g.mul(x, y), z, -1);
            add(x, g.mul(y, z), 1);
            add(x, y, -1);
            d2.push_back(std::move(r));
          }
      Module z2 = local_kernel(d2, N, R);
      int zlog = 0;
      for (int e : z2.exps) zlog += e;
      Mat b2;
      for (Elem x = 1; x < n; ++x) {
        Vec r(N, 0);
        for (Elem u = 1; u < n; ++u)
          for (Elem v = 1; v < n; ++v) r[ix(u, v)] = md((u == x) + (v == x) - (g.mul(u, v) == x), R.q);
        b2.push_back(std::move(r));
      }
      if (result.coeff.is_qmodz())
        for (const auto& chi : characters(g, R)) {
          Cochain2 dc = delta_char(g, chi, R.q);
          Vec r(N, 0);
          for (Elem u = 1; u < n; ++u)
            for (Elem v = 1; v < n; ++v) r[ix(u, v)] = dc[u * n + v];
          b2.push_back(std::move(r));
        }
      const int blog = span_log(b2, N, R);
      for (int k = 0; k < zlog - blog; ++k) total_order *= static_cast<long>(p);
    }
    auto claimed = rep.main.order();
    if (!claimed || *claimed != total_order) {
      counting.passed = false;
      counting.detail = "counted order " + total_order.get_str();
    }
    rep.checks.push_back(counting);
  }

  rep.match = rep.main == rep.oracle;
  if (!rep.match)
    rep.witness = "invariant factors " + rep.main.to_string() + " vs oracle " + rep.oracle.to_string();
  for (const auto& c : rep.checks)
    if (!c.passed) {
      if (rep.match) rep.witness = c.name + ": " + c.detail;
      rep.match = false;
    }
  return rep;
}

OracleReport compare_h2(const FiniteGroup& g, const Coefficient& coeff, const Limits& limits) {
  H2Result main = h2(g, coeff, limits);
  OracleReport rep = certify(g, main, limits.oracle_cap);
  // certify works at the main path's (capped) modulus; compare against the raw one too.
  Fingerprint raw = h2_dense(g, coeff, limits.oracle_cap);
  if (!(raw == rep.main) && rep.match) {
    rep.match = false;
    rep.witness = "raw-modulus oracle gives " + raw.to_string();
  }
  rep.oracle = raw;
  return rep;
}

}  // namespace brauer::oracle
