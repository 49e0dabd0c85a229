#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "brauer/error.hpp"
#include "brauer/group.hpp"

namespace brauer {

const char* kind_name(SubgroupKind kind) {
  switch (kind) {
    case SubgroupKind::Cyclic: return "cyclic";
    case SubgroupKind::Bicyclic: return "bicyclic";
    case SubgroupKind::Abelian: return "abelian";
    case SubgroupKind::General: return "general";
  }
  return "general";
}

SubgroupKind parse_kind(const std::string& text) {
  if (text == "cyclic" || text == "cyc") return SubgroupKind::Cyclic;
  if (text == "bicyclic" || text == "bicyc") return SubgroupKind::Bicyclic;
  if (text == "abelian" || text == "ab") return SubgroupKind::Abelian;
  fail(ErrorCode::InvalidInput, "unknown subgroup kind '" + text + "'");
}

bool SubgroupSet::contains(Elem e) const {
  return std::binary_search(elements.begin(), elements.end(), e);
}

ElementSet closure(const FiniteGroup& g, std::span<const Elem> gens) {
  ElementSet seen(g.order());
  std::vector<Elem> queue{0};
  seen.insert(0);
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Elem s : gens) {
      Elem x = g.mul(queue[i], s);
      if (!seen.contains(x)) {
        seen.insert(x);
        queue.push_back(x);
      }
    }
  return seen;
}

SubgroupSet generated_subgroup(const FiniteGroup& g, std::span<const Elem> gens,
                               SubgroupKind kind) {
  SubgroupSet s;
  s.elements = closure(g, gens).elements();
  s.kind = kind;
  s.generators.assign(gens.begin(), gens.end());
  return s;
}

bool is_subgroup(const FiniteGroup& g, std::span<const Elem> elements) {
  ElementSet set(g.order());
  for (Elem e : elements) {
    if (e >= g.order()) return false;
    set.insert(e);
  }
  if (!set.contains(0)) return false;
  for (Elem a : elements) {
    if (!set.contains(g.inv(a))) return false;
    for (Elem b : elements)
      if (!set.contains(g.mul(a, b))) return false;
  }
  return true;
}

bool is_abelian_set(const FiniteGroup& g, std::span<const Elem> elements) {
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j)
      if (!g.commute(elements[i], elements[j])) return false;
  return true;
}

std::vector<Elem> conjugate_elements(const FiniteGroup& g, std::span<const Elem> elements, Elem x) {
  std::vector<Elem> out;
  out.reserve(elements.size());
  for (Elem e : elements) out.push_back(g.conj(x, e));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> small_generating_set(const FiniteGroup& g) {
  std::vector<Elem> gens;
  ElementSet current = closure(g, gens);
  while (current.size() < g.order()) {
    Elem best = 0;
    unsigned best_order = 0;
    for (Elem x = 1; x < g.order(); ++x)
      if (!current.contains(x) && g.element_order(x) > best_order) {
        best = x;
        best_order = g.element_order(x);
      }
    gens.push_back(best);
    current = closure(g, gens);
  }
  return gens;
}

SubgroupSet centralizer(const FiniteGroup& g, std::span<const Elem> s) {
  SubgroupSet out;
  out.kind = SubgroupKind::General;
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem y : s)
      if (!g.commute(x, y)) {
        ok = false;
        break;
      }
    if (ok) out.elements.push_back(x);
  }
  return out;
}

SubgroupSet center(const FiniteGroup& g) {
  std::vector<Elem> all(g.order());
  for (Elem x = 0; x < g.order(); ++x) all[x] = x;
  SubgroupSet z = centralizer(g, all);
  z.kind = SubgroupKind::Abelian;
  return z;
}

SubgroupSet commutator_subgroup(const FiniteGroup& g) {
  ElementSet comms(g.order());
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      comms.insert(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
  std::vector<Elem> gens = comms.elements();
  SubgroupSet s;
  s.elements = closure(g, gens).elements();
  s.kind = SubgroupKind::General;
  return s;
}

namespace {

std::string describe(const std::vector<Elem>& elements) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < elements.size(); ++i) os << (i ? "," : "") << elements[i];
  os << "}";
  return os.str();
}

struct Candidate {
  ElementSet set;
  std::vector<Elem> generators;
};

// Smallest conjugate (as a sorted element list) and the conjugating element.
std::pair<std::vector<Elem>, Elem> min_conjugate(const FiniteGroup& g, const std::vector<Elem>& el) {
  std::vector<Elem> best = el;
  Elem by = 0;
  for (Elem x = 1; x < g.order(); ++x) {
    std::vector<Elem> c = conjugate_elements(g, el, x);
    if (c < best) {
      best = std::move(c);
      by = x;
    }
  }
  return {best, by};
}

std::vector<Candidate> cyclic_candidates(const FiniteGroup& g) {
  std::map<ElementSet, std::vector<Elem>> found;
  for (Elem x = 0; x < g.order(); ++x) {
    std::vector<Elem> gen{x};
    ElementSet s = closure(g, gen);
    found.emplace(std::move(s), x == 0 ? std::vector<Elem>{} : gen);
  }
  std::vector<Candidate> out;
  for (auto& [s, gens] : found) out.push_back({s, gens});
  return out;
}

std::vector<Candidate> bicyclic_candidates(const FiniteGroup& g) {
  std::map<ElementSet, std::vector<Elem>> found;
  for (auto& c : cyclic_candidates(g)) found.emplace(c.set, c.generators);
  std::vector<ElementSet> cyc(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    std::vector<Elem> gen{x};
    cyc[x] = closure(g, gen);
  }
  for (Elem a = 1; a < g.order(); ++a)
    for (Elem b = a + 1; b < g.order(); ++b) {
      if (!g.commute(a, b) || cyc[a].contains(b) || cyc[b].contains(a)) continue;
      std::vector<Elem> gens{a, b};
      ElementSet s = closure(g, gens);
      found.emplace(std::move(s), gens);
    }
  std::vector<Candidate> out;
  for (auto& [s, gens] : found) out.push_back({s, gens});
  return out;
}

// Maximal abelian subgroups: all contain Z(G), so grow from the centre by
// adjoining centralizing elements; a node A is maximal iff C_G(A) = A.
std::vector<Candidate> maximal_abelian_candidates(const FiniteGroup& g) {
  SubgroupSet z = center(g);
  std::vector<Elem> zgens = small_generating_set(subgroup_group(g, z).group);
  {
    EmbeddedGroup ez = subgroup_group(g, z);
    for (auto& e : zgens) e = ez.embedding[e];
  }
  ElementSet start(g.order());
  for (Elem e : z.elements) start.insert(e);

  std::set<ElementSet> seen{start};
  std::deque<Candidate> queue{{start, zgens}};
  std::vector<Candidate> maximal;
  while (!queue.empty()) {
    Candidate a = std::move(queue.front());
    queue.pop_front();
    std::vector<Elem> el = a.set.elements();
    SubgroupSet c = centralizer(g, el);
    bool extended = false;
    for (Elem x : c.elements) {
      if (a.set.contains(x)) continue;
      extended = true;
      std::vector<Elem> gens = a.generators;
      gens.push_back(x);
      ElementSet b = closure(g, gens);
      if (seen.insert(b).second) queue.push_back({std::move(b), std::move(gens)});
    }
    if (!extended) maximal.push_back(std::move(a));
  }
  std::sort(maximal.begin(), maximal.end(),
            [](const Candidate& x, const Candidate& y) { return x.set < y.set; });
  return maximal;
}

}  // namespace

SubgroupFamily maximal_subgroup_family(const FiniteGroup& g, SubgroupKind kind,
                                       const Limits& limits) {
  if (g.order() > limits.enumeration_cap)
    fail(ErrorCode::OrderCapExceeded, "subgroup enumeration needs |G| <= " +
                                          std::to_string(limits.enumeration_cap) + ", got " +
                                          std::to_string(g.order()));
  if (kind == SubgroupKind::General)
    fail(ErrorCode::InvalidInput, "subgroup family kind must be cyclic, bicyclic or abelian");

  SubgroupFamily fam;
  fam.kind = kind;
  std::vector<Candidate> cands;
  if (g.is_abelian() && kind == SubgroupKind::Abelian) {
    // G itself is the unique maximal abelian subgroup.
    std::vector<Elem> all(g.order());
    for (Elem x = 0; x < g.order(); ++x) all[x] = x;
    ElementSet s(g.order());
    for (Elem x : all) s.insert(x);
    std::vector<Elem> gens = small_generating_set(g);
    cands.push_back({s, gens});
  } else if (kind == SubgroupKind::Cyclic) {
    cands = cyclic_candidates(g);
  } else if (kind == SubgroupKind::Bicyclic) {
    cands = bicyclic_candidates(g);
  } else {
    cands = maximal_abelian_candidates(g);
  }

  // Inclusion-maximal members.
  std::vector<Candidate> maximal;
  std::vector<std::size_t> sizes;
  for (const auto& c : cands) sizes.push_back(c.set.size());
  for (std::size_t i = 0; i < cands.size(); ++i) {
    std::size_t container = cands.size();
    for (std::size_t j = 0; j < cands.size() && container == cands.size(); ++j)
      if (j != i && sizes[j] > sizes[i] && cands[i].set.subset_of(cands[j].set)) container = j;
    if (container == cands.size()) {
      maximal.push_back(cands[i]);
    } else {
      fam.reduction_log.push_back("dropped " + describe(cands[i].set.elements()) +
                                  ": contained in " + describe(cands[container].set.elements()));
    }
  }

  // Conjugacy representatives: keep the smallest conjugate of each class.
  std::map<std::vector<Elem>, SubgroupSet> reps;
  for (const auto& c : maximal) {
    std::vector<Elem> el = c.set.elements();
    auto [rep, by] = min_conjugate(g, el);
    if (rep != el)
      fam.reduction_log.push_back("dropped " + describe(el) + ": conjugate to " + describe(rep));
    if (rep == el || !reps.count(rep)) {
      SubgroupSet s;
      s.elements = rep;
      s.kind = kind;
      for (Elem x : c.generators) s.generators.push_back(g.conj(by, x));
      reps[rep] = std::move(s);
    }
  }
  for (auto& [el, s] : reps) fam.members.push_back(std::move(s));
  std::stable_sort(fam.members.begin(), fam.members.end(),
                   [](const SubgroupSet& a, const SubgroupSet& b) {
                     if (a.order() != b.order()) return a.order() > b.order();
                     return a.elements < b.elements;
                   });
  return fam;
}

Abelianization abelianization(const FiniteGroup& g) {
  SubgroupSet d = commutator_subgroup(g);
  const std::size_t n = g.order();
  std::vector<std::size_t> coset(n, n);
  std::vector<Elem> rep;
  for (Elem x = 0; x < n; ++x) {
    if (coset[x] != n) continue;
    const std::size_t id = rep.size();
    rep.push_back(x);
    for (Elem y : d.elements) coset[g.mul(x, y)] = id;
  }
  const std::size_t m = rep.size();
  auto qmul = [&](std::size_t a, std::size_t b) { return coset[g.mul(rep[a], rep[b])]; };

  Abelianization out;
  // span: quotient element -> coordinates on the generators chosen so far
  std::map<std::size_t, std::vector<long long>> span{{0, {}}};
  std::vector<std::vector<long long>> relations;
  std::vector<long long> orders;
  while (span.size() < m) {
    // largest-order coset outside the span
    std::size_t best = 0;
    long long best_order = 0;
    for (std::size_t q = 1; q < m; ++q) {
      if (span.count(q)) continue;
      long long k = 1;
      for (std::size_t x = q; x != 0; x = qmul(x, q)) ++k;
      if (k - 1 > best_order) {
        best_order = k - 1;
        best = q;
      }
    }
    const std::size_t idx = orders.size();
    // smallest k with best^k in the span
    long long k = 1;
    std::size_t power = best;
    while (!span.count(power)) {
      power = qmul(power, best);
      ++k;
    }
    std::vector<long long> rel = span.at(power);
    for (auto& v : rel) v = -v;
    rel.push_back(k);
    relations.push_back(std::move(rel));
    orders.push_back(k);
    out.lifts.push_back(rep[best]);

    std::map<std::size_t, std::vector<long long>> next;
    for (auto& [q, c] : span) {
      std::size_t x = q;
      for (long long t = 0; t < k; ++t) {
        std::vector<long long> cc = c;
        cc.resize(idx + 1, 0);
        cc[idx] = t;
        next.emplace(x, std::move(cc));
        x = qmul(x, best);
      }
    }
    span = std::move(next);
  }
  const std::size_t t = orders.size();
  IntMatrix rel(0, t);
  for (auto& r : relations) {
    r.resize(t, 0);
    IntVector row(t);
    for (std::size_t j = 0; j < t; ++j) row[j] = static_cast<long>(r[j]);
    rel.append_row(row);
  }
  out.group = AbelianGroup(t, std::move(rel));
  out.projection.resize(n);
  for (Elem x = 0; x < n; ++x) {
    auto c = span.at(coset[x]);
    c.resize(t, 0);
    IntVector v(t);
    for (std::size_t j = 0; j < t; ++j) v[j] = static_cast<long>(c[j]);
    out.projection[x] = std::move(v);
  }
  return out;
}

SylowResult sylow_subgroup(const FiniteGroup& g, unsigned p) {
  std::size_t target = 1;
  for (std::size_t n = g.order(); n % p == 0; n /= p) target *= p;
  std::vector<Elem> gens;
  ElementSet cur = closure(g, gens);
  auto is_p_power = [p](std::size_t k) {
    while (k % p == 0) k /= p;
    return k == 1;
  };
  while (cur.size() < target) {
    bool grown = false;
    for (Elem x = 1; x < g.order() && !grown; ++x) {
      if (cur.contains(x) || !is_p_power(g.element_order(x))) continue;
      std::vector<Elem> trial = gens;
      trial.push_back(x);
      ElementSet s = closure(g, trial);
      if (is_p_power(s.size())) {
        gens = std::move(trial);
        cur = std::move(s);
        grown = true;
      }
    }
    if (!grown) fail(ErrorCode::TheoremViolation, "Sylow growth stalled");
  }
  SylowResult r;
  r.subgroup.elements = cur.elements();
  r.subgroup.generators = gens;
  r.abelian = is_abelian_set(g, r.subgroup.elements);
  r.subgroup.kind = r.abelian ? SubgroupKind::Abelian : SubgroupKind::General;
  return r;
}

EmbeddedGroup subgroup_group(const FiniteGroup& g, const SubgroupSet& h) {
  const std::size_t m = h.elements.size();
  if (m == 0 || h.elements[0] != 0)
    fail(ErrorCode::InvalidInput, "subgroup element list must start with the identity");
  std::vector<Elem> index(g.order(), static_cast<Elem>(m));
  for (std::size_t i = 0; i < m; ++i) index[h.elements[i]] = static_cast<Elem>(i);
  std::vector<Elem> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Elem c = index[g.mul(h.elements[a], h.elements[b])];
      if (c == m) fail(ErrorCode::InvalidInput, "element list is not closed under products");
      table[a * m + b] = c;
    }
  return {FiniteGroup::from_trusted_table(m, std::move(table)), h.elements};
}

}  // namespace brauer
