#include "brauer/cohomology.hpp"

#include <algorithm>
#include <numeric>

#include "brauer/error.hpp"
#include "brauer/parallel.hpp"

namespace brauer {

Coefficient Coefficient::zmod(Residue r) {
  if (r < 1) fail(ErrorCode::InvalidInput, "coefficient modulus must be positive");
  Coefficient c;
  c.kind = Kind::Zmod;
  c.r = r;
  return c;
}

std::string Coefficient::to_string() const {
  return is_qmodz() ? std::string("Q/Z") : "Z/" + std::to_string(r);
}

Coefficient parse_coefficient(const std::string& text) {
  if (text == "q" || text == "Q" || text == "qmodz" || text == "Q/Z") return Coefficient::qmodz();
  std::string digits = text;
  if (digits.rfind("Z/", 0) == 0 || digits.rfind("z/", 0) == 0) digits = digits.substr(2);
  if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit) && digits.size() < 18)
    return Coefficient::zmod(std::stoll(digits));
  fail(ErrorCode::InvalidInput, "unknown coefficient '" + text + "' (expected q or a positive integer)");
}

Residue effective_modulus(Residue r, std::size_t group_order) {
  Residue out = 1;
  Residue n = static_cast<Residue>(group_order);
  for (unsigned p : prime_factors(static_cast<std::uint64_t>(group_order))) {
    Residue pr = 1, pn = 1;
    while (r % (pr * p) == 0) pr *= p;
    while (n % (pn * p) == 0) pn *= p;
    out *= std::min(pr, pn);
  }
  return out;
}

Residue sha_modulus(const Coefficient& coeff, std::size_t group_order) {
  if (coeff.is_qmodz()) return static_cast<Residue>(group_order);
  return effective_modulus(coeff.r, group_order);
}

// ---------------------------------------------------------------------------
// Cochains

std::optional<Triple> cocycle_violation(const FiniteGroup& g, const Cochain2& c, Residue m) {
  const std::size_t n = g.order();
  if (c.size() != n * n) return Triple{0, 0, 0};
  auto at = [&](Elem a, Elem b) { return c[static_cast<std::size_t>(a) * n + b]; };
  for (Elem a = 0; a < n; ++a)
    if (mod_reduce(at(0, a), m) != 0 || mod_reduce(at(a, 0), m) != 0) return Triple{a, 0, 0};
  for (Elem a = 1; a < n; ++a)
    for (Elem b = 1; b < n; ++b) {
      const Elem ab = g.mul(a, b);
      const Residue cab = at(a, b);
      for (Elem k = 1; k < n; ++k) {
        Residue v = at(b, k) - at(ab, k) + at(a, g.mul(b, k)) - cab;
        if (mod_reduce(v, m) != 0) return Triple{a, b, k};
      }
    }
  return std::nullopt;
}

Cochain2 coboundary(const FiniteGroup& g, const Cochain1& c, Residue m) {
  const std::size_t n = g.order();
  Cochain2 out(n * n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) out[a * n + b] = mod_reduce(c[a] + c[b] - c[g.mul(a, b)], m);
  return out;
}

Cochain2 delta_character(const FiniteGroup& g, const Cochain1& chi, Residue n) {
  const std::size_t order = g.order();
  if (chi.size() != order) fail(ErrorCode::InvalidInput, "character has wrong length");
  Cochain1 c(order);
  for (std::size_t x = 0; x < order; ++x) c[x] = mod_reduce(chi[x], n);
  for (Elem a = 0; a < order; ++a)
    for (Elem b = 0; b < order; ++b)
      if (mod_reduce(c[a] + c[b] - c[g.mul(a, b)], n) != 0)
        fail(ErrorCode::NotAHomomorphism, "chi(" + std::to_string(a) + "*" + std::to_string(b) +
                                              ") != chi(" + std::to_string(a) + ")+chi(" +
                                              std::to_string(b) + ")");
  Cochain2 out(order * order, 0);
  for (Elem a = 0; a < order; ++a)
    for (Elem b = 0; b < order; ++b)
      out[a * order + b] = mod_reduce((c[a] + c[b] - c[g.mul(a, b)]) / n, n);
  return out;
}

Cochain2 restrict_cochain(const FiniteGroup& g, const EmbeddedGroup& h, const Cochain2& c) {
  const std::size_t n = g.order();
  const std::size_t m = h.group.order();
  Cochain2 out(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) out[a * m + b] = c[h.embedding[a] * n + h.embedding[b]];
  return out;
}

// ---------------------------------------------------------------------------
// H^1

namespace {

struct CharacterBasis {
  std::vector<Elem> elements;   // preimages of normal generators of G^ab
  std::vector<BigInt> orders;   // invariant factors d_k
  std::vector<std::vector<Residue>> coords;  // element -> coordinate k mod d_k
};

CharacterBasis character_basis(const FiniteGroup& g) {
  Abelianization ab = abelianization(g);
  CharacterBasis b;
  b.orders = ab.group.invariant_factors();
  const std::size_t k = b.orders.size();
  for (std::size_t j = 0; j < k; ++j) {
    IntVector v = ab.group.normal_generator(j);
    Elem y = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      long long e = v[i].get_si();
      y = g.mul(y, g.pow(ab.lifts[i], e));
    }
    b.elements.push_back(y);
  }
  b.coords.resize(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    IntVector c = ab.group.normal_coords(ab.projection[x]);
    b.coords[x].resize(k);
    for (std::size_t j = 0; j < k; ++j) b.coords[x][j] = c[j].get_si();
  }
  return b;
}

}  // namespace

H1Result h1(const FiniteGroup& g, const Coefficient& coeff, std::optional<Residue> modulus) {
  H1Result out;
  out.coeff = coeff;
  out.modulus = modulus ? *modulus
                        : (coeff.is_qmodz() ? static_cast<Residue>(g.order()) : coeff.r);
  const Residue m = out.modulus;
  CharacterBasis cb = character_basis(g);
  auto basis = std::make_shared<H1Result::Basis>();
  std::vector<BigInt> orders;
  for (std::size_t k = 0; k < cb.orders.size(); ++k) {
    const Residue d = cb.orders[k].get_si();
    const Residue gk = std::gcd(d, m);
    if (coeff.is_qmodz() && gk != d)
      fail(ErrorCode::CoefficientMismatch, "Q/Z modulus must be a multiple of the group order");
    if (gk == 1) continue;
    const Residue scale = m / gk;
    Cochain1 chi(g.order());
    for (Elem x = 0; x < g.order(); ++x) chi[x] = mod_reduce(scale * cb.coords[x][k], m);
    out.characters.push_back(std::move(chi));
    basis->elements.push_back(cb.elements[k]);
    basis->scale.push_back(scale);
    orders.push_back(gk);
  }
  out.group = AbelianGroup::from_orders(orders);
  out.basis = std::move(basis);
  return out;
}

IntVector H1Result::class_of(const Cochain1& chi) const {
  IntVector out;
  for (std::size_t k = 0; k < basis->elements.size(); ++k) {
    Residue v = mod_reduce(chi[basis->elements[k]], modulus);
    if (v % basis->scale[k] != 0)
      fail(ErrorCode::NotAHomomorphism, "value on a basis element has the wrong order");
    out.push_back(static_cast<long>(v / basis->scale[k]));
  }
  return out;
}

// ---------------------------------------------------------------------------
// H^2 via a spanning-tree parametrization of normalized 2-cocycles.
//
// With S a generating set and a breadth-first tree in the right Cayley graph,
// a normalized cocycle f is determined by the values f(g, s), g != 1, s in S:
// the cocycle identity at (g, h, s) gives f(g, hs) = f(g, h) + f(gh, s) - f(h, s),
// which defines f(g, x) along tree edges. The same relation on every
// non-tree edge is the full set of linear constraints.

class H2Context {
 public:
  H2Context(const FiniteGroup& g, Residue m);

  std::size_t param_index(Elem g, std::size_t s) const { return (g - 1) * gens.size() + s; }
  std::vector<Residue> params_of(const Cochain2& c) const;
  Cochain2 cocycle_from_params(const std::vector<Residue>& x) const;
  std::vector<Residue> z2_coords(const Cochain2& c) const { return z2.coords(params_of(c)); }

  FiniteGroup group;
  Residue modulus;
  std::vector<Elem> gens;
  std::vector<Elem> bfs;            // non-identity elements in tree order
  std::vector<Elem> parent;
  std::vector<std::size_t> label;   // x = parent[x] * gens[label[x]]
  std::size_t nparams = 0;
  ModularKernel z2;
  AbelianGroup presentation;        // H^2 on the generators of z2
};

H2Context::H2Context(const FiniteGroup& g, Residue m)
    : group(g), modulus(m), gens(small_generating_set(g)),
      nparams((g.order() - 1) * gens.size()), z2(nparams, m) {
  const std::size_t n = g.order();
  parent.assign(n, 0);
  label.assign(n, 0);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  std::vector<Elem> queue{0};
  // Non-tree edges (h, s): constraint sources.
  std::vector<std::pair<Elem, std::size_t>> loose;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Elem h = queue[i];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const Elem x = g.mul(h, gens[s]);
      if (!seen[x]) {
        seen[x] = true;
        parent[x] = h;
        label[x] = s;
        queue.push_back(x);
        bfs.push_back(x);
      } else {
        loose.emplace_back(h, s);
      }
    }
  }

  // For fixed g, sym[x] is f(g, x) as a linear form in the parameters.
  const std::size_t N = nparams;
  std::vector<std::vector<Residue>> sym(n, std::vector<Residue>(N, 0));
  auto add_param = [&](std::vector<Residue>& v, Elem a, std::size_t s, Residue sign) {
    if (a == 0) return;
    std::size_t idx = param_index(a, s);
    v[idx] = mod_reduce(v[idx] + sign, m);
  };
  for (Elem a = 1; a < n; ++a) {
    for (auto& v : sym) std::fill(v.begin(), v.end(), 0);
    for (Elem x : bfs) {
      const Elem h = parent[x];
      const std::size_t s = label[x];
      sym[x] = sym[h];
      add_param(sym[x], g.mul(a, h), s, 1);
      add_param(sym[x], h, s, -1);
    }
    for (auto [h, s] : loose) {
      const Elem x = g.mul(h, gens[s]);
      std::vector<Residue> row(N);
      for (std::size_t j = 0; j < N; ++j) row[j] = mod_reduce(sym[x][j] - sym[h][j], m);
      add_param(row, g.mul(a, h), s, -1);
      add_param(row, h, s, 1);
      if (std::any_of(row.begin(), row.end(), [](Residue v) { return v != 0; }))
        z2.add_row(std::move(row));
    }
  }
  z2.finalize();
}

std::vector<Residue> H2Context::params_of(const Cochain2& c) const {
  const std::size_t n = group.order();
  if (c.size() != n * n) fail(ErrorCode::InvalidInput, "cochain has wrong size");
  std::vector<Residue> x(nparams);
  for (Elem a = 1; a < n; ++a)
    for (std::size_t s = 0; s < gens.size(); ++s)
      x[param_index(a, s)] = mod_reduce(c[a * n + gens[s]], modulus);
  return x;
}

Cochain2 H2Context::cocycle_from_params(const std::vector<Residue>& x) const {
  const std::size_t n = group.order();
  const Residue m = modulus;
  Cochain2 f(n * n, 0);
  auto p = [&](Elem a, std::size_t s) -> Residue { return a == 0 ? 0 : x[param_index(a, s)]; };
  for (Elem a = 1; a < n; ++a)
    for (Elem y : bfs) {
      const Elem h = parent[y];
      const std::size_t s = label[y];
      f[a * n + y] = mod_reduce(f[a * n + h] + p(group.mul(a, h), s) - p(h, s), m);
    }
  return f;
}

namespace {

std::vector<Residue> scaled_sum(const ModularKernel& z2, const IntVector& coeffs, Residue m) {
  std::vector<Residue> x(z2.ncols(), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    BigInt ci = coeffs[i] % BigInt(static_cast<long>(m));
    const Residue c = mod_reduce(ci.get_si(), m);
    if (c == 0) continue;
    const auto& gen = z2.generator(i);
    for (std::size_t j = 0; j < x.size(); ++j)
      if (gen[j]) x[j] = static_cast<Residue>((x[j] + static_cast<__int128>(c) * gen[j]) % m);
  }
  return x;
}

IntVector to_int_vector(const std::vector<Residue>& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<long>(v[i]);
  return out;
}

}  // namespace

H2Result h2(const FiniteGroup& g, const Coefficient& coeff, const Limits& limits,
            std::optional<Residue> modulus) {
  if (g.order() > limits.cohomology_cap)
    fail(ErrorCode::OrderCapExceeded, "cohomology needs |G| <= " +
                                          std::to_string(limits.cohomology_cap) + ", got " +
                                          std::to_string(g.order()));
  const std::size_t n = g.order();
  Residue m;
  if (modulus)
    m = *modulus;
  else
    m = coeff.is_qmodz() ? static_cast<Residue>(n) : effective_modulus(coeff.r, n);
  if (coeff.is_qmodz() && m % static_cast<Residue>(n) != 0)
    fail(ErrorCode::CoefficientMismatch, "Q/Z modulus must be a multiple of the group order");

  H2Result out;
  out.coeff = coeff;
  out.modulus = m;
  auto ctx = std::make_shared<H2Context>(g, m);
  const ModularKernel& z2 = ctx->z2;
  const std::size_t t = z2.ngens();

  IntMatrix rel(0, t);
  for (std::size_t i = 0; i < t; ++i) {
    IntVector row(t, BigInt(0));
    row[i] = static_cast<long>(z2.orders()[i]);
    rel.append_row(row);
  }
  if (t > 0) {
    for (Elem x = 1; x < n; ++x) {
      Cochain1 e(n, 0);
      e[x] = 1;
      rel.append_row(to_int_vector(ctx->z2_coords(coboundary(g, e, m))));
    }
  }
  if (coeff.is_qmodz() && t > 0) {
    H1Result chars = h1(g, coeff, m);
    IntMatrix images(0, t);
    for (const auto& chi : chars.characters)
      images.append_row(to_int_vector(ctx->z2_coords(delta_character(g, chi, m))));
    AbelianGroup with_coboundaries(t, rel);
    AbelianGroup free_chars(images.rows(), IntMatrix(0, images.rows()));
    out.qmodz_divisor = hom_image(AbelianHom(free_chars, with_coboundaries, images));
    rel = IntMatrix::vstack(rel, images);
  }
  ctx->presentation = AbelianGroup(t, std::move(rel));
  const AbelianGroup& pres = ctx->presentation;
  out.group = AbelianGroup::from_orders(pres.invariant_factors());
  for (std::size_t j = 0; j < pres.invariant_factors().size(); ++j)
    out.reps.push_back(ctx->cocycle_from_params(scaled_sum(z2, pres.normal_generator(j), m)));
  out.context = std::move(ctx);
  return out;
}

IntVector H2Result::class_of(const Cochain2& c) const {
  const auto& pres = context->presentation;
  IntVector nc = pres.normal_coords(to_int_vector(context->z2_coords(c)));
  nc.resize(pres.invariant_factors().size());
  return nc;
}

bool H2Result::in_cocycle_space(const Cochain2& c) const {
  return context->z2.contains(context->params_of(c));
}

// ---------------------------------------------------------------------------
// Restriction and Sha

AbelianHom restriction_hom(const FiniteGroup& g, const EmbeddedGroup& h, const H2Result& h2g,
                           const H2Result& h2h) {
  if (!(h2g.coeff == h2h.coeff) || h2g.modulus != h2h.modulus)
    fail(ErrorCode::CoefficientMismatch,
         "restriction needs equal coefficients (" + h2g.coeff.to_string() + " mod " +
             std::to_string(h2g.modulus) + " vs " + h2h.coeff.to_string() + " mod " +
             std::to_string(h2h.modulus) + ")");
  IntMatrix m(0, h2h.group.ngens());
  for (const auto& rep : h2g.reps) m.append_row(h2h.class_of(restrict_cochain(g, h, rep)));
  if (h2g.reps.empty()) m = IntMatrix(0, h2h.group.ngens());
  return AbelianHom(h2g.group, h2h.group, std::move(m));
}

AbelianHom restriction_hom1(const EmbeddedGroup& h, const H1Result& h1g, const H1Result& h1h) {
  if (!(h1g.coeff == h1h.coeff) || h1g.modulus != h1h.modulus)
    fail(ErrorCode::CoefficientMismatch, "restriction needs equal coefficients");
  IntMatrix m(0, h1h.group.ngens());
  for (const auto& chi : h1g.characters) {
    Cochain1 psi(h.group.order());
    for (std::size_t a = 0; a < psi.size(); ++a) psi[a] = chi[h.embedding[a]];
    m.append_row(h1h.class_of(psi));
  }
  return AbelianHom(h1g.group, h1h.group, std::move(m));
}

namespace {

template <class Restrict>
ShaResult assemble_sha(const AbelianGroup& source, SubgroupFamily family, unsigned threads,
                       Restrict&& restrict) {
  ShaResult out;
  out.kind = family.kind;
  const std::size_t k = family.members.size();
  std::vector<AbelianHom> maps(k);
  parallel_for(k, threads, [&](std::size_t i) { maps[i] = restrict(family.members[i]); });
  std::vector<AbelianGroup> targets;
  for (const auto& f : maps) targets.push_back(f.target());
  AbelianHom total = assemble(source, maps, direct_sum_group(targets));
  KernelResult ker = hom_kernel(total);
  out.group = std::move(ker.group);
  out.inclusion = std::move(ker.inclusion);
  out.per_subgroup_maps = std::move(maps);
  out.witness_family = std::move(family);
  return out;
}

}  // namespace

ShaResult sha2(const FiniteGroup& g, const Coefficient& coeff, SubgroupKind kind,
               const Limits& limits) {
  if (g.order() > limits.cohomology_cap)
    fail(ErrorCode::OrderCapExceeded, "cohomology needs |G| <= " +
                                          std::to_string(limits.cohomology_cap) + ", got " +
                                          std::to_string(g.order()));
  const Residue m = sha_modulus(coeff, g.order());
  H2Result top = h2(g, coeff, limits, m);
  SubgroupFamily family = maximal_subgroup_family(g, kind, limits);
  Limits inner = limits;
  inner.threads = 1;
  return assemble_sha(top.group, std::move(family), limits.threads, [&](const SubgroupSet& s) {
    EmbeddedGroup e = subgroup_group(g, s);
    H2Result low = h2(e.group, coeff, inner, m);
    return restriction_hom(g, e, top, low);
  });
}

ShaResult sha1(const FiniteGroup& g, const Coefficient& coeff, SubgroupKind kind,
               const Limits& limits) {
  H1Result top = h1(g, coeff);
  SubgroupFamily family = maximal_subgroup_family(g, kind, limits);
  return assemble_sha(top.group, std::move(family), limits.threads, [&](const SubgroupSet& s) {
    EmbeddedGroup e = subgroup_group(g, s);
    H1Result low = h1(e.group, coeff, top.modulus);
    return restriction_hom1(e, top, low);
  });
}

AbelianGroup character_kernel(const FiniteGroup& g, SubgroupKind kind, const Limits& limits) {
  return sha1(g, Coefficient::qmodz(), kind, limits).group;
}

}  // namespace brauer
