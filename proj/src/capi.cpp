#include "brauer/brauer.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <set>
#include <sstream>

#include "brauer/brauer.hpp"
#include "brauer/catalog.hpp"
#include "brauer/error.hpp"
#include "brauer/json_io.hpp"
#include "brauer/oracle.hpp"
#include "brauer/parallel.hpp"

struct brauer_context {
  brauer::Limits limits = brauer::default_limits();
  std::string error;
  std::string error_code;
};

struct brauer_group {
  brauer::FiniteGroup g;
};

namespace {

using brauer::ErrorCode;
using brauer::Json;

brauer_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::OrderCapExceeded: return BRAUER_CAP_EXCEEDED;
    case ErrorCode::TheoremViolation:
    case ErrorCode::OracleMismatch: return BRAUER_MISMATCH;
    default: return BRAUER_INPUT_ERROR;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs fn, translating exceptions into a status and the context message.
template <class Fn>
brauer_status guarded(brauer_context* ctx, Fn&& fn) {
  if (!ctx) return BRAUER_INPUT_ERROR;
  ctx->error.clear();
  ctx->error_code.clear();
  try {
    return fn();
  } catch (const brauer::Error& e) {
    ctx->error = e.what();
    ctx->error_code = brauer::error_code_name(e.code());
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    ctx->error = "out of memory";
    ctx->error_code = "Internal";
    return BRAUER_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    ctx->error = e.what();
    ctx->error_code = "Internal";
    return BRAUER_INTERNAL_ERROR;
  }
}

brauer_status emit(const Json& j, char** out) {
  if (!out) return BRAUER_INPUT_ERROR;
  *out = dup_string(j.dump(2) + "\n");
  return *out ? BRAUER_OK : BRAUER_INTERNAL_ERROR;
}

void need(const void* p, const char* what) {
  if (!p) brauer::fail(ErrorCode::InvalidInput, std::string(what) + " is null");
}

std::string group_label(const brauer::FiniteGroup& g) {
  return g.name().empty() ? "G" : g.name();
}

Json family_json(const brauer::SubgroupFamily& f) {
  Json members = Json::array();
  for (const auto& s : f.members) members.push_back({{"order", s.order()}, {"generators", s.generators}});
  return members;
}

Json group_info(const brauer::FiniteGroup& g, const brauer::Limits& limits) {
  using namespace brauer;
  Json j;
  j["name"] = g.name();
  j["order"] = g.order();
  j["exponent"] = g.exponent();
  j["abelian"] = g.is_abelian();
  AbelianGroup ab = abelianization(g).group;
  j["abelianization"] = fingerprint_json(ab.fingerprint());
  j["perfect"] = ab.is_trivial();
  j["center_order"] = center(g).order();
  j["commutator_order"] = commutator_subgroup(g).order();
  Json sylow = Json::object();
  for (unsigned p : prime_factors(g.order())) {
    SylowResult s = sylow_subgroup(g, p);
    sylow[std::to_string(p)] = {{"order", s.subgroup.order()}, {"abelian", s.abelian}};
  }
  j["sylow"] = sylow;
  Json fam = Json::object();
  for (auto k : {SubgroupKind::Cyclic, SubgroupKind::Bicyclic, SubgroupKind::Abelian})
    fam[kind_name(k)] = maximal_subgroup_family(g, k, limits).members.size();
  j["families"] = fam;
  return j;
}

struct Grid {
  std::size_t min_order = 1;
  std::size_t max_order = 16;
  std::vector<brauer::Coefficient> coeffs;
};

Grid parse_grid(const std::string& text) {
  using brauer::fail;
  Grid grid;
  std::stringstream ss(text);
  std::string tok;
  bool in_r = false;
  auto number = [&](const std::string& s, const std::string& what) -> std::size_t {
    if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string::npos)
      fail(ErrorCode::InvalidInput, "grid: bad " + what + " '" + s + "'");
    return std::stoul(s);
  };
  while (std::getline(ss, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(' '));
    tok.erase(tok.find_last_not_of(' ') + 1);
    if (tok.empty()) continue;
    if (tok.rfind("order<=", 0) == 0) {
      grid.max_order = number(tok.substr(7), "order");
      in_r = false;
    } else if (tok.rfind("order>=", 0) == 0) {
      grid.min_order = number(tok.substr(7), "order");
      in_r = false;
    } else if (tok.rfind("r=", 0) == 0) {
      in_r = true;
      grid.coeffs.push_back(brauer::parse_coefficient(tok.substr(2)));
    } else if (tok == "q" || tok == "Q/Z") {
      grid.coeffs.push_back(brauer::Coefficient::qmodz());
    } else if (in_r) {
      grid.coeffs.push_back(brauer::Coefficient::zmod(static_cast<brauer::Residue>(number(tok, "r"))));
    } else {
      fail(ErrorCode::InvalidInput, "grid: unknown term '" + tok + "'");
    }
  }
  if (grid.coeffs.empty()) fail(ErrorCode::InvalidInput, "grid: no coefficients (use r=...)");
  return grid;
}

std::vector<std::filesystem::path> fixture_files() {
  namespace fs = std::filesystem;
  std::set<fs::path> out;
  std::vector<fs::path> dirs;
  if (const char* env = std::getenv("BRAUER_FIXTURES")) dirs.emplace_back(env);
#ifdef BRAUER_FIXTURE_DIR
  dirs.emplace_back(BRAUER_FIXTURE_DIR);
#endif
  for (const auto& d : dirs) {
    std::error_code ec;
    if (!fs::is_directory(d, ec)) continue;
    for (const auto& e : fs::directory_iterator(d, ec))
      if (e.path().extension() == ".json") out.insert(e.path());
  }
  return {out.begin(), out.end()};
}

}  // namespace

extern "C" {

brauer_context* brauer_context_new(void) {
  try {
    return new brauer_context();
  } catch (...) {
    return nullptr;
  }
}

void brauer_context_free(brauer_context* ctx) { delete ctx; }

void brauer_context_set_threads(brauer_context* ctx, unsigned threads) {
  if (ctx) ctx->limits.threads = threads ? threads : 1;
}

brauer_status brauer_context_set_cap(brauer_context* ctx, const char* which, size_t value) {
  return guarded(ctx, [&] {
    need(which, "cap name");
    std::string w = which;
    if (value == 0) brauer::fail(ErrorCode::InvalidInput, "caps must be positive");
    if (w == "enumeration") ctx->limits.enumeration_cap = value;
    else if (w == "cohomology") ctx->limits.cohomology_cap = value;
    else if (w == "permutation") ctx->limits.permutation_cap = value;
    else if (w == "oracle") ctx->limits.oracle_cap = value;
    else brauer::fail(ErrorCode::InvalidInput, "unknown cap '" + w + "'");
    return BRAUER_OK;
  });
}

const char* brauer_last_error(const brauer_context* ctx) { return ctx ? ctx->error.c_str() : ""; }

const char* brauer_last_error_code(const brauer_context* ctx) {
  return ctx ? ctx->error_code.c_str() : "";
}

brauer_status brauer_group_load(brauer_context* ctx, const char* source, brauer_group** out) {
  return guarded(ctx, [&] {
    need(source, "source");
    need(out, "output");
    *out = new brauer_group{brauer::load_group(source, ctx->limits.permutation_cap)};
    return BRAUER_OK;
  });
}

brauer_status brauer_group_from_json(brauer_context* ctx, const char* json, brauer_group** out) {
  return guarded(ctx, [&] {
    need(json, "json");
    need(out, "output");
    Json j = brauer::parse_json_text(json, "input");
    *out = new brauer_group{brauer::group_from_json(j)};
    return BRAUER_OK;
  });
}

void brauer_group_free(brauer_group* g) { delete g; }

size_t brauer_group_order(const brauer_group* g) { return g ? g->g.order() : 0; }

brauer_status brauer_group_info_json(brauer_context* ctx, const brauer_group* g, char** out) {
  return guarded(ctx, [&] {
    need(g, "group");
    return emit(group_info(g->g, ctx->limits), out);
  });
}

brauer_status brauer_group_table_json(brauer_context* ctx, const brauer_group* g, char** out) {
  return guarded(ctx, [&] {
    need(g, "group");
    return emit(brauer::group_to_json(g->g), out);
  });
}

brauer_status brauer_b0_json(brauer_context* ctx, const brauer_group* g, int oracle_check, char** out) {
  return guarded(ctx, [&] {
    using namespace brauer;
    need(g, "group");
    const Limits& lim = ctx->limits;
    Json j;
    j["group"] = group_label(g->g);
    j["order"] = g->g.order();
    AbelianGroup b0 = bogomolov_multiplier(g->g, lim);
    j["b0"] = fingerprint_json(b0.fingerprint());
    j["applied"] = {"Thm-bogogeneral"};
    j["paths"] = Json::array({"main"});
    if (!oracle_check) return emit(j, out);

    j["paths"].push_back("oracle");
    Fingerprint bi = oracle::sha2_dense(g->g, Coefficient::qmodz(), SubgroupKind::Bicyclic, lim.oracle_cap);
    Fingerprint ab = oracle::sha2_dense(g->g, Coefficient::qmodz(), SubgroupKind::Abelian, lim.oracle_cap);
    oracle::OracleReport h2rep = oracle::compare_h2(g->g, Coefficient::qmodz(), lim);
    bool ok = bi == b0.fingerprint() && ab == b0.fingerprint() && h2rep.match;
    j["oracle"] = {{"b0", fingerprint_json(bi)},
                   {"sha2_ab", fingerprint_json(ab)},
                   {"h2", oracle_report_to_json(h2rep)},
                   {"match", ok}};
    brauer_status st = emit(j, out);
    if (st != BRAUER_OK) return st;
    if (!ok) {
      ctx->error = "OracleMismatch: main and oracle paths disagree on B0 or H^2(G, Q/Z)";
      ctx->error_code = "OracleMismatch";
      return BRAUER_MISMATCH;
    }
    return BRAUER_OK;
  });
}

brauer_status brauer_brnr_json(brauer_context* ctx, const brauer_group* g, const char* field, char** out) {
  return guarded(ctx, [&] {
    need(g, "group");
    need(field, "field");
    brauer::FieldProfile p = brauer::parse_field(field);
    Json j = brauer::report_to_json(brauer::brnr_bound(g->g, p, ctx->limits));
    j["input"]["field"] = brauer::profile_to_json(p);
    return emit(j, out);
  });
}

brauer_status brauer_real_report_json(brauer_context* ctx, const brauer_group* g, char** out) {
  return guarded(ctx, [&] {
    need(g, "group");
    return emit(brauer::report_to_json(brauer::real_report(g->g, ctx->limits)), out);
  });
}

brauer_status brauer_simple_group_json(brauer_context* ctx, const brauer_group* g, const char* field,
                                       char** out) {
  return guarded(ctx, [&] {
    need(g, "group");
    need(field, "field");
    brauer::FieldProfile p = brauer::parse_field(field);
    return emit(brauer::report_to_json(brauer::simple_group_report(g->g, p, ctx->limits)), out);
  });
}

brauer_status brauer_algebraic_bound_json(brauer_context* ctx, const brauer_group* g, long r, char** out) {
  return guarded(ctx, [&] {
    need(g, "group");
    brauer::FieldProfile p = brauer::finite_roots_profile(r);
    return emit(brauer::report_to_json(brauer::algebraic_bound(g->g, p, ctx->limits)), out);
  });
}

brauer_status brauer_sha2_json(brauer_context* ctx, const brauer_group* g, const char* coeff,
                               const char* kind, char** out) {
  return guarded(ctx, [&] {
    using namespace brauer;
    need(g, "group");
    need(coeff, "coefficient");
    need(kind, "kind");
    Coefficient c = parse_coefficient(coeff);
    SubgroupKind k = parse_kind(kind);
    ShaResult s = sha2(g->g, c, k, ctx->limits);
    Json j;
    j["group"] = group_label(g->g);
    j["coeff"] = c.to_string();
    j["kind"] = kind_name(k);
    j["sha2"] = fingerprint_json(s.group.fingerprint());
    j["h2"] = fingerprint_json(s.inclusion.target().fingerprint());
    j["family"] = family_json(s.witness_family);
    j["reduction_log"] = s.witness_family.reduction_log;
    return emit(j, out);
  });
}

brauer_status brauer_sha1_json(brauer_context* ctx, const brauer_group* g, const char* coeff,
                               const char* kind, char** out) {
  return guarded(ctx, [&] {
    using namespace brauer;
    need(g, "group");
    need(coeff, "coefficient");
    need(kind, "kind");
    Coefficient c = parse_coefficient(coeff);
    SubgroupKind k = parse_kind(kind);
    ShaResult s = sha1(g->g, c, k, ctx->limits);
    Json j;
    j["group"] = group_label(g->g);
    j["coeff"] = c.to_string();
    j["kind"] = kind_name(k);
    j["sha1"] = fingerprint_json(s.group.fingerprint());
    j["h1"] = fingerprint_json(s.inclusion.target().fingerprint());
    j["family"] = family_json(s.witness_family);
    return emit(j, out);
  });
}

brauer_status brauer_h2_json(brauer_context* ctx, const brauer_group* g, const char* coeff,
                             int with_cocycles, char** out) {
  return guarded(ctx, [&] {
    using namespace brauer;
    need(g, "group");
    need(coeff, "coefficient");
    Coefficient c = parse_coefficient(coeff);
    H2Result h = h2(g->g, c, ctx->limits);
    Json j;
    j["group"] = group_label(g->g);
    j["coeff"] = c.to_string();
    j["modulus"] = h.modulus;
    j["h2"] = fingerprint_json(h.group.fingerprint());
    if (with_cocycles) {
      Json reps = Json::array();
      for (std::size_t i = 0; i < h.reps.size(); ++i) {
        Json r = cocycle_to_json(g->g, h.reps[i], h.modulus);
        r["order"] = h.group.invariant_factors()[i].get_si();
        reps.push_back(r);
      }
      j["representatives"] = reps;
    }
    return emit(j, out);
  });
}

brauer_status brauer_sweep_json(brauer_context* ctx, const char* grid_text, char** out) {
  return guarded(ctx, [&] {
    using namespace brauer;
    need(grid_text, "grid");
    Grid grid = parse_grid(grid_text);
    const Limits& lim = ctx->limits;
    std::vector<std::pair<std::string, Coefficient>> cells;
    for (const auto& e : catalog_entries())
      if (e.order >= grid.min_order && e.order <= grid.max_order && e.order <= lim.oracle_cap)
        for (const auto& c : grid.coeffs) cells.push_back({e.name, c});
    std::vector<Json> results(cells.size());
    Limits inner = lim;
    inner.threads = 1;
    parallel_for(cells.size(), lim.threads, [&](std::size_t i) {
      FiniteGroup g = *catalog_group(cells[i].first);
      const Coefficient& c = cells[i].second;
      oracle::OracleReport h = oracle::compare_h2(g, c, inner);
      Fingerprint sm = sha2(g, c, SubgroupKind::Bicyclic, inner).group.fingerprint();
      Fingerprint so = oracle::sha2_dense(g, c, SubgroupKind::Bicyclic, inner.oracle_cap);
      bool ok = h.match && sm == so;
      results[i] = {{"group", cells[i].first},
                    {"coeff", c.to_string()},
                    {"h2_main", fingerprint_json(h.main)},
                    {"h2_oracle", fingerprint_json(h.oracle)},
                    {"sha2_bicyc_main", fingerprint_json(sm)},
                    {"sha2_bicyc_oracle", fingerprint_json(so)},
                    {"match", ok}};
      if (!ok) results[i]["witness"] = h.witness.empty() ? "Sha2_bicyc differs" : h.witness;
    });
    std::size_t mismatches = 0;
    Json arr = Json::array();
    for (auto& r : results) {
      if (!r["match"].get<bool>()) ++mismatches;
      arr.push_back(std::move(r));
    }
    Json j{{"grid", grid_text}, {"cells", arr}, {"total", cells.size()}, {"mismatches", mismatches}};
    brauer_status st = emit(j, out);
    if (st == BRAUER_OK && mismatches) {
      ctx->error = "OracleMismatch: " + std::to_string(mismatches) + " sweep cells disagree";
      ctx->error_code = "OracleMismatch";
      return BRAUER_MISMATCH;
    }
    return st;
  });
}

brauer_status brauer_catalog_json(brauer_context* ctx, char** out) {
  return guarded(ctx, [&] {
    using namespace brauer;
    Json arr = Json::array();
    for (const auto& e : catalog_entries()) {
      Json exp = Json::array();
      for (const auto& v : e.expected)
        exp.push_back({{"quantity", v.quantity}, {"value", v.value}, {"provenance", v.provenance}});
      arr.push_back({{"name", e.name},
                     {"family", e.family},
                     {"parameters", e.parameters},
                     {"order", e.order},
                     {"description", e.description},
                     {"expected", exp}});
    }
    for (const auto& path : fixture_files()) {
      Json entry{{"name", path.stem().string()}, {"family", "fixture"}, {"file", path.filename().string()}};
      try {
        Json fj = parse_json_text(read_file(path.string()), path.filename().string());
        if (fj.contains("order")) entry["order"] = fj["order"];
        if (fj.contains("provenance")) {
          entry["provenance"] = fj["provenance"];
          if (fj["provenance"].contains("b0"))
            entry["expected"] = Json::array({{{"quantity", "b0"},
                                              {"value", fj["provenance"]["b0"]},
                                              {"provenance", "derived: fixture search, both paths"}}});
        }
      } catch (const Error& e) {
        entry["error"] = e.what();
      }
      arr.push_back(entry);
    }
    return emit(Json{{"groups", arr}}, out);
  });
}

void brauer_string_free(char* s) { std::free(s); }

}  // extern "C"
