// Command-line front end over the C API. Human output is rendered from the
// same JSON that --json prints.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "brauer/brauer.h"

using nlohmann::json;

namespace {

struct Session {
  brauer_context* ctx = brauer_context_new();
  ~Session() { brauer_context_free(ctx); }
};

std::string group_text(const json& inv) {
  if (inv.empty()) return "0";
  std::string s;
  for (const auto& d : inv) {
    if (!s.empty()) s += " x ";
    s += "Z/" + (d.is_string() ? d.get<std::string>() : std::to_string(d.get<long long>()));
  }
  return s;
}

std::string tags(const json& applied) {
  std::string s;
  for (const auto& t : applied) s += (s.empty() ? "" : ", ") + t.get<std::string>();
  return "[" + s + "]";
}

void print_report(const json& j) {
  std::cout << "bound:   " << group_text(j["bound"]) << "\n";
  std::cout << "status:  " << j["status"].get<std::string>() << "\n";
  std::cout << "applied: " << tags(j["applied"]) << "\n";
  for (const auto& n : j["notes"]) std::cout << "  - " << n.get<std::string>() << "\n";
}

void print_info(const json& j) {
  std::cout << "group " << j["name"].get<std::string>() << ": order " << j["order"] << ", exponent "
            << j["exponent"] << (j["abelian"].get<bool>() ? ", abelian" : ", non-abelian") << "\n";
  std::cout << "abelianization: " << group_text(j["abelianization"])
            << (j["perfect"].get<bool>() ? " (perfect)" : "") << "\n";
  std::cout << "center order " << j["center_order"] << ", commutator subgroup order "
            << j["commutator_order"] << "\n";
  for (const auto& [p, s] : j["sylow"].items())
    std::cout << "Sylow " << p << ": order " << s["order"]
              << (s["abelian"].get<bool>() ? ", abelian" : ", non-abelian") << "\n";
  for (const auto& [k, n] : j["families"].items())
    std::cout << "maximal " << k << " subgroups (up to conjugacy): " << n << "\n";
}

void print_human(const std::string& cmd, const json& j) {
  if (cmd == "group-info") {
    print_info(j);
  } else if (cmd == "b0") {
    std::cout << "B0(" << j["group"].get<std::string>() << ") = " << group_text(j["b0"]) << "  "
              << tags(j["applied"]) << "\n";
    if (j.contains("oracle")) {
      const json& o = j["oracle"];
      std::cout << "oracle: B0 = " << group_text(o["b0"]) << ", Sha2_ab = " << group_text(o["sha2_ab"])
                << ", H^2(G, Q/Z) = " << group_text(o["h2"]["oracle"]) << " -> "
                << (o["match"].get<bool>() ? "match" : "MISMATCH") << "\n";
    }
  } else if (cmd == "brnr" || cmd == "algebraic-bound" || cmd == "real-report" ||
             cmd == "simple-group") {
    print_report(j);
  } else if (cmd == "sha2" || cmd == "sha1") {
    const char* key = cmd == "sha2" ? "sha2" : "sha1";
    std::cout << (cmd == "sha2" ? "Sha2_" : "Sha1_") << j["kind"].get<std::string>() << "("
              << j["group"].get<std::string>() << ", " << j["coeff"].get<std::string>()
              << ") = " << group_text(j[key]) << "\n";
    std::cout << "family: " << j["family"].size() << " subgroups\n";
  } else if (cmd == "h2") {
    std::cout << "H^2(" << j["group"].get<std::string>() << ", " << j["coeff"].get<std::string>()
              << ") = " << group_text(j["h2"]) << "\n";
  } else if (cmd == "sweep") {
    for (const auto& c : j["cells"])
      if (!c["match"].get<bool>())
        std::cout << "MISMATCH " << c["group"].get<std::string>() << " " << c["coeff"].get<std::string>()
                  << ": main " << group_text(c["h2_main"]) << ", oracle " << group_text(c["h2_oracle"])
                  << "\n";
    std::cout << j["total"] << " cells, " << j["mismatches"] << " mismatches\n";
  } else if (cmd == "catalog") {
    for (const auto& g : j["groups"]) {
      std::cout << g["name"].get<std::string>();
      if (g.contains("order")) std::cout << "  order " << g["order"];
      if (g.contains("description")) std::cout << "  " << g["description"].get<std::string>();
      std::cout << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sha groups, Bogomolov multipliers and unramified Brauer bounds of finite groups"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  unsigned par = 1;
  std::size_t oracle_cap = 0;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--par", par, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--oracle-cap", oracle_cap, "largest group order for the oracle path");

  std::string input, field = "C", coeff = "q", kind = "bicyclic", grid = "order<=16,r=2,3,4";
  long r = 2;
  bool oracle_check = false, cocycles = false;

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "catalog name, Cayley table JSON, or permutation file")->required();
    return sub;
  };
  auto* info = with_input(app.add_subcommand("group-info", "order, abelianization, Sylow data, families"));
  auto* b0 = with_input(app.add_subcommand("b0", "Bogomolov multiplier"));
  b0->add_flag("--oracle-check", oracle_check, "recompute on the oracle path and compare");
  auto* brnr = with_input(app.add_subcommand("brnr", "bound for the normalized unramified Brauer group"));
  brnr->add_option("--field", field, "C, R, Q, Qp:<p>, Q2 or custom:<path>")->required();
  auto* alg = with_input(app.add_subcommand("algebraic-bound", "character-kernel bound"));
  alg->add_option("--r", r, "mu(k) = Z/r")->required();
  auto* real = with_input(app.add_subcommand("real-report", "k = R report"));
  auto* simple = with_input(app.add_subcommand("simple-group", "perfect groups over a finite-roots field"));
  simple->add_option("--field", field)->required();
  auto* s2 = with_input(app.add_subcommand("sha2", "Sha^2 of a subgroup kind"));
  s2->add_option("--coeff", coeff, "q or an integer r")->required();
  s2->add_option("--kind", kind, "cyclic, bicyclic or abelian")->required();
  auto* s1 = with_input(app.add_subcommand("sha1", "Sha^1 of a subgroup kind"));
  s1->add_option("--coeff", coeff)->required();
  s1->add_option("--kind", kind)->required();
  auto* h2 = with_input(app.add_subcommand("h2", "H^2 with trivial coefficients"));
  h2->add_option("--coeff", coeff)->required();
  h2->add_flag("--cocycles", cocycles, "include representative cocycles");
  auto* sweep = app.add_subcommand("sweep", "main path against the oracle over catalog groups");
  sweep->add_option("--grid", grid, "e.g. order<=16,r=2,3,4");
  auto* cat = app.add_subcommand("catalog", "list built-in groups and fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Session s;
  brauer_context_set_threads(s.ctx, par);
  if (oracle_cap) brauer_context_set_cap(s.ctx, "oracle", oracle_cap);

  CLI::App* used = app.get_subcommands().front();
  const std::string cmd = used->get_name();
  std::unique_ptr<brauer_group, void (*)(brauer_group*)> group(nullptr, brauer_group_free);
  if (used != sweep && used != cat) {
    brauer_group* g = nullptr;
    if (brauer_status st = brauer_group_load(s.ctx, input.c_str(), &g); st != BRAUER_OK) {
      std::cerr << "error: " << brauer_last_error(s.ctx) << "\n";
      return st;
    }
    group.reset(g);
  }

  char* out = nullptr;
  brauer_status st = BRAUER_OK;
  if (used == info) st = brauer_group_info_json(s.ctx, group.get(), &out);
  else if (used == b0) st = brauer_b0_json(s.ctx, group.get(), oracle_check, &out);
  else if (used == brnr) st = brauer_brnr_json(s.ctx, group.get(), field.c_str(), &out);
  else if (used == alg) st = brauer_algebraic_bound_json(s.ctx, group.get(), r, &out);
  else if (used == real) st = brauer_real_report_json(s.ctx, group.get(), &out);
  else if (used == simple) st = brauer_simple_group_json(s.ctx, group.get(), field.c_str(), &out);
  else if (used == s2) st = brauer_sha2_json(s.ctx, group.get(), coeff.c_str(), kind.c_str(), &out);
  else if (used == s1) st = brauer_sha1_json(s.ctx, group.get(), coeff.c_str(), kind.c_str(), &out);
  else if (used == h2) st = brauer_h2_json(s.ctx, group.get(), coeff.c_str(), cocycles, &out);
  else if (used == sweep) st = brauer_sweep_json(s.ctx, grid.c_str(), &out);
  else if (used == cat) st = brauer_catalog_json(s.ctx, &out);

  if (out) {
    if (as_json) std::fputs(out, stdout);
    else print_human(cmd, json::parse(out));
    brauer_string_free(out);
  }
  if (st != BRAUER_OK) std::cerr << "error: " << brauer_last_error(s.ctx) << "\n";
  return st;
}
