#include "brauer/json_io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "brauer/catalog.hpp"
#include "brauer/error.hpp"

#ifndef BRAUER_FIXTURE_DIR
#define BRAUER_FIXTURE_DIR "fixtures"
#endif

namespace brauer {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::InvalidInput, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    std::size_t pos = e.byte ? e.byte - 1 : 0;
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (auto colon = msg.rfind(": "); colon != std::string::npos) msg = msg.substr(colon + 2);
    fail(ErrorCode::InvalidInput, origin + ": malformed JSON at line " + std::to_string(line) +
                                      ", column " + std::to_string(col) + ": " + msg);
  }
}

FiniteGroup group_from_json(const Json& j, const std::string& origin) {
  auto bad = [&](const std::string& what) { fail(ErrorCode::InvalidInput, origin + ": " + what); };
  if (!j.is_object()) bad("expected an object with \"order\" and \"table\"");
  if (!j.contains("order") || !j["order"].is_number_unsigned()) bad("\"order\" must be a positive integer");
  if (!j.contains("table") || !j["table"].is_array()) bad("\"table\" must be an array of rows");
  const std::size_t n = j["order"].get<std::size_t>();
  if (n == 0) bad("\"order\" must be positive");
  const Json& t = j["table"];
  if (t.size() != n) bad("table has " + std::to_string(t.size()) + " rows, expected " + std::to_string(n));
  std::vector<std::vector<long long>> rows(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (!t[a].is_array() || t[a].size() != n)
      bad("row " + std::to_string(a) + " must have " + std::to_string(n) + " entries");
    rows[a].resize(n);
    for (std::size_t b = 0; b < n; ++b) {
      if (!t[a][b].is_number_integer())
        bad("entry [" + std::to_string(a) + "][" + std::to_string(b) + "] is not an integer");
      rows[a][b] = t[a][b].get<long long>();
    }
  }
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) bad("\"name\" must be a string");
    name = j["name"].get<std::string>();
  }
  return FiniteGroup::from_cayley_table(rows, std::move(name));
}

Json group_to_json(const FiniteGroup& g) {
  Json j;
  if (!g.name().empty()) j["name"] = g.name();
  j["order"] = g.order();
  j["table"] = g.table_rows();
  return j;
}

namespace {

std::optional<fs::path> fixture_path(const std::string& source) {
  std::vector<fs::path> dirs;
  if (const char* env = std::getenv("BRAUER_FIXTURES")) dirs.emplace_back(env);
  dirs.emplace_back(BRAUER_FIXTURE_DIR);
  for (const auto& d : dirs)
    for (const std::string& f : {source, source + ".json"}) {
      fs::path p = d / f;
      if (fs::is_regular_file(p)) return p;
    }
  return std::nullopt;
}

}  // namespace

FiniteGroup load_group(const std::string& source, std::size_t permutation_cap) {
  if (auto g = catalog_group(source)) return std::move(*g);
  fs::path path(source);
  if (!fs::is_regular_file(path)) {
    auto fx = source.find('/') == std::string::npos ? fixture_path(source) : std::nullopt;
    if (!fx) fail(ErrorCode::InvalidInput, "'" + source + "' is neither a catalog name nor a file");
    path = *fx;
  }
  const std::string text = read_file(path.string());
  const std::string origin = path.filename().string();
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (path.extension() == ".json" || (first != std::string::npos && text[first] == '{')) {
    FiniteGroup g = group_from_json(parse_json_text(text, origin), origin);
    if (g.name().empty()) g.set_name(path.stem().string());
    return g;
  }
  PermutationInput perms;
  try {
    perms = parse_permutations(text);
  } catch (const Error& e) {
    throw Error(e.code(), origin + ": " + e.what());
  }
  if (perms.generators.empty()) fail(ErrorCode::InvalidInput, origin + ": no permutations");
  return FiniteGroup::from_permutations(perms.generators, perms.degree, permutation_cap,
                                        path.stem().string());
}

namespace {

Cyclicity parse_cyclicity(const Json& v, const std::string& where) {
  if (v.is_string()) {
    if (v == "cyclic") return Cyclicity::Cyclic;
    if (v == "non_cyclic") return Cyclicity::NonCyclic;
  }
  fail(ErrorCode::InvalidInput, where + " must be \"cyclic\" or \"non_cyclic\"");
}

const char* cyclicity_name(Cyclicity c) { return c == Cyclicity::Cyclic ? "cyclic" : "non_cyclic"; }

}  // namespace

FieldProfile profile_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorCode::InvalidInput, "field profile must be an object");
  FieldProfile p;
  p.name = "custom";
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail(ErrorCode::InvalidInput, "profile \"name\" must be a string");
    p.name = j["name"].get<std::string>();
  }
  if (!j.contains("mu")) fail(ErrorCode::InvalidInput, "profile needs \"mu\"");
  const Json& mu = j["mu"];
  if (mu.is_string() && mu == "all_roots") {
    p.roots.reset();
  } else if (mu.is_object() && mu.contains("finite") && mu["finite"].is_number_integer()) {
    p.roots = mu["finite"].get<Residue>();
  } else {
    fail(ErrorCode::InvalidInput, "\"mu\" must be \"all_roots\" or {\"finite\": r}");
  }
  if (!j.contains("default"))
    fail(ErrorCode::InvalidInput, "profile needs \"default\" for exponents beyond the table");
  p.fallback = parse_cyclicity(j["default"], "\"default\"");
  if (j.contains("cyclo2")) {
    if (!j["cyclo2"].is_object()) fail(ErrorCode::InvalidInput, "\"cyclo2\" must be an object");
    for (const auto& [key, value] : j["cyclo2"].items()) {
      if (key.empty() || key.size() > 2 || key.find_first_not_of("0123456789") != std::string::npos)
        fail(ErrorCode::InvalidInput, "\"cyclo2\" key '" + key + "' is not an exponent");
      p.cyclo2[static_cast<unsigned>(std::stoul(key))] =
          parse_cyclicity(value, "\"cyclo2\"[\"" + key + "\"]");
    }
  }
  validate_profile(p);
  return p;
}

Json profile_to_json(const FieldProfile& p) {
  Json j;
  if (p.roots) j["mu"] = {{"finite", *p.roots}};
  else j["mu"] = "all_roots";
  Json table = Json::object();
  for (auto [s, c] : p.cyclo2) table[std::to_string(s)] = cyclicity_name(c);
  j["cyclo2"] = table;
  j["default"] = cyclicity_name(p.fallback);
  j["name"] = p.name;
  return j;
}

FieldProfile parse_field(const std::string& text) {
  if (text.rfind("custom:", 0) == 0) {
    const std::string path = text.substr(7);
    return profile_from_json(parse_json_text(read_file(path), path));
  }
  return preset(text);
}

Json fingerprint_json(const Fingerprint& fp) {
  Json a = Json::array();
  for (const auto& d : fp.invariants) {
    if (d.fits_slong_p()) a.push_back(d.get_si());
    else a.push_back(d.get_str());
  }
  return a;
}

Json report_to_json(const BrauerReport& r) {
  Json j;
  j["bound"] = fingerprint_json(r.bound.fingerprint());
  j["status"] = status_name(r.status);
  j["applied"] = r.applied;
  j["notes"] = r.notes;
  j["input"] = {{"group", r.group_name}, {"order", r.group_order}, {"profile", r.profile}};
  return j;
}

Json cocycle_to_json(const FiniteGroup& g, const Cochain2& c, Residue modulus) {
  // Only nonzero values are listed.
  Json values = Json::object();
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (Residue v = c[a * n + b]; v != 0)
        values[std::to_string(a) + "," + std::to_string(b)] = v;
  return {{"modulus", modulus}, {"cocycle", values}};
}

Json oracle_report_to_json(const oracle::OracleReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"target", r.target},
          {"main", fingerprint_json(r.main)},
          {"oracle", fingerprint_json(r.oracle)},
          {"match", r.match},
          {"witness", r.witness},
          {"checks", checks}};
}

}  // namespace brauer
