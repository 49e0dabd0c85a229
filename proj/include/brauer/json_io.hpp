#pragma once

// JSON formats: groups {"name"?, "order", "table"}, field profiles,
// cocycle dumps {"modulus", "cocycle": {"g,h": v}}, and reports. Output keys
// are sorted so that equal values serialize to equal bytes.

#include <string>

#include <json.hpp>

#include "brauer/brauer.hpp"
#include "brauer/cohomology.hpp"
#include "brauer/group.hpp"
#include "brauer/oracle.hpp"

namespace brauer {

using Json = nlohmann::json;

/// Parses text, reporting syntax errors as InvalidInput with line and column.
Json parse_json_text(const std::string& text, const std::string& origin);

FiniteGroup group_from_json(const Json& j, const std::string& origin = "input");
Json group_to_json(const FiniteGroup& g);

/// Catalog name, a .json Cayley table, or a permutation file.
FiniteGroup load_group(const std::string& source, std::size_t permutation_cap = 512);

FieldProfile profile_from_json(const Json& j);
Json profile_to_json(const FieldProfile& p);
/// C, R, Q, Q2, Qp:<p> or custom:<path>.
FieldProfile parse_field(const std::string& text);

Json fingerprint_json(const Fingerprint& fp);
Json report_to_json(const BrauerReport& r);
Json cocycle_to_json(const FiniteGroup& g, const Cochain2& c, Residue modulus);
Json oracle_report_to_json(const oracle::OracleReport& r);

std::string read_file(const std::string& path);

}  // namespace brauer
