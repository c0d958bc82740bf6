#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "subshift/chains.hpp"
#include "subshift/complexity.hpp"
#include "subshift/examples.hpp"
#include "subshift/spacetime.hpp"

namespace subshift {

using Json = nlohmann::ordered_json;

/// {"kind", "alphabet", "forbidden", "background", "families", "factors"}.
/// Unknown keys are rejected with "invalid-spec" and a JSON-pointer location.
Subshift spec_from_json(const Json& j);
Json spec_to_json(const Subshift& x);

/// {"range", "alphabet", "rule": {"window": "letter", ...}}; the rule must
/// cover exactly L_{2R+1}(X).
BlockCode code_from_json(const Json& j, const Subshift& x);
Json code_to_json(const BlockCode& phi);

/// {"left", "center", "right", "origin_offset"} with words as strings.
Configuration configuration_from_json(const Json& j, const Alphabet& a);
Json configuration_to_json(const Configuration& x, const Alphabet& a);

Json chain_to_json(const Chain& c);
Json table_to_json(const ComplexityTable& t);
std::string table_to_csv(const ComplexityTable& t);
Json window_to_json(const SpaceTimeWindow& w, const Alphabet& a);

/// Reads a JSON file; parse failures become "invalid-json" with the byte offset.
Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
/// Writes through a temporary file and a rename.
void write_file_atomic(const std::string& path, const std::string& content);

/// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

/// spec.json, codes/<name>.json and probes/<name>.json under dir.
void export_example(const NamedSystem& s, const std::string& dir);

}  // namespace subshift
