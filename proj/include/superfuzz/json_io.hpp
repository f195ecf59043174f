#pragma once

#include <string>

#include <json.hpp>

#include "superfuzz/fuzzy.hpp"
#include "superfuzz/matrix.hpp"
#include "superfuzz/models.hpp"

namespace superfuzz {

// Matrix JSON: {"rows":R,"cols":C,"row_cuts":[...],"col_cuts":[...],"entries":[row-major]}
nlohmann::json matrix_to_json(const SuperMatrix& m);
SuperMatrix matrix_from_json(const nlohmann::json& j);

// State vector JSON: {"domain":"binary|bipolar|scaled|fuzzy","scale":m?,"cuts":[...],"values":[...]}
nlohmann::json state_to_json(const SuperStateVector& v);
SuperStateVector state_from_json(const nlohmann::json& j);

// Model JSON: {"kind":...,"variant":...,"matrix":{...},"domain_labels":[[...]],
//              "range_labels":[[...]],"scale":m?,"thresholds_u":[...]?,"thresholds_v":[...]?}
nlohmann::json model_to_json(const ModelSpec& m);
ModelSpec model_from_json(const nlohmann::json& j); // structural parse only

nlohmann::json parse_file(const std::string& path); // Error(ParseError) on bad input

SuperMatrix load_matrix(const std::string& path);
SuperStateVector load_state(const std::string& path);

/// Parses and validates; aggregates every validation issue (with its JSON
/// path) into one Error(ValidationError).
ModelSpec load_model(const std::string& path);

/// Canonical text form: sorted keys, compact separators, shortest
/// round-trip numbers. Loading and re-serializing a document in this form
/// is byte-stable.
std::string canonical_dump(const nlohmann::json& j);

} // namespace superfuzz
