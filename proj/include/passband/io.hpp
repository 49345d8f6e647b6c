#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "passband/density.hpp"
#include "passband/extension.hpp"
#include "passband/extremal.hpp"

namespace passband {

// ---- density documents (field names per schemas/density-v1.schema.json) ----

// {"segments":[{"form":"constant"|"power"|"grid", ...}]}; "hi": null
// encodes an unbounded segment.  Malformed documents raise ParseError.
Density density_from_json(const nlohmann::json& doc);
nlohmann::json density_to_json(const Density& v);
Density load_density_file(const std::string& path);

// ---- deterministic number formatting ----

// 12 significant digits (%.12g), the precision of all numeric output.
std::string format_double(double x);
// the same value rounded through its 12-digit text form, so JSON documents
// carry the same digits as the CSV ones; non-finite maps to null
nlohmann::json json_number(double x);

// ---- tabular serializations ----

// "# <line>" preamble, then "x,v_ext,err" rows.
std::string extension_csv(const ExtensionResult& ext, const std::vector<std::string>& preamble);
nlohmann::json extension_json(const ExtensionResult& ext);

std::string sweep_csv(const std::vector<SweepRecord>& records);
nlohmann::json sweep_json(const std::vector<SweepRecord>& records);

std::string decay_csv(const std::vector<DecayRecord>& records);
nlohmann::json decay_json(const std::vector<DecayRecord>& records);

nlohmann::json feasibility_json(const FeasibilityReport& rep);

// Writes through a temporary file renamed into place, so a failed run
// never leaves a partial document behind.
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace passband
