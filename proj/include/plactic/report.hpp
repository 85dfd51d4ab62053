#pragma once

#include <string>

#include <json.hpp>

#include "plactic/counting.hpp"
#include "plactic/knuth.hpp"
#include "plactic/stability.hpp"
#include "plactic/tableau.hpp"

namespace plactic {

// Rendered output contract shared by the CLI and the binding layer:
//  - JSON objects use nlohmann's default (sorted) key order and contain no
//    floats; counts that may outgrow 64 bits are decimal strings.
//  - dump() of a parsed report reproduces the original bytes.
enum class Format { json, csv, table };
Format parse_format(const std::string& name);

nlohmann::json tableau_json(const Tableau& t);
Tableau tableau_from_json(const nlohmann::json& j);

nlohmann::json slice_json(const CentralizerSlice& slice);
nlohmann::json stability_json(const StabilityReport& report);
nlohmann::json coefficient_json(const CoefficientReport& report);
nlohmann::json packed_sweep_json(const PackedSweepReport& report);

std::string render_tableau(const Tableau& t);  // one row per line
std::string render_slice(const CentralizerSlice& slice, Format format);
std::string render_stability(const StabilityReport& report, Format format);
std::string render_coefficients(const CoefficientReport& report, Format format);
std::string render_packed_sweep(const PackedSweepReport& report, Format format);

}  // namespace plactic
