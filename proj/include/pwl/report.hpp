#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "pwl/pwlmap.hpp"

namespace pwl {

// Machine report with stable key order: name, n, widths, determinants,
// degree, verdict, theorem_tag, witness, inverse, clarke_min_det,
// clarke_weights, clarke_resolution. Absent items are null.
nlohmann::ordered_json report_json(const PwlMap2& g, std::string_view name = "");

// Human-readable report, or report_json(...).dump(2) when `machine`.
std::string report(const PwlMap2& g, bool machine, std::string_view name = "");

}  // namespace pwl
