#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "planepart/condition_iv.hpp"
#include "planepart/exact_series.hpp"

namespace planepart {

/// "n,value" header followed by one decimal row per index.
std::string to_csv(const CoefficientTable& table, std::size_t first = 0);

/// {"source": ..., "limit": N, "values": [{"n": 0, "value": "1"}, ...]}.
/// Values are decimal strings.
nlohmann::json to_json(const CoefficientTable& table, std::size_t first = 0);

/// Inverse of to_json for a table starting at n = 0.
CoefficientTable table_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ScanReport& report, double y_min, double y_max, std::size_t y_steps,
                       std::size_t w_steps);

}  // namespace planepart
