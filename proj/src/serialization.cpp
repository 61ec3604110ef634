#include "planepart/serialization.hpp"

#include <sstream>
#include <stdexcept>

namespace planepart {

std::string to_csv(const CoefficientTable& table, std::size_t first) {
  std::ostringstream os;
  os << "n,value\n";
  for (std::size_t n = first; n <= table.limit(); ++n) os << n << ',' << table[n].get_str(10) << '\n';
  return os.str();
}

nlohmann::json to_json(const CoefficientTable& table, std::size_t first) {
  nlohmann::json values = nlohmann::json::array();
  for (std::size_t n = first; n <= table.limit(); ++n) {
    values.push_back({{"n", n}, {"value", table[n].get_str(10)}});
  }
  return {{"source", std::string(to_string(table.source()))}, {"limit", table.limit()}, {"values", values}};
}

CoefficientTable table_from_json(const nlohmann::json& j) {
  const std::string source = j.at("source").get<std::string>();
  SeriesSource s;
  if (source == "recurrence") s = SeriesSource::recurrence;
  else if (source == "product") s = SeriesSource::product;
  else if (source == "brute_force") s = SeriesSource::brute_force;
  else throw std::invalid_argument("unknown table source '" + source + "'");
  std::vector<BigInt> coeffs;
  for (const auto& row : j.at("values")) {
    if (row.at("n").get<std::size_t>() != coeffs.size()) throw std::invalid_argument("table rows out of order");
    coeffs.emplace_back(row.at("value").get<std::string>(), 10);
  }
  return CoefficientTable(std::move(coeffs), s);
}

nlohmann::json to_json(const ScanReport& report, double y_min, double y_max, std::size_t y_steps,
                       std::size_t w_steps) {
  return {
      {"grid", {{"y_min", y_min}, {"y_max", y_max}, {"y_steps", y_steps}, {"w_steps", w_steps},
                {"epsilon", report.epsilon}, {"c2", report.c2}, {"points", report.points}}},
      {"passed", report.passed},
      {"violations", report.violations},
      {"worst", {{"y", report.worst.y}, {"w", report.worst.w}, {"margin", report.worst.margin},
                 {"excess", report.worst.excess}}},
      {"certified_c2", report.certified_c2},
  };
}

}  // namespace planepart
