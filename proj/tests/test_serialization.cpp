#include <doctest.h>

#include "planepart/serialization.hpp"

using namespace planepart;

TEST_CASE("csv") {
  const CoefficientTable q = plane_partition_table(4);
  CHECK(to_csv(q) == "n,value\n0,1\n1,1\n2,3\n3,6\n4,13\n");
  CHECK(to_csv(q, 3) == "n,value\n3,6\n4,13\n");
}

TEST_CASE("json round trip") {
  const CoefficientTable q = plane_partition_table(200);
  const nlohmann::json j = to_json(q);
  CHECK(j.at("source") == "recurrence");
  CHECK(j.at("limit") == 200);
  CHECK(j.at("values").size() == 201);
  CHECK(j.at("values")[10].at("value") == "500");

  const std::string text = j.dump(2);
  CHECK(nlohmann::json::parse(text).dump(2) == text);

  const CoefficientTable back = table_from_json(nlohmann::json::parse(text));
  CHECK(back.source() == SeriesSource::recurrence);
  CHECK(back.limit() == 200);
  for (std::size_t n = 0; n <= 200; ++n) CHECK(back[n] == q[n]);

  nlohmann::json broken = j;
  broken["values"].erase(3);
  CHECK_THROWS_AS(table_from_json(broken), std::invalid_argument);
  broken = j;
  broken["source"] = "guess";
  CHECK_THROWS_AS(table_from_json(broken), std::invalid_argument);
}

TEST_CASE("scan report json") {
  const GridSpec g = GridSpec::log_spaced(1e-2, 1e-1, 3, 4, 2, 1);
  const ScanReport r = scan_condition_iv(g);
  const nlohmann::json j = to_json(r, 1e-2, 1e-1, 3, 4);
  CHECK(j.at("passed") == r.passed);
  CHECK(j.at("grid").at("points") == r.points);
  CHECK(j.at("worst").at("excess").get<double>() == r.worst.excess);
  CHECK(j.at("certified_c2").get<double>() == r.certified_c2);
}
