#include <doctest.h>

#include "oracles.hpp"
#include "planepart/exact_series.hpp"

using namespace planepart;

TEST_CASE("plane_partition_table known values") {
  const CoefficientTable q = plane_partition_table(10);
  CHECK(q[0] == 1);
  CHECK(q[1] == 1);
  CHECK(q[10] == 500);
  CHECK(q.source() == SeriesSource::recurrence);
  CHECK(plane_partition_table(0).limit() == 0);
}

TEST_CASE("brute-force enumeration") {
  CHECK(brute_force_plane_partitions(1) == 1);
  CHECK(brute_force_plane_partitions(2) == 3);  // "2", "1 1", and 1 over 1
  // Frozen from the enumerator, checked against the recurrence below.
  const std::uint64_t prefix[] = {1, 1, 3, 6, 13, 24, 48};
  for (unsigned n = 0; n <= 6; ++n) CHECK(brute_force_plane_partitions(n) == prefix[n]);
  CHECK(plane_partition_table(6)[6] == 48);
  CHECK(brute_force_plane_partitions(8) == plane_partition_table(8)[8]);
  CHECK_THROWS_AS(brute_force_plane_partitions(16), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_plane_partitions(5, 4), std::invalid_argument);
}

TEST_CASE("generic_euler_recurrence") {
  SUBCASE("sigma_1 weights give ordinary partitions") {
    const WeightTable sigma1 = generalized_weight_table(WeightSpec::ones(), 60);
    const CoefficientTable p = generic_euler_recurrence(sigma1, 60);
    CHECK(p[5] == 7);
    for (unsigned n = 0; n <= 60; ++n) REQUIRE(p[n] == oracle::partitions(n, n));
  }
  SUBCASE("beta_2 weights give q(n)") {
    const SieveTable beta2 = sigma_power_table(2, 10);
    CHECK(generic_euler_recurrence(beta2, 10)[10] == 500);
    const CoefficientTable empty = generic_euler_recurrence(beta2, 0);
    CHECK(empty.limit() == 0);
    CHECK(empty[0] == 1);
  }
  SUBCASE("weights shorter than the requested range are rejected") {
    CHECK_THROWS_AS(generic_euler_recurrence(sigma_power_table(2, 5), 6), std::invalid_argument);
  }
  SUBCASE("a corrupted weight breaks divisibility and is reported") {
    std::vector<BigInt> v(11);
    const SieveTable beta2 = sigma_power_table(2, 10);
    for (std::size_t k = 1; k <= 10; ++k) v[k] = beta2[k];
    v[3] += 1;
    CHECK_THROWS_AS(generic_euler_recurrence(WeightTable(v), 10), ConsistencyError);
  }
}

TEST_CASE("euler_product_coeffs") {
  const CoefficientTable two = euler_product_coeffs(WeightSpec::identity(), 2);
  // (1 - x)^{-1} (1 - x^2)^{-2} = (1 + x + x^2)(1 + 2x^2) + O(x^3)
  CHECK(two[0] == 1);
  CHECK(two[1] == 1);
  CHECK(two[2] == 3);
  CHECK(euler_product_coeffs(WeightSpec::identity(), 0).limit() == 0);
  CHECK(euler_product_coeffs(WeightSpec::ones(), 0)[0] == 1);
  CHECK(euler_product_coeffs(WeightSpec::identity(), 10)[10] == 500);
  CHECK(euler_product_coeffs(WeightSpec::identity(), 10).source() == SeriesSource::product);
}

TEST_CASE("oracle triangle") {
  const CoefficientTable rec = plane_partition_table(300);
  const CoefficientTable prod = euler_product_coeffs(WeightSpec::identity(), 300);
  for (unsigned n = 0; n <= 12; ++n) {
    const BigInt brute = static_cast<unsigned long>(brute_force_plane_partitions(n));
    REQUIRE_MESSAGE(rec[n] == brute, "n=" << n);
    REQUIRE_MESSAGE(prod[n] == brute, "n=" << n);
  }
  for (unsigned n = 0; n <= 300; ++n) REQUIRE_MESSAGE(rec[n] == prod[n], "n=" << n);
}

TEST_CASE("divisibility and monotonicity") {
  constexpr std::size_t N = 2000;
  const SieveTable beta2 = sigma_power_table(2, N);
  const CoefficientTable q = generic_euler_recurrence(beta2, N);
  CHECK(first_divisibility_failure(q, beta2) == 0);
  for (std::size_t n = 1; n < N; ++n) REQUIRE(q[n + 1] > q[n]);

  // A perturbed table is caught.
  std::vector<BigInt> bad(q.coeffs().begin(), q.coeffs().end());
  bad[7] += 1;
  CHECK(first_divisibility_failure(CoefficientTable(bad, SeriesSource::recurrence), beta2) != 0);
}

TEST_CASE("serial and parallel recurrences agree") {
  const CoefficientTable a = plane_partition_table(1500, Execution::serial);
  const CoefficientTable b = plane_partition_table(1500, Execution::parallel);
  for (std::size_t n = 0; n <= 1500; ++n) REQUIRE(a[n] == b[n]);
}

TEST_CASE("coefficient tables must start at 1") {
  CHECK_THROWS_AS(CoefficientTable({BigInt(2)}, SeriesSource::product), std::invalid_argument);
  CHECK_THROWS_AS(CoefficientTable({}, SeriesSource::product), std::invalid_argument);
}
