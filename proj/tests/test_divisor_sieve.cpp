#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "planepart/divisor_sieve.hpp"

using namespace planepart;

TEST_CASE("sigma_power_table small values") {
  CHECK(sigma_power_table(2, 1)[1] == 1);
  CHECK(sigma_power_table(2, 6)[6] == 50);  // 1 + 4 + 9 + 36
  CHECK(sigma_power_table(1, 4)[4] == 7);   // 1 + 2 + 4
  CHECK(sigma_power_table(0, 12)[12] == 6);  // number of divisors
  CHECK(sigma_power_table(2, 6).exponent() == 2);
}

TEST_CASE("sigma_power_table rejects an empty range") {
  CHECK_THROWS_AS(sigma_power_table(2, 0), std::invalid_argument);
}

TEST_CASE("sigma_power_table matches trial division for k <= 1000") {
  for (unsigned r : {0u, 1u, 2u, 3u}) {
    const SieveTable t = sigma_power_table(r, 1000);
    for (std::uint64_t k = 1; k <= 1000; ++k) {
      REQUIRE_MESSAGE(t[k] == oracle::divisor_power_sum(k, r), "r=" << r << " k=" << k);
    }
  }
}

TEST_CASE("sigma_power_table lower bounds and primes") {
  const SieveTable t = sigma_power_table(2, 2000);
  CHECK(t[1] == 1);
  for (std::uint64_t k = 2; k <= 2000; ++k) {
    CHECK(t[k] >= 1 + BigInt(static_cast<unsigned long>(k * k)));
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= k; ++d) prime = prime && (k % d != 0);
    if (prime) CHECK(t[k] == 1 + BigInt(static_cast<unsigned long>(k * k)));
  }
}

TEST_CASE("sigma_power_table is multiplicative on coprime pairs") {
  constexpr std::size_t N = 20000;
  const SieveTable t = sigma_power_table(2, N);
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<std::uint64_t> dist(1, 400);
  int checked = 0;
  while (checked < 500) {
    const std::uint64_t m = dist(rng), n = dist(rng);
    if (std::gcd(m, n) != 1 || m * n > N) continue;
    CHECK(t[m * n] == t[m] * t[n]);
    ++checked;
  }
}

TEST_CASE("generalized_weight_table") {
  CHECK(generalized_weight_table(WeightSpec::identity(), 6)[6] == 50);
  CHECK(generalized_weight_table(WeightSpec::ones(), 6)[6] == 12);
  CHECK(generalized_weight_table(WeightSpec::identity(), 1)[1] == 1);

  SUBCASE("a_j = j specialises to beta_2 for N = 10^4") {
    const SieveTable beta2 = sigma_power_table(2, 10000);
    const WeightTable b = generalized_weight_table(WeightSpec::identity(), 10000);
    for (std::size_t k = 1; k <= 10000; ++k) REQUIRE(b[k] == beta2[k]);
  }
  SUBCASE("custom weights") {
    // a_j = 1 for odd j, 0 otherwise: b(k) = sum of odd divisors of k.
    auto odd = WeightSpec::custom([](std::uint64_t j) { return BigInt(j % 2 == 1 ? 1 : 0); });
    CHECK(generalized_weight_table(odd, 12)[12] == 1 + 3);
  }
  SUBCASE("negative weights are rejected") {
    auto bad = WeightSpec::custom([](std::uint64_t j) { return BigInt(j == 3 ? -1 : 1); });
    CHECK_THROWS_AS(generalized_weight_table(bad, 10), std::invalid_argument);
  }
}

TEST_CASE("serial and parallel sieves agree") {
  const SieveTable a = sigma_power_table(2, 30000, Execution::serial);
  const SieveTable b = sigma_power_table(2, 30000, Execution::parallel);
  for (std::size_t k = 1; k <= 30000; ++k) REQUIRE(a[k] == b[k]);
}
