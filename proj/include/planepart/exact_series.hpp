#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "planepart/bigint.hpp"
#include "planepart/divisor_sieve.hpp"
#include "planepart/execution.hpp"

namespace planepart {

enum class SeriesSource { recurrence, product, brute_force };

std::string_view to_string(SeriesSource s);

/// Exact coefficients r(0..limit) of a power series with r(0) = 1.
class CoefficientTable {
 public:
  CoefficientTable(std::vector<BigInt> coeffs, SeriesSource source);

  std::size_t limit() const { return coeffs_.size() - 1; }
  const BigInt& operator[](std::size_t n) const { return coeffs_.at(n); }
  std::span<const BigInt> coeffs() const { return coeffs_; }
  SeriesSource source() const { return source_; }

 private:
  std::vector<BigInt> coeffs_;
  SeriesSource source_;
};

/// r(0) = 1, n r(n) = sum_{k=1}^{n} r(n-k) b(k). The division is checked
/// to be exact; a non-zero remainder throws ConsistencyError.
CoefficientTable generic_euler_recurrence(const WeightTable& weights, std::size_t limit,
                                          Execution exec = Execution::parallel);

/// q(0..limit) via the beta_2 recurrence.
CoefficientTable plane_partition_table(std::size_t limit, Execution exec = Execution::parallel);

/// Coefficients of prod_{j=1}^{limit} (1 - x^j)^{-a_j} mod x^{limit+1}, by
/// repeated multiplication with the binomial series of each factor.
CoefficientTable euler_product_coeffs(const WeightSpec& a, std::size_t limit);

inline constexpr unsigned kBruteForceCap = 15;

/// Counts plane partitions of n by direct enumeration. Refuses n > cap.
std::uint64_t brute_force_plane_partitions(unsigned n, unsigned cap = kBruteForceCap);

/// Index of the first n in 1..limit where sum_{k=1}^n r(n-k) b(k) is not
/// divisible by n, or 0 if every sum divides. Recomputes the sums with the
/// serial kernel.
std::size_t first_divisibility_failure(const CoefficientTable& table, const WeightTable& weights);

}  // namespace planepart
