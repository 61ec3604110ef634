#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "planepart/bigint.hpp"
#include "planepart/execution.hpp"

namespace planepart {

/// Exact values b(1..limit), indexed from 1. Immutable once built.
class WeightTable {
 public:
  explicit WeightTable(std::vector<BigInt> values_one_based);

  std::size_t limit() const { return values_.size() - 1; }
  const BigInt& operator[](std::size_t k) const { return values_.at(k); }
  /// Full storage including the unused slot 0, for kernels.
  std::span<const BigInt> storage() const { return values_; }

 private:
  std::vector<BigInt> values_;
};

/// beta_r(k) = sum of d^r over the positive divisors d of k.
class SieveTable : public WeightTable {
 public:
  SieveTable(unsigned exponent, std::vector<BigInt> values_one_based)
      : WeightTable(std::move(values_one_based)), exponent_(exponent) {}
  unsigned exponent() const { return exponent_; }

 private:
  unsigned exponent_;
};

/// The exponent sequence a_j of a product prod_j (1 - x^j)^{-a_j}.
/// Values must be non-negative integers.
class WeightSpec {
 public:
  using Function = std::function<BigInt(std::uint64_t)>;

  /// a_j = j (plane partitions).
  static WeightSpec identity();
  /// a_j = 1 (ordinary partitions).
  static WeightSpec ones();
  static WeightSpec custom(Function f);

  /// Throws std::invalid_argument if the value is negative.
  BigInt operator()(std::uint64_t j) const;

 private:
  explicit WeightSpec(Function f) : f_(std::move(f)) {}
  Function f_;
};

/// Throws std::invalid_argument when limit == 0.
SieveTable sigma_power_table(unsigned exponent, std::size_t limit,
                             Execution exec = Execution::parallel);

/// b(k) = sum_{j | k} a_j * j; the logarithmic-derivative weights of
/// prod_j (1 - x^j)^{-a_j}.
WeightTable generalized_weight_table(const WeightSpec& a, std::size_t limit,
                                     Execution exec = Execution::parallel);

}  // namespace planepart
