#include "planepart/divisor_sieve.hpp"

#include <stdexcept>
#include <string>

#include "planepart/kernels.hpp"

namespace planepart {

WeightTable::WeightTable(std::vector<BigInt> values_one_based) : values_(std::move(values_one_based)) {
  if (values_.empty()) throw std::invalid_argument("weight table needs slot 0");
}

WeightSpec WeightSpec::identity() {
  return WeightSpec([](std::uint64_t j) { return BigInt(static_cast<unsigned long>(j)); });
}

WeightSpec WeightSpec::ones() {
  return WeightSpec([](std::uint64_t) { return BigInt(1); });
}

WeightSpec WeightSpec::custom(Function f) {
  if (!f) throw std::invalid_argument("empty weight function");
  return WeightSpec(std::move(f));
}

BigInt WeightSpec::operator()(std::uint64_t j) const {
  BigInt a = f_(j);
  if (sgn(a) < 0) {
    throw std::invalid_argument("weight a_" + std::to_string(j) + " = " + a.get_str() +
                                " is negative; exponents must be non-negative");
  }
  return a;
}

namespace {

std::vector<BigInt> accumulate_over_divisors(std::vector<BigInt> per_divisor, Execution exec) {
  std::vector<BigInt> out(per_divisor.size());
  if (exec == Execution::parallel) {
    kernels::omp::divisor_accumulate(out, per_divisor);
  } else {
    kernels::serial::divisor_accumulate(out, per_divisor);
  }
  return out;
}

}  // namespace

SieveTable sigma_power_table(unsigned exponent, std::size_t limit, Execution exec) {
  if (limit == 0) throw std::invalid_argument("sigma_power_table: empty range (limit must be >= 1)");
  std::vector<BigInt> powers(limit + 1);
  for (std::size_t j = 1; j <= limit; ++j) {
    mpz_ui_pow_ui(powers[j].get_mpz_t(), static_cast<unsigned long>(j), exponent);
  }
  return SieveTable(exponent, accumulate_over_divisors(std::move(powers), exec));
}

WeightTable generalized_weight_table(const WeightSpec& a, std::size_t limit, Execution exec) {
  if (limit == 0) throw std::invalid_argument("generalized_weight_table: empty range (limit must be >= 1)");
  std::vector<BigInt> terms(limit + 1);
  for (std::size_t j = 1; j <= limit; ++j) terms[j] = a(j) * static_cast<unsigned long>(j);
  return WeightTable(accumulate_over_divisors(std::move(terms), exec));
}

}  // namespace planepart
