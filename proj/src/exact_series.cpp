#include "planepart/exact_series.hpp"

#include <stdexcept>
#include <string>

#include "planepart/kernels.hpp"

namespace planepart {

std::string_view to_string(SeriesSource s) {
  switch (s) {
    case SeriesSource::recurrence: return "recurrence";
    case SeriesSource::product: return "product";
    case SeriesSource::brute_force: return "brute_force";
  }
  return "unknown";
}

CoefficientTable::CoefficientTable(std::vector<BigInt> coeffs, SeriesSource source)
    : coeffs_(std::move(coeffs)), source_(source) {
  if (coeffs_.empty() || coeffs_[0] != 1) {
    throw std::invalid_argument("coefficient table must start with r(0) = 1");
  }
}

CoefficientTable generic_euler_recurrence(const WeightTable& weights, std::size_t limit, Execution exec) {
  if (limit > weights.limit()) {
    throw std::invalid_argument("weight table covers 1.." + std::to_string(weights.limit()) +
                                ", recurrence needs 1.." + std::to_string(limit));
  }
  std::vector<BigInt> r(limit + 1);
  r[0] = 1;
  const auto b = weights.storage();
  for (std::size_t n = 1; n <= limit; ++n) {
    std::span<const BigInt> done(r.data(), n);
    BigInt sum = exec == Execution::parallel ? kernels::omp::convolve(done, b, n)
                                             : kernels::serial::convolve(done, b, n);
    if (!mpz_divisible_ui_p(sum.get_mpz_t(), static_cast<unsigned long>(n))) {
      throw ConsistencyError("recurrence sum at n = " + std::to_string(n) + " is not divisible by n");
    }
    mpz_divexact_ui(r[n].get_mpz_t(), sum.get_mpz_t(), static_cast<unsigned long>(n));
  }
  return CoefficientTable(std::move(r), SeriesSource::recurrence);
}

CoefficientTable plane_partition_table(std::size_t limit, Execution exec) {
  const SieveTable beta2 = sigma_power_table(2, limit == 0 ? 1 : limit, exec);
  return generic_euler_recurrence(beta2, limit, exec);
}

CoefficientTable euler_product_coeffs(const WeightSpec& a, std::size_t limit) {
  std::vector<BigInt> poly(limit + 1);
  poly[0] = 1;
  std::vector<BigInt> binom;
  for (std::size_t j = 1; j <= limit; ++j) {
    const BigInt aj = a(j);
    if (aj == 0) continue;
    // binom[m] = C(a_j + m - 1, m), the x^{jm} coefficient of (1 - x^j)^{-a_j}.
    const std::size_t mmax = limit / j;
    binom.assign(mmax + 1, BigInt());
    binom[0] = 1;
    for (std::size_t m = 1; m <= mmax; ++m) {
      binom[m] = binom[m - 1] * (aj + static_cast<unsigned long>(m - 1));
      mpz_divexact_ui(binom[m].get_mpz_t(), binom[m].get_mpz_t(), static_cast<unsigned long>(m));
    }
    // In place, from the top, so poly[n - jm] is still the old value.
    for (std::size_t n = limit; n >= j; --n) {
      BigInt acc = poly[n];
      for (std::size_t m = 1; m * j <= n; ++m) acc += binom[m] * poly[n - m * j];
      poly[n] = std::move(acc);
    }
  }
  return CoefficientTable(std::move(poly), SeriesSource::product);
}

namespace {

// Counts stacks of rows below `above` (each row non-increasing, nonempty,
// dominated entrywise by the row above) whose entries sum to `remaining`.
std::uint64_t count_below(unsigned remaining, const std::vector<unsigned>& above) {
  if (remaining == 0) return 1;
  std::uint64_t total = 0;
  std::vector<unsigned> row;
  row.reserve(above.size());
  // Depth-first over rows: position i may hold 1..min(above[i], row[i-1]).
  auto extend = [&](auto&& self, unsigned used) -> void {
    const std::size_t i = row.size();
    if (i > 0) total += count_below(remaining - used, row);
    if (i == above.size()) return;
    unsigned cap = above[i];
    if (i > 0 && row[i - 1] < cap) cap = row[i - 1];
    for (unsigned v = 1; v <= cap && used + v <= remaining; ++v) {
      row.push_back(v);
      self(self, used + v);
      row.pop_back();
    }
  };
  extend(extend, 0);
  return total;
}

}  // namespace

std::uint64_t brute_force_plane_partitions(unsigned n, unsigned cap) {
  if (n > cap) {
    throw std::invalid_argument("brute-force enumeration refused for n = " + std::to_string(n) +
                                " (cap " + std::to_string(cap) + ")");
  }
  // The first row is bounded only by n: n columns of height n.
  return count_below(n, std::vector<unsigned>(n, n));
}

std::size_t first_divisibility_failure(const CoefficientTable& table, const WeightTable& weights) {
  const std::size_t limit = std::min(table.limit(), weights.limit());
  const auto r = table.coeffs();
  const auto b = weights.storage();
  for (std::size_t n = 1; n <= limit; ++n) {
    BigInt sum = kernels::serial::convolve(r, b, n);
    if (!mpz_divisible_ui_p(sum.get_mpz_t(), static_cast<unsigned long>(n))) return n;
  }
  return 0;
}

}  // namespace planepart
