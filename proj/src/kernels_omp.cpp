#include <omp.h>

#include <algorithm>
#include <cassert>

#include "planepart/kernels.hpp"

namespace planepart::kernels::omp {

void divisor_accumulate(std::span<BigInt> out, std::span<const BigInt> weights) {
  assert(out.size() == weights.size());
  const std::size_t limit = out.size() - 1;
  const std::size_t blocks = (limit + kSieveBlock - 1) / kSieveBlock;
  // Each block of k values is owned by exactly one iteration.
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t lo = b * kSieveBlock + 1;
    const std::size_t hi = std::min(limit, lo + kSieveBlock - 1);
    for (std::size_t j = 1; j <= hi; ++j) {
      std::size_t k = ((lo + j - 1) / j) * j;
      for (; k <= hi; k += j) out[k] += weights[j];
    }
  }
}

BigInt convolve(std::span<const BigInt> coeffs, std::span<const BigInt> weights, std::size_t n) {
  if (n <= 2 * kConvolutionBlock) return serial::convolve(coeffs, weights, n);
  const std::size_t blocks = (n + kConvolutionBlock - 1) / kConvolutionBlock;
  std::vector<BigInt> partial(blocks);
#pragma omp parallel for schedule(static)
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t first = b * kConvolutionBlock + 1;
    const std::size_t last = std::min(n, first + kConvolutionBlock - 1);
    convolve_range(partial[b], coeffs, weights, n, first, last);
  }
  BigInt acc = 0;
  for (const auto& p : partial) acc += p;
  return acc;
}

}  // namespace planepart::kernels::omp
