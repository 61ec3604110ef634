#pragma once

// Data-parallel inner loops. Every kernel has a serial reference in
// namespace `serial` and an OpenMP version in namespace `omp`; the two
// must agree bit for bit regardless of the thread count.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "planepart/bigint.hpp"

namespace planepart::kernels {

/// out[k] += weights[j] for every j | k, 1 <= j, k <= limit.
/// Both spans are indexed 1..limit (element 0 is ignored).
namespace serial {
void divisor_accumulate(std::span<BigInt> out, std::span<const BigInt> weights);
BigInt convolve(std::span<const BigInt> coeffs, std::span<const BigInt> weights, std::size_t n);
}  // namespace serial

namespace omp {
void divisor_accumulate(std::span<BigInt> out, std::span<const BigInt> weights);
/// Fixed-shape reduction: the k-range is cut into blocks of
/// kConvolutionBlock terms independent of the thread count, and block
/// partial sums are combined in block order.
BigInt convolve(std::span<const BigInt> coeffs, std::span<const BigInt> weights, std::size_t n);
inline constexpr std::size_t kConvolutionBlock = 256;
inline constexpr std::size_t kSieveBlock = 4096;
}  // namespace omp

/// Sum_{k=1}^{n} coeffs[n-k] * weights[k]. Shared by both variants for a
/// sub-range [first, last].
void convolve_range(BigInt& acc, std::span<const BigInt> coeffs, std::span<const BigInt> weights,
                    std::size_t n, std::size_t first, std::size_t last);

}  // namespace planepart::kernels
