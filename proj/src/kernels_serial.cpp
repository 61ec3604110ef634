#include "planepart/kernels.hpp"

#include <cassert>

namespace planepart::kernels {

void convolve_range(BigInt& acc, std::span<const BigInt> coeffs, std::span<const BigInt> weights,
                    std::size_t n, std::size_t first, std::size_t last) {
  for (std::size_t k = first; k <= last; ++k) {
    const BigInt& w = weights[k];
    if (w.fits_ulong_p()) {
      mpz_addmul_ui(acc.get_mpz_t(), coeffs[n - k].get_mpz_t(), w.get_ui());
    } else {
      mpz_addmul(acc.get_mpz_t(), coeffs[n - k].get_mpz_t(), w.get_mpz_t());
    }
  }
}

namespace serial {

void divisor_accumulate(std::span<BigInt> out, std::span<const BigInt> weights) {
  assert(out.size() == weights.size());
  const std::size_t limit = out.size() - 1;
  for (std::size_t j = 1; j <= limit; ++j) {
    for (std::size_t k = j; k <= limit; k += j) out[k] += weights[j];
  }
}

BigInt convolve(std::span<const BigInt> coeffs, std::span<const BigInt> weights, std::size_t n) {
  BigInt acc = 0;
  if (n > 0) convolve_range(acc, coeffs, weights, n, 1, n);
  return acc;
}

}  // namespace serial
}  // namespace planepart::kernels
