#pragma once

#include <vector>

#include "planepart/bigint.hpp"
#include "planepart/hp_real.hpp"

namespace planepart {

/// Bernoulli numbers B_0..B_n (B_1 = -1/2), exact.
std::vector<Rational> bernoulli_numbers(unsigned n);

/// zeta(s) for integer s >= 2: direct sum to J terms plus an
/// Euler-Maclaurin tail with a rigorous remainder bound.
/// |result - zeta(s)| <= 2^{-bits+4}.
HPReal zeta_integer(unsigned s, unsigned bits);
HPReal zeta3(unsigned bits);

/// Euler-Mascheroni constant: H_{J-1} - ln J + Euler-Maclaurin correction.
HPReal euler_gamma(unsigned bits);

/// c = int_0^inf y ln y / (e^{2 pi y} - 1) dy by termwise integration of
/// the geometric expansion: c = sum_k (1 - gamma - ln(2 pi k)) / (2 pi k)^2.
HPReal constant_c_series(unsigned bits);

/// The same integral by tanh-sinh quadrature over unit panels of (0, Y]
/// with an exponential tail bound beyond Y. The error bound is the
/// level-to-level difference plus tail and rounding, not a proof.
HPReal constant_c_quadrature(unsigned bits);

/// The series value, after checking that it overlaps the quadrature
/// value (ConsistencyError otherwise). Memoized per precision.
HPReal constant_c(unsigned bits);

/// zeta'(-1) = 2c.
HPReal zeta_prime_minus1(unsigned bits);

/// D(0) = zeta(-1) = -1/12 for D(s) = zeta(s - 1).
Rational d_zero();

}  // namespace planepart
