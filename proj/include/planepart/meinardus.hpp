#pragma once

#include <cstdint>
#include <string_view>

#include "planepart/bigint.hpp"
#include "planepart/hp_real.hpp"
#include "planepart/rendering.hpp"

namespace planepart {

/// Analytic data of D(s) = sum a_j j^{-s} entering Meinardus' theorem:
/// a simple pole at s = alpha with residue A, the values D(0), D'(0), the
/// continuation width C0 and the free parameter delta of K1.
struct MeinardusParams {
  Rational alpha;
  Rational residue;
  Rational d0;
  HPReal d0_prime;
  Rational c0;
  Rational delta;

  /// alpha > 0 and integral, A > 0, 0 < C0 < 1, 0 < delta < 1/2.
  void validate() const;
};

struct MeinardusConstants {
  HPReal C;
  Rational K;
  Rational K1;
};

/// C = e^{D'(0)} [2 pi (1 + alpha)]^{-1/2} [A Gamma(alpha+1) zeta(alpha+1)]^{(1-2D(0))/(2+2alpha)},
/// K = (D(0) - 1 - alpha/2) / (alpha + 1),
/// K1 = alpha/(alpha+1) min(C0/alpha - delta/4, 1/2 - delta).
MeinardusConstants meinardus_constants(const MeinardusParams& p, unsigned bits);

inline const Rational kDefaultDelta{1, 100};

/// a_j = j: alpha = 2, A = 1, D(0) = -1/12, D'(0) = 2c, C0 = 1 - delta/2.
MeinardusParams plane_partition_params(unsigned bits, const Rational& delta = kDefaultDelta);

/// a_j = 1: alpha = 1, A = 1, D(0) = -1/2, D'(0) = -ln(2 pi)/2, C0 = 1 - delta/2.
MeinardusParams ordinary_partition_params(unsigned bits, const Rational& delta = kDefaultDelta);

/// Natural log of the main term C n^K exp{n^{alpha/(alpha+1)} (1 + 1/alpha) [A Gamma(alpha+1) zeta(alpha+1)]^{1/(alpha+1)}}.
HPReal asymptotic_log(const MeinardusParams& p, std::uint64_t n, unsigned bits);
HPReal asymptotic_log10(const MeinardusParams& p, std::uint64_t n, unsigned bits);

/// ln of exp(pi sqrt(2n/3)) / (4 sqrt(3) n), coded independently of the
/// generic evaluator.
HPReal hardy_ramanujan_log(std::uint64_t n, unsigned bits);

/// A positive value kept as its base-10 logarithm, with its 5-digit
/// rendering.
struct AsymptoticValue {
  HPReal log10_value;
  Rendered rendered;

  static AsymptoticValue from_log10(HPReal log10_value);
  std::string text() const { return format_rendered(rendered); }
};

enum class WrightGamma0 { claimed_one, corrected_inv_sqrt3 };

std::string_view to_string(WrightGamma0 g);

/// Leading term of Wright's formula,
///   gamma0 zeta(3)^{7/36} 2^{-11/36} pi^{-1/2} n^{-25/36} exp{3 zeta(3)^{1/3} (n/2)^{2/3} + 2c},
/// in log space. ln_base excludes ln gamma0, so that
/// ln_value = ln_base + ln_gamma0 and the two gamma0 choices share ln_base.
struct WrightLeading {
  WrightGamma0 gamma0;
  HPReal ln_base;
  HPReal ln_gamma0;
  HPReal ln_value;
  AsymptoticValue value;
};

WrightLeading wright_leading(std::uint64_t n, WrightGamma0 g, unsigned bits);

}  // namespace planepart
