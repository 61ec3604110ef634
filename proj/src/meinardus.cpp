#include "planepart/meinardus.hpp"

#include <stdexcept>

#include "planepart/precision_constants.hpp"

namespace planepart {

namespace {

constexpr unsigned kGuardBits = 32;

HPReal ln_of(std::uint64_t n, unsigned bits) {
  return log(HPReal::from_rational(Rational(BigInt(static_cast<unsigned long>(n))), bits));
}

HPReal ln10(unsigned bits) { return log(HPReal::from_int(10, bits)); }

BigInt factorial(unsigned long k) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

// ln(A Gamma(alpha+1) zeta(alpha+1)); alpha is a positive integer here.
HPReal log_pole_factor(const MeinardusParams& p, unsigned wp) {
  const unsigned long a = p.alpha.get_num().get_ui();
  const Rational exact = p.residue * Rational(factorial(a));
  return log(HPReal::from_rational(exact, wp)) + log(zeta_integer(static_cast<unsigned>(a + 1), wp));
}

HPReal log_c(const MeinardusParams& p, const HPReal& log_pole, unsigned wp) {
  const HPReal two_pi_one_plus_alpha = HPReal::pi(wp) * Rational(2 * (1 + p.alpha));
  const Rational power = (1 - 2 * p.d0) / (2 + 2 * p.alpha);
  return p.d0_prime.rounded_to(wp) - log(two_pi_one_plus_alpha) * Rational(1, 2) + log_pole * power;
}

void require_n(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
}

}  // namespace

void MeinardusParams::validate() const {
  if (sgn(alpha) <= 0) throw std::invalid_argument("alpha must be positive");
  Rational a(alpha);
  a.canonicalize();
  if (a.get_den() != 1) throw std::invalid_argument("non-integer alpha is not supported (Gamma(alpha+1) is exact only for integers)");
  if (sgn(residue) <= 0) throw std::invalid_argument("residue A must be positive");
  if (sgn(c0) <= 0 || c0 >= 1) throw std::invalid_argument("C0 must lie in (0, 1)");
  if (sgn(delta) <= 0 || delta >= Rational(1, 2)) throw std::invalid_argument("delta must lie in (0, 1/2)");
}

MeinardusConstants meinardus_constants(const MeinardusParams& p, unsigned bits) {
  p.validate();
  const unsigned wp = bits + kGuardBits;
  const HPReal log_pole = log_pole_factor(p, wp);
  const HPReal C = exp(log_c(p, log_pole, wp)).rounded_to(bits);
  const Rational K = (p.d0 - 1 - p.alpha / 2) / (p.alpha + 1);
  const Rational first = p.c0 / p.alpha - p.delta / 4;
  const Rational second = Rational(1, 2) - p.delta;
  Rational K1 = p.alpha / (p.alpha + 1) * (first < second ? first : second);
  Rational Kc = K;
  Kc.canonicalize();
  K1.canonicalize();
  return {C, Kc, K1};
}

MeinardusParams plane_partition_params(unsigned bits, const Rational& delta) {
  MeinardusParams p{Rational(2), Rational(1), d_zero(), zeta_prime_minus1(bits), 1 - delta / 2, delta};
  p.validate();
  return p;
}

MeinardusParams ordinary_partition_params(unsigned bits, const Rational& delta) {
  const HPReal two_pi = HPReal::pi(bits) * Rational(2);
  MeinardusParams p{Rational(1), Rational(1), Rational(-1, 2), log(two_pi) * Rational(-1, 2), 1 - delta / 2, delta};
  p.validate();
  return p;
}

HPReal asymptotic_log(const MeinardusParams& p, std::uint64_t n, unsigned bits) {
  p.validate();
  require_n(n);
  const unsigned wp = bits + kGuardBits;
  const HPReal log_pole = log_pole_factor(p, wp);
  const HPReal ln_n = ln_of(n, wp);
  const Rational K = (p.d0 - 1 - p.alpha / 2) / (p.alpha + 1);
  const Rational growth = p.alpha / (p.alpha + 1);
  const HPReal exponent = exp(ln_n * growth) * Rational(1 + 1 / p.alpha) * exp(log_pole * Rational(1 / (p.alpha + 1)));
  return (log_c(p, log_pole, wp) + ln_n * K + exponent).rounded_to(bits);
}

HPReal asymptotic_log10(const MeinardusParams& p, std::uint64_t n, unsigned bits) {
  const unsigned wp = bits + kGuardBits;
  return (asymptotic_log(p, n, wp) / ln10(wp)).rounded_to(bits);
}

HPReal hardy_ramanujan_log(std::uint64_t n, unsigned bits) {
  require_n(n);
  const unsigned wp = bits + kGuardBits;
  const HPReal nn = HPReal::from_rational(Rational(BigInt(static_cast<unsigned long>(n))), wp);
  // pi sqrt(2n/3) - ln 4 - ln(3)/2 - ln n
  const HPReal root = exp(log(nn * Rational(2, 3)) * Rational(1, 2));
  const HPReal value = HPReal::pi(wp) * root - log(HPReal::from_int(4, wp)) -
                       log(HPReal::from_int(3, wp)) * Rational(1, 2) - log(nn);
  return value.rounded_to(bits);
}

AsymptoticValue AsymptoticValue::from_log10(HPReal log10_value) {
  Rendered r = round_significant(log10_value);
  return {std::move(log10_value), std::move(r)};
}

std::string_view to_string(WrightGamma0 g) {
  return g == WrightGamma0::claimed_one ? "one" : "corrected";
}

WrightLeading wright_leading(std::uint64_t n, WrightGamma0 g, unsigned bits) {
  require_n(n);
  const unsigned wp = bits + kGuardBits;
  const HPReal ln_zeta3 = log(zeta3(wp));
  const HPReal ln_n = ln_of(n, wp);
  const HPReal ln_half_n = ln_n - log(HPReal::from_int(2, wp));
  const HPReal exponent = exp(ln_zeta3 * Rational(1, 3)) * Rational(3) * exp(ln_half_n * Rational(2, 3)) +
                          constant_c(wp) * Rational(2);
  const HPReal ln_base = (ln_zeta3 * Rational(7, 36) - log(HPReal::from_int(2, wp)) * Rational(11, 36) -
                          log(HPReal::pi(wp)) * Rational(1, 2) + ln_n * Rational(-25, 36) + exponent)
                             .rounded_to(bits);
  const HPReal ln_gamma0 = g == WrightGamma0::claimed_one
                               ? HPReal(Float(0), Float(0), bits)
                               : -(log(HPReal::from_int(3, wp)) * Rational(1, 2)).rounded_to(bits);
  const HPReal ln_value = ln_base + ln_gamma0;
  HPReal log10 = (ln_value.rounded_to(wp) / ln10(wp)).rounded_to(bits);
  return {g, ln_base, ln_gamma0, ln_value, AsymptoticValue::from_log10(std::move(log10))};
}

}  // namespace planepart
