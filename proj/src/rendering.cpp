#include "planepart/rendering.hpp"

#include <stdexcept>

namespace planepart {

namespace {

using boost::multiprecision::floor;

BigInt round_half_even(const Float& x) {
  Float fl = floor(x);
  Float frac = x - fl;
  BigInt base;
  mpfr_get_z(base.get_mpz_t(), fl.backend().data(), MPFR_RNDN);
  if (frac > Float(0.5) || (frac == Float(0.5) && mpz_odd_p(base.get_mpz_t()))) base += 1;
  return base;
}

BigInt pow10(unsigned k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

}  // namespace

BigInt mantissa_at_exponent(const HPReal& log10_value, long exponent) {
  PrecisionScope scope(log10_value.precision());
  const Float shifted = log10_value.value() - exponent;
  const Float scaled = boost::multiprecision::pow(Float(10), shifted);
  return round_half_even(scaled);
}

Rendered round_significant(const HPReal& log10_value, unsigned digits) {
  if (digits == 0) throw std::invalid_argument("round_significant: need at least one digit");
  PrecisionScope scope(log10_value.precision());
  long exponent = floor(log10_value.value()).convert_to<long>() - static_cast<long>(digits - 1);
  BigInt m = mantissa_at_exponent(log10_value, exponent);
  if (m >= pow10(digits)) {  // 99999.6 -> 100000
    m = mantissa_at_exponent(log10_value, ++exponent);
  }
  return {m, exponent};
}

Rendered round_significant(const BigInt& value, unsigned digits) {
  if (sgn(value) < 0) throw std::invalid_argument("round_significant: negative value");
  const std::string s = value.get_str(10);
  if (s.size() <= digits) return {value, 0};
  long exponent = static_cast<long>(s.size() - digits);
  BigInt lead(s.substr(0, digits), 10);
  const char next = s[digits];
  const bool rest_zero = s.find_first_not_of('0', digits + 1) == std::string::npos;
  if (next > '5' || (next == '5' && (!rest_zero || mpz_odd_p(lead.get_mpz_t())))) lead += 1;
  if (lead == pow10(digits)) {
    lead /= 10;
    ++exponent;
  }
  return {lead, exponent};
}

std::string group_digits(const std::string& digits) {
  std::string out;
  const std::size_t n = digits.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && (n - i) % 3 == 0) out += ' ';
    out += digits[i];
  }
  return out;
}

std::string format_rendered(const Rendered& r) {
  std::string digits = r.mantissa.get_str(10);
  if (r.exponent == 0) return digits;
  if (r.exponent > 0) return group_digits(digits) + " × 10^" + std::to_string(r.exponent);
  const std::size_t frac = static_cast<std::size_t>(-r.exponent);
  if (digits.size() <= frac) digits.insert(0, frac + 1 - digits.size(), '0');
  digits.insert(digits.size() - frac, ".");
  return digits;
}

}  // namespace planepart
