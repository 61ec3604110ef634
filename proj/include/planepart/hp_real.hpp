#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "planepart/bigint.hpp"

namespace planepart {

using Float = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;

inline constexpr unsigned kMinPrecision = 64;
inline constexpr unsigned kDefaultPrecision = 256;

/// Decimal digits that give at least `bits` bits of mantissa.
unsigned digits_for_bits(unsigned bits);

/// Sets the default precision of newly created Floats on this thread for
/// the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_digits_;
};

Float to_float(const Rational& q, unsigned bits);
/// Copy of x correctly rounded to `bits`.
Float at_bits(const Float& x, unsigned bits);
/// 2^e at the given precision.
Float exp2_float(long e, unsigned bits);

/// A real number known to lie in [value - error_bound, value + error_bound].
/// Every operation below widens the bound by the propagated input error
/// plus the rounding error of the operation itself.
class HPReal {
 public:
  HPReal(Float value, Float error_bound, unsigned bits);

  static HPReal from_rational(const Rational& q, unsigned bits);
  static HPReal from_int(long v, unsigned bits) { return from_rational(Rational(v), bits); }
  static HPReal pi(unsigned bits);

  const Float& value() const { return value_; }
  const Float& error_bound() const { return error_; }
  unsigned precision() const { return bits_; }
  double to_double() const { return value_.convert_to<double>(); }

  bool contains(const Float& x) const;
  /// Re-round to `bits` (may lose or, nominally, gain precision).
  HPReal rounded_to(unsigned bits) const;
  /// Widen the error bound by `extra`.
  HPReal widened(const Float& extra) const;

  /// Fixed-point decimal with `digits` digits after the point.
  std::string fixed(int digits) const;
  /// "<value> +- <bound>" in scientific form.
  std::string describe(int digits) const;

  HPReal operator-() const { return HPReal(-value_, error_, bits_); }

 private:
  Float value_;
  Float error_;
  unsigned bits_;
};

HPReal operator+(const HPReal& a, const HPReal& b);
HPReal operator-(const HPReal& a, const HPReal& b);
HPReal operator*(const HPReal& a, const HPReal& b);
HPReal operator/(const HPReal& a, const HPReal& b);
HPReal operator*(const HPReal& a, const Rational& q);
inline HPReal operator*(const Rational& q, const HPReal& a) { return a * q; }

HPReal exp(const HPReal& a);
/// Throws std::domain_error unless the whole interval is positive.
HPReal log(const HPReal& a);
/// a^q = exp(q log a) for a > 0.
HPReal pow(const HPReal& a, const Rational& q);

/// True if the two intervals intersect.
bool overlaps(const HPReal& a, const HPReal& b);

}  // namespace planepart
