#pragma once

#include <string>

#include "planepart/bigint.hpp"
#include "planepart/hp_real.hpp"

namespace planepart {

inline constexpr unsigned kDisplayDigits = 5;

/// mantissa * 10^exponent.
struct Rendered {
  BigInt mantissa;
  long exponent = 0;

  friend bool operator==(const Rendered&, const Rendered&) = default;
};

/// Leading `digits` significant digits of a positive value given by its
/// base-10 logarithm, rounded half to even.
Rendered round_significant(const HPReal& log10_value, unsigned digits = kDisplayDigits);

/// Mantissa of a positive value at a fixed decimal exponent (rounded half
/// to even); used to line up a table row on a shared exponent.
BigInt mantissa_at_exponent(const HPReal& log10_value, long exponent);

/// Exact integers with at most `digits` digits are returned unchanged
/// (exponent 0); longer ones are rounded half to even to `digits` digits.
Rendered round_significant(const BigInt& value, unsigned digits = kDisplayDigits);

/// Text rendering: "500", "910.69", "0.52579", "59 876 × 10^12".
std::string format_rendered(const Rendered& r);

/// Groups decimal digits in threes from the right with single spaces.
std::string group_digits(const std::string& digits);

}  // namespace planepart
