#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace planepart {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised when two independent computations disagree or an exactness
/// check (e.g. recurrence divisibility) fails. Maps to CLI exit code 2.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string to_decimal(const BigInt& x) { return x.get_str(10); }

inline std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str(10);
}

}  // namespace planepart
