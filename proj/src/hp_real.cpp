#include "planepart/hp_real.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace planepart {

using boost::multiprecision::abs;

unsigned digits_for_bits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

PrecisionScope::PrecisionScope(unsigned bits) : saved_digits_(Float::default_precision()) {
  Float::default_precision(digits_for_bits(bits));
}

PrecisionScope::~PrecisionScope() { Float::default_precision(saved_digits_); }

Float to_float(const Rational& q, unsigned bits) {
  PrecisionScope scope(bits);
  Float r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Float at_bits(const Float& x, unsigned bits) {
  PrecisionScope scope(bits);
  Float r;
  mpfr_set(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

Float exp2_float(long e, unsigned bits) {
  PrecisionScope scope(bits);
  Float r(1);
  mpfr_mul_2si(r.backend().data(), r.backend().data(), e, MPFR_RNDN);
  return r;
}

namespace {

// Bound on the rounding error of a correctly rounded result r at `bits`.
Float ulp_bound(const Float& r, unsigned bits) {
  return abs(r) * exp2_float(1 - static_cast<long>(bits), bits);
}

unsigned joint_bits(const HPReal& a, const HPReal& b) { return std::min(a.precision(), b.precision()); }

}  // namespace

HPReal::HPReal(Float value, Float error_bound, unsigned bits)
    : value_(std::move(value)), error_(std::move(error_bound)), bits_(bits) {
  if (bits_ < 2) throw std::invalid_argument("HPReal precision too small");
  if (error_ < 0 || boost::multiprecision::isnan(error_) || boost::multiprecision::isinf(error_)) {
    throw std::invalid_argument("HPReal error bound must be finite and non-negative");
  }
}

HPReal HPReal::from_rational(const Rational& q, unsigned bits) {
  PrecisionScope scope(bits);
  Float r = to_float(q, bits);
  if (q.get_den() == 1 && mpz_sizeinbase(q.get_num_mpz_t(), 2) <= bits) return HPReal(r, Float(0), bits);
  return HPReal(r, ulp_bound(r, bits), bits);
}

HPReal HPReal::pi(unsigned bits) {
  PrecisionScope scope(bits);
  Float p;
  mpfr_const_pi(p.backend().data(), MPFR_RNDN);
  return HPReal(p, ulp_bound(p, bits), bits);
}

bool HPReal::contains(const Float& x) const {
  PrecisionScope scope(std::max<unsigned>(bits_, 64) * 4);
  Float d;
  mpfr_sub(d.backend().data(), x.backend().data(), value_.backend().data(), MPFR_RNDN);
  return abs(d) <= error_;
}

HPReal HPReal::rounded_to(unsigned bits) const {
  PrecisionScope scope(bits);
  Float r = at_bits(value_, bits);
  // error + |value - r|, every step rounded upward so the bound stays valid.
  Float e;
  {
    PrecisionScope wide(std::max(bits, bits_) + 64);
    Float shift;
    mpfr_sub(shift.backend().data(), value_.backend().data(), r.backend().data(), MPFR_RNDU);
    mpfr_abs(shift.backend().data(), shift.backend().data(), MPFR_RNDU);
    mpfr_add(shift.backend().data(), shift.backend().data(), error_.backend().data(), MPFR_RNDU);
    mpfr_set_prec(e.backend().data(), bits);
    mpfr_set(e.backend().data(), shift.backend().data(), MPFR_RNDU);
  }
  return HPReal(r, e, bits);
}

HPReal HPReal::widened(const Float& extra) const {
  PrecisionScope scope(bits_);
  return HPReal(value_, error_ + abs(extra), bits_);
}

std::string HPReal::fixed(int digits) const { return value_.str(digits, std::ios::fixed); }

std::string HPReal::describe(int digits) const {
  std::ostringstream os;
  os << value_.str(digits, std::ios::scientific) << " +- " << error_.str(3, std::ios::scientific);
  return os.str();
}

HPReal operator+(const HPReal& a, const HPReal& b) {
  const unsigned bits = joint_bits(a, b);
  PrecisionScope scope(bits);
  Float r = a.value() + b.value();
  return HPReal(r, a.error_bound() + b.error_bound() + ulp_bound(r, bits), bits);
}

HPReal operator-(const HPReal& a, const HPReal& b) { return a + (-b); }

HPReal operator*(const HPReal& a, const HPReal& b) {
  const unsigned bits = joint_bits(a, b);
  PrecisionScope scope(bits);
  Float r = a.value() * b.value();
  Float e = abs(a.value()) * b.error_bound() + abs(b.value()) * a.error_bound() +
            a.error_bound() * b.error_bound();
  return HPReal(r, e + ulp_bound(r, bits), bits);
}

HPReal operator/(const HPReal& a, const HPReal& b) {
  const unsigned bits = joint_bits(a, b);
  PrecisionScope scope(bits);
  Float bmag = abs(b.value());
  if (bmag <= b.error_bound()) throw std::domain_error("HPReal division: divisor interval contains 0");
  Float r = a.value() / b.value();
  // |a/b - a'/b'| <= (|a| eb + |b| ea) / (|b| (|b| - eb))
  Float e = (abs(a.value()) * b.error_bound() + bmag * a.error_bound()) / (bmag * (bmag - b.error_bound()));
  return HPReal(r, e + ulp_bound(r, bits), bits);
}

HPReal operator*(const HPReal& a, const Rational& q) {
  return a * HPReal::from_rational(q, a.precision());
}

HPReal exp(const HPReal& a) {
  const unsigned bits = a.precision();
  PrecisionScope scope(bits);
  Float r = boost::multiprecision::exp(a.value());
  // exp(x + e) - exp(x) <= exp(x) expm1(e)
  Float e = r * boost::multiprecision::expm1(a.error_bound());
  return HPReal(r, e * Float(1.0000001) + ulp_bound(r, bits), bits);
}

HPReal log(const HPReal& a) {
  const unsigned bits = a.precision();
  PrecisionScope scope(bits);
  if (a.value() <= a.error_bound()) throw std::domain_error("HPReal log: argument interval not positive");
  Float r = boost::multiprecision::log(a.value());
  // |log(x) - log(x - e)| = -log1p(-e/x)
  Float e = -boost::multiprecision::log1p(-a.error_bound() / a.value());
  return HPReal(r, e * Float(1.0000001) + ulp_bound(r, bits), bits);
}

HPReal pow(const HPReal& a, const Rational& q) { return exp(log(a) * q); }

bool overlaps(const HPReal& a, const HPReal& b) {
  PrecisionScope scope(std::max(a.precision(), b.precision()) * 4);
  Float d;
  mpfr_sub(d.backend().data(), a.value().backend().data(), b.value().backend().data(), MPFR_RNDN);
  return abs(d) <= a.error_bound() + b.error_bound();
}

}  // namespace planepart
