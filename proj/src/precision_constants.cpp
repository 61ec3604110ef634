#include "planepart/precision_constants.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace planepart {

namespace {

using boost::multiprecision::abs;

constexpr unsigned kGuardBits = 32;

void require_precision(unsigned bits) {
  if (bits < kMinPrecision) {
    throw std::invalid_argument("precision must be at least " + std::to_string(kMinPrecision) + " bits");
  }
}

Float const_pi() {
  Float p;
  mpfr_const_pi(p.backend().data(), MPFR_RNDN);
  return p;
}

// Number of terms summed directly before the tail takes over.
unsigned direct_terms(unsigned bits) { return std::max(64u, bits); }

struct Tail {
  Float value;
  Float bound;
};

// -sum_{i=1}^{m} B_{2i}/(2i)! f^{(2i-1)}(J), stopping at the first m whose
// remainder bound 2 zeta(2m) (2pi)^{-2m} |f^{(2m-1)}(J)| is below target.
// Valid when f^{(2m)} keeps one sign on [J, inf) and f^{(2m-1)} -> 0; the
// callers guarantee this. Runs at the current default precision.
Tail euler_maclaurin_correction(const std::function<Float(unsigned)>& odd_derivative, const Float& target) {
  constexpr unsigned kMaxTerms = 400;
  std::vector<Rational> bern;
  const Float two_pi_sq = (2 * const_pi()) * (2 * const_pi());
  Float factorial = 1;
  Float scale = 1;
  Tail t{0, 0};
  for (unsigned i = 1; i <= kMaxTerms; ++i) {
    factorial *= (2 * i - 1) * (2 * i);
    scale /= two_pi_sq;
    const Float d = odd_derivative(2 * i - 1);
    if (bern.size() <= 2 * i) bern = bernoulli_numbers(2 * i + 64);
    Float b;
    mpfr_set_q(b.backend().data(), bern[2 * i].get_mpq_t(), MPFR_RNDN);
    t.value -= b / factorial * d;
    t.bound = 4 * scale * abs(d);
    if (t.bound <= target) return t;
  }
  throw ConsistencyError("Euler-Maclaurin tail did not reach the requested accuracy");
}

// Accumulated rounding from summing `terms` values of size <= magnitude.
Float summation_rounding(unsigned terms, const Float& magnitude, unsigned working_bits) {
  return Float(terms) * magnitude * exp2_float(1 - static_cast<long>(working_bits), working_bits);
}

}  // namespace

std::vector<Rational> bernoulli_numbers(unsigned n) {
  static std::mutex mutex;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard<std::mutex> lock(mutex);
  while (cache.size() <= n) {
    // sum_{k=0}^{m} C(m+1, k) B_k = 0
    const unsigned m = static_cast<unsigned>(cache.size());
    Rational acc = 0;
    BigInt binom = 1;
    for (unsigned k = 0; k < m; ++k) {
      if (sgn(cache[k]) != 0) acc += Rational(binom) * cache[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    Rational bm = -acc / Rational(m + 1);
    bm.canonicalize();
    cache.push_back(bm);
  }
  return {cache.begin(), cache.begin() + n + 1};
}

HPReal zeta_integer(unsigned s, unsigned bits) {
  require_precision(bits);
  if (s < 2) throw std::domain_error("zeta_integer: s must be >= 2 (pole at s = 1)");
  const unsigned wp = bits + kGuardBits;
  PrecisionScope scope(wp);
  const unsigned J = direct_terms(bits);
  Float sum = 0;
  for (unsigned j = J - 1; j >= 1; --j) sum += 1 / boost::multiprecision::pow(Float(j), s);
  const Float fJ = 1 / boost::multiprecision::pow(Float(J), s);
  // sum_{j >= J} j^{-s} = J^{1-s}/(s-1) + f(J)/2 + correction
  Float tail = Float(J) * fJ / (s - 1) + fJ / 2;
  // f^{(n)}(J) = (-1)^n s(s+1)...(s+n-1) J^{-s-n}
  auto derivative = [&](unsigned n) {
    Float v = fJ;
    for (unsigned i = 0; i < n; ++i) v *= -Float(s + i) / J;
    return v;
  };
  const Float target = exp2_float(-static_cast<long>(bits) - 8, wp);
  Tail em = euler_maclaurin_correction(derivative, target);
  Float value = sum + tail + em.value;
  Float err = em.bound + summation_rounding(J + 200, Float(1), wp);
  return HPReal(value, err, wp).rounded_to(bits);
}

HPReal zeta3(unsigned bits) { return zeta_integer(3, bits); }

HPReal euler_gamma(unsigned bits) {
  require_precision(bits);
  const unsigned wp = bits + kGuardBits;
  PrecisionScope scope(wp);
  const unsigned J = direct_terms(bits);
  Float harmonic = 0;
  for (unsigned j = J - 1; j >= 1; --j) harmonic += Float(1) / j;
  // f(t) = 1/t: f^{(n)}(J) = (-1)^n n! J^{-n-1}
  auto derivative = [&](unsigned n) {
    Float v = Float(1) / J;
    for (unsigned i = 1; i <= n; ++i) v *= -Float(i) / J;
    return v;
  };
  const Float target = exp2_float(-static_cast<long>(bits) - 8, wp);
  Tail em = euler_maclaurin_correction(derivative, target);
  Float value = harmonic - boost::multiprecision::log(Float(J)) + Float(1) / (2 * J) + em.value;
  Float err = em.bound + summation_rounding(J + 200, Float(8), wp);
  return HPReal(value, err, wp).rounded_to(bits);
}

namespace {

// S1 = sum_{k >= 1} ln k / k^2 (= -zeta'(2)).
HPReal log_over_square_sum(unsigned wp, unsigned bits) {
  PrecisionScope scope(wp);
  const unsigned J = direct_terms(bits);
  Float sum = 0;
  for (unsigned k = J - 1; k >= 2; --k) sum += boost::multiprecision::log(Float(k)) / (Float(k) * k);
  const Float lnJ = boost::multiprecision::log(Float(J));
  // f(t) = ln t / t^2: f^{(n)}(t) = (-1)^n (n+1)! t^{-2-n} (ln t - H_{n+1} + 1)
  Float tail = (lnJ + 1) / J + lnJ / (2 * Float(J) * J);
  auto derivative = [&](unsigned n) {
    // The remainder needs f^{(n+1)} of one sign on [J, inf): ln J > H_{n+2} - 1.
    Float h = 0;
    for (unsigned i = 1; i <= n + 2; ++i) h += Float(1) / i;
    if (lnJ <= h - 1) throw ConsistencyError("Euler-Maclaurin sign condition fails for ln t / t^2");
    h -= Float(1) / (n + 2);
    Float v = (lnJ - h + 1) / (Float(J) * J);
    for (unsigned i = 1; i <= n; ++i) v *= -Float(i + 1) / J;
    return v;
  };
  const Float target = exp2_float(-static_cast<long>(bits) - 8, wp);
  Tail em = euler_maclaurin_correction(derivative, target);
  Float err = em.bound + summation_rounding(J + 200, Float(1), wp);
  return HPReal(sum + tail + em.value, err, wp);
}

}  // namespace

HPReal constant_c_series(unsigned bits) {
  require_precision(bits);
  const unsigned wp = bits + kGuardBits;
  const HPReal gamma = euler_gamma(wp);
  const HPReal pi = HPReal::pi(wp);
  const HPReal two_pi = pi * Rational(2);
  // sum_k (a - ln k)/(2 pi k)^2 = (a zeta(2) - S1) / (2 pi)^2, a = 1 - gamma - ln 2 pi
  const HPReal a = HPReal::from_int(1, wp) - gamma - log(two_pi);
  const HPReal c = (a * zeta_integer(2, wp) - log_over_square_sum(wp + kGuardBits, wp)) / (two_pi * two_pi);
  return c.rounded_to(bits);
}

namespace {

// tanh-sinh on [lo, lo + 1] for f(y) = y ln y / (e^{2 pi y} - 1).
struct PanelResult {
  Float value;
  Float error;
};

Float c_integrand(const Float& y, const Float& two_pi) {
  if (y == 0) return Float(0);
  return y * boost::multiprecision::log(y) / boost::multiprecision::expm1(two_pi * y);
}

PanelResult tanh_sinh_panel(const Float& lo, const Float& width, unsigned wp, unsigned bits) {
  const Float pi = const_pi();
  const Float two_pi = 2 * pi;
  const Float half_pi = pi / 2;
  // Beyond t_max the weights drop below 2^{-wp-20}.
  const double t_max = std::asinh((wp + 40) * std::log(2.0) / M_PI) + 0.5;
  const Float target = exp2_float(-static_cast<long>(bits) - 4, wp);
  constexpr int kMaxLevel = 14;

  // Sum of w(t) [f(x_left) + f(x_right)] over the given t values.
  auto node_pair = [&](const Float& t) {
    const Float u = half_pi * boost::multiprecision::sinh(t);
    const Float e2u = boost::multiprecision::exp(-2 * u);   // e^{-2u}
    const Float cosh_u = boost::multiprecision::cosh(u);
    const Float w = width / 2 * half_pi * boost::multiprecision::cosh(t) / (cosh_u * cosh_u);
    // distance of nodes from the panel ends: width * e^{-2u} / (1 + e^{-2u})
    const Float d = width * e2u / (1 + e2u);
    return w * (c_integrand(lo + d, two_pi) + c_integrand(lo + width - d, two_pi));
  };

  Float h = 1;
  Float sum = node_pair(Float(0)) / 2;  // t = 0 counted once
  for (Float t = h; t <= t_max; t += h) sum += node_pair(t);
  Float estimate = h * sum;
  unsigned nodes = static_cast<unsigned>(2 * t_max / 1.0) + 1;
  for (int level = 1; level <= kMaxLevel; ++level) {
    h /= 2;
    for (Float t = h; t <= t_max; t += 2 * h) sum += node_pair(t);
    nodes *= 2;
    const Float next = h * sum;
    const Float diff = abs(next - estimate);
    estimate = next;
    if (level >= 3 && diff <= target) {
      return {estimate, diff + summation_rounding(nodes, Float(1), wp)};
    }
  }
  throw ConsistencyError("tanh-sinh quadrature did not converge");
}

}  // namespace

HPReal constant_c_quadrature(unsigned bits) {
  require_precision(bits);
  const unsigned wp = bits + kGuardBits;
  PrecisionScope scope(wp);
  const Float two_pi = 2 * const_pi();
  // For y >= Y: |y ln y / (e^{2 pi y} - 1)| <= 2 y^2 e^{-2 pi y}, whose
  // integral is 2 e^{-aY} (Y^2/a + 2Y/a^2 + 2/a^3), a = 2 pi.
  auto tail_bound = [&](unsigned Y) {
    const Float y(Y);
    const Float a = two_pi;
    return 2 * boost::multiprecision::exp(-a * y) * (y * y / a + 2 * y / (a * a) + 2 / (a * a * a));
  };
  const Float tail_target = exp2_float(-static_cast<long>(bits) - 8, wp);
  unsigned Y = 2;
  while (tail_bound(Y) > tail_target) ++Y;

  Float value = 0;
  Float err = tail_bound(Y);
  for (unsigned panel = 0; panel < Y; ++panel) {
    PanelResult p = tanh_sinh_panel(Float(panel), Float(1), wp, bits + 8);
    value += p.value;
    err += p.error;
  }
  return HPReal(value, err, wp).rounded_to(bits);
}

HPReal constant_c(unsigned bits) {
  require_precision(bits);
  static std::mutex mutex;
  static std::map<unsigned, HPReal> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(bits); it != cache.end()) return it->second;
  }
  HPReal series = constant_c_series(bits);
  HPReal quadrature = constant_c_quadrature(bits);
  if (!overlaps(series, quadrature)) {
    throw ConsistencyError("constant c: series " + series.describe(30) + " and quadrature " +
                           quadrature.describe(30) + " disagree");
  }
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(bits, series);
  return series;
}

HPReal zeta_prime_minus1(unsigned bits) { return constant_c(bits) * Rational(2); }

Rational d_zero() { return Rational(-1, 12); }

}  // namespace planepart
