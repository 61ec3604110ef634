#include "planepart/condition_iv.hpp"

#include <omp.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <tuple>

namespace planepart {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

HPReal exact_double(double x, unsigned bits) {
  Rational q;
  mpq_set_d(q.get_mpq_t(), x);
  return HPReal::from_rational(q, bits);
}

bool worse(const ScanPoint& a, const ScanPoint& b) {
  return std::tie(a.excess, a.y, a.w) > std::tie(b.excess, b.y, b.w);
}

struct RowResult {
  ScanPoint worst;
  double min_c2 = INFINITY;
  std::size_t violations = 0;
  bool any = false;
};

RowResult scan_row(const GridRow& row, double epsilon, double c2) {
  RowResult r;
  const double y_pow = std::pow(row.y, epsilon);
  for (double w : row.w) {
    ScanPoint p{row.y, w, condition_iv_margin(row.y, w), 0};
    p.excess = p.margin + c2 / y_pow;
    if (p.excess > 0) ++r.violations;
    r.min_c2 = std::min(r.min_c2, -p.margin * y_pow);
    if (!r.any || worse(p, r.worst)) r.worst = p;
    r.any = true;
  }
  return r;
}

void merge(RowResult& into, const RowResult& from) {
  if (!from.any) return;
  into.violations += from.violations;
  into.min_c2 = std::min(into.min_c2, from.min_c2);
  if (!into.any || worse(from.worst, into.worst)) into.worst = from.worst;
  into.any = true;
}

}  // namespace

std::complex<double> g_closed_form(std::complex<double> v) {
  if (!(v.real() > 0)) throw std::domain_error("g(v) requires Re v > 0");
  const std::complex<double> s = std::sinh(v / 2.0);
  return 1.0 / (4.0 * s * s);
}

double condition_iv_margin(double y, double w) {
  if (!(y > 0)) throw std::domain_error("condition_iv_margin requires y > 0");
  if (std::abs(w) > 0.5) throw std::domain_error("condition_iv_margin requires |w| <= 1/2");
  // With A = cosh y - 1 = 2 sinh^2(y/2) and s = 1 - cos(2 pi w) = 2 sin^2(pi w),
  // Re g(v) - g(y) = -s (A^2 + 3A + s) / (2 A (A + s)^2); every factor is
  // non-negative so the sign is exact and nothing cancels.
  const double sh = std::sinh(y / 2);
  const double sn = std::sin(std::numbers::pi * w);
  const double A = 2 * sh * sh;
  const double s = 2 * sn * sn;
  return -s * (A * A + 3 * A + s) / (2 * A * (A + s) * (A + s));
}

double margin_small_y_limit(double t) {
  const double t2 = t * t;
  return -t2 * (3 + t2) / ((1 + t2) * (1 + t2));
}

void GridSpec::validate() const {
  if (!(epsilon > 0 && epsilon <= 2)) throw std::invalid_argument("epsilon must lie in (0, 2]");
  if (!(c2 > 0)) throw std::invalid_argument("C2 must be positive");
  if (rows.empty()) throw std::invalid_argument("empty grid");
  for (const auto& row : rows) {
    if (!(row.y > 0)) throw std::invalid_argument("grid y values must be positive");
    for (double w : row.w) {
      if (w == 0) throw std::invalid_argument("w = 0 lies on the real axis (arg v = 0)");
      if (std::abs(w) > 0.5) throw std::invalid_argument("|w| must be <= 1/2");
      if (!(kTwoPi * std::abs(w) > row.y)) {
        throw std::invalid_argument("grid point violates |arg v| > pi/4 (need 2 pi |w| > y)");
      }
    }
  }
}

GridSpec GridSpec::log_spaced(double y_min, double y_max, std::size_t y_steps, std::size_t w_steps,
                              double epsilon, double c2) {
  if (!(y_min > 0 && y_max >= y_min && y_max < std::numbers::pi)) {
    throw std::invalid_argument("need 0 < y_min <= y_max < pi");
  }
  if (y_steps == 0 || w_steps == 0) throw std::invalid_argument("grid needs at least one step in y and w");
  GridSpec g;
  g.epsilon = epsilon;
  g.c2 = c2;
  for (std::size_t i = 0; i < y_steps; ++i) {
    const double f = y_steps == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(y_steps - 1);
    GridRow row{y_min * std::pow(y_max / y_min, f), {}};
    std::vector<double> thetas;
    // Ring just outside the boundary |arg v| = pi/4.
    for (double rel : {1e-9, 1e-6, 1e-3}) thetas.push_back(row.y * (1 + rel));
    for (std::size_t j = 1; j <= w_steps; ++j) {
      const double frac = static_cast<double>(j) / static_cast<double>(w_steps);
      thetas.push_back(row.y * std::pow(std::numbers::pi / row.y, frac));
    }
    thetas.back() = std::numbers::pi;
    for (double theta : thetas) {
      const double w = std::min(0.5, theta / kTwoPi);
      row.w.push_back(w);
      row.w.push_back(-w);
    }
    g.rows.push_back(std::move(row));
  }
  g.validate();
  return g;
}

ScanReport scan_condition_iv(const GridSpec& grid, Execution exec) {
  grid.validate();
  const std::size_t n_rows = grid.rows.size();
  std::vector<RowResult> per_row(n_rows);
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < n_rows; ++i) per_row[i] = scan_row(grid.rows[i], grid.epsilon, grid.c2);
  } else {
    for (std::size_t i = 0; i < n_rows; ++i) per_row[i] = scan_row(grid.rows[i], grid.epsilon, grid.c2);
  }
  RowResult total;
  for (const auto& r : per_row) merge(total, r);

  ScanReport report;
  report.epsilon = grid.epsilon;
  report.c2 = grid.c2;
  for (const auto& row : grid.rows) report.points += row.w.size();
  report.violations = total.violations;
  report.passed = total.violations == 0 && total.any;
  report.worst = total.worst;
  report.certified_c2 = total.min_c2;
  return report;
}

StirlingTable::StirlingTable(unsigned n) : n_(n) {
  std::vector<BigInt> prev{BigInt(1)};  // S(0, 0) = 1
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<BigInt> next(i + 1);
    for (unsigned m = 1; m <= i; ++m) {
      next[m] = (m < i ? prev[m] * m : BigInt(0)) + prev[m - 1];
    }
    prev = std::move(next);
  }
  row_ = std::move(prev);
}

StirlingTable stirling2_table(unsigned n) { return StirlingTable(n); }

HPReal boson_derivative(unsigned order, double y, unsigned bits) {
  if (order % 2 == 0) throw std::invalid_argument("boson_derivative: order must be odd (2k+1)");
  if (!(y > 0)) throw std::domain_error("boson_derivative: 1/(e^y - 1) is singular at y = 0");
  const StirlingTable s = stirling2_table(order);
  const HPReal ey = exp(exact_double(y, bits));
  const HPReal em1 = ey - HPReal::from_int(1, bits);
  HPReal sum(Float(0), Float(0), bits);
  HPReal e_my = HPReal::from_int(1, bits);
  HPReal denom = em1;
  BigInt m_fact = 1;
  for (unsigned m = 0; m <= order; ++m) {
    if (m > 0) {
      m_fact *= m;
      e_my = e_my * ey;
      denom = denom * em1;
    }
    if (s[m] == 0) continue;
    Rational coeff(m_fact * s[m]);
    if (m % 2 == 1) coeff = -coeff;
    sum = sum + e_my * coeff / denom;
  }
  return sum;
}

HPReal psi(unsigned k, double y, unsigned bits) {
  if (k == 0) throw std::invalid_argument("psi: k must be >= 1");
  if (!(y > 0)) throw std::domain_error("psi: y must be positive");
  const unsigned n = 2 * k + 1;
  const StirlingTable s = stirling2_table(n);
  const HPReal ey = exp(exact_double(y, bits));
  const HPReal em1 = ey - HPReal::from_int(1, bits);
  HPReal sum(Float(0), Float(0), bits);
  BigInt m_fact = 1;
  for (unsigned m = 0; m <= 2 * k; ++m) {
    if (m > 0) m_fact *= m;
    if (s[m] == 0) continue;
    Rational coeff(m_fact * s[m]);
    if (m % 2 == 1) coeff = -coeff;
    // e^{my} (e^y - 1)^{2k+1-m}
    HPReal term = exp(exact_double(y, bits) * Rational(m)) * exp(log(em1) * Rational(n - m));
    sum = sum + term * coeff;
  }
  BigInt two_k_fact;
  mpz_fac_ui(two_k_fact.get_mpz_t(), 2 * k);
  return sum * Rational(BigInt(-1), two_k_fact);
}

std::pair<double, double> reexpansion_check(unsigned k, double y) {
  if (k < 1 || k > 6) throw std::invalid_argument("reexpansion_check: k must lie in 1..6");
  if (!(y > 0 && y <= 0.5)) throw std::invalid_argument("reexpansion_check: y must lie in (0, 0.5]");
  const double v = psi(k, y, 128).to_double();
  return {v, v / y};
}

double leading_expansion_term(double y, double theta) {
  const double em1 = std::expm1(y);
  const double p1 = psi(1, y, 128).to_double();
  return -theta * theta / std::pow(em1, 4) * (3 + p1);
}

double derivative_expansion(double y, double theta, unsigned k_max) {
  double sum = 0;
  double coeff = 1;  // theta^{2k} / (2k)!
  for (unsigned k = 1; k <= k_max; ++k) {
    coeff *= theta * theta / ((2.0 * k - 1) * (2.0 * k));
    const double d = boson_derivative(2 * k + 1, y, 128).to_double();
    sum += (k % 2 == 1 ? 1.0 : -1.0) * coeff * d;
  }
  return sum;
}

}  // namespace planepart
