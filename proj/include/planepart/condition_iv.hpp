#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "planepart/bigint.hpp"
#include "planepart/execution.hpp"
#include "planepart/hp_real.hpp"

namespace planepart {

// For a_j = j the function g(v) = sum_j j e^{-jv} has the closed form
// x / (1 - x)^2 = 1 / (4 sinh^2(v/2)), x = e^{-v}.

/// Throws std::domain_error if Re v <= 0.
std::complex<double> g_closed_form(std::complex<double> v);

/// Re g(y + 2 pi i w) - g(y) = sum_j j e^{-jy} (cos(2 pi j w) - 1) <= 0.
double condition_iv_margin(double y, double w);

/// Small-y limit of y^2 * margin along 2 pi w = t y:
/// (1 - t^2)/(1 + t^2)^2 - 1, from g(v) ~ 1/v^2.
double margin_small_y_limit(double t);

/// One row of a scan grid: a value of y and the w values tested with it.
struct GridRow {
  double y;
  std::vector<double> w;
};

/// Sample set for the inequality margin(y, w) <= -C2 y^{-eps}.
/// Every (y, w) must satisfy y > 0, 0 < |w| <= 1/2 and 2 pi |w| > y
/// (i.e. |arg(y + 2 pi i w)| > pi/4); validate() throws otherwise.
struct GridSpec {
  std::vector<GridRow> rows;
  double epsilon = 2.0;
  double c2 = 1.0;

  void validate() const;

  /// y log-spaced over [y_min, y_max] (y_steps points); for each y,
  /// theta = 2 pi w log-spaced over (y, pi] (w_steps points) plus a ring of
  /// points just above theta = y, mirrored to negative w.
  static GridSpec log_spaced(double y_min, double y_max, std::size_t y_steps, std::size_t w_steps,
                             double epsilon, double c2);
};

struct ScanPoint {
  double y = 0;
  double w = 0;
  double margin = 0;
  /// margin + C2 y^{-eps}; the inequality holds iff excess <= 0.
  double excess = 0;
};

struct ScanReport {
  double epsilon = 0;
  double c2 = 0;
  std::size_t points = 0;
  std::size_t violations = 0;
  bool passed = false;
  /// Largest excess; ties broken by larger y, then larger w.
  ScanPoint worst;
  /// min over the grid of -margin * y^{eps}: the largest C2 the grid supports.
  double certified_c2 = 0;
};

ScanReport scan_condition_iv(const GridSpec& grid, Execution exec = Execution::parallel);

/// Stirling numbers of the second kind S(n, m), 0 <= m <= n.
class StirlingTable {
 public:
  explicit StirlingTable(unsigned n);
  unsigned order() const { return n_; }
  const BigInt& operator[](unsigned m) const { return row_.at(m); }

 private:
  unsigned n_;
  std::vector<BigInt> row_;
};

/// Row n of the table built by S(n+1, m) = m S(n, m) + S(n, m-1).
StirlingTable stirling2_table(unsigned n);

/// d^order/dy^order of 1/(e^y - 1) as
/// sum_{m=0}^{order} (-1)^m m! e^{my} S(order, m) / (e^y - 1)^{m+1}.
/// order must be odd; y > 0.
HPReal boson_derivative(unsigned order, double y, unsigned bits);

/// psi_k(y) = -1/(2k)! sum_{m=0}^{2k} (-1)^m m! e^{my} (e^y - 1)^{2k+1-m} S(2k+1, m),
/// the remainder left when the (2k+1)-th derivative is written as
/// (e^y - 1)^{-(2k+2)} times its leading term.
HPReal psi(unsigned k, double y, unsigned bits);

/// (psi_k(y), psi_k(y)/y) for y in (0, 0.5], 1 <= k <= 6.
std::pair<double, double> reexpansion_check(unsigned k, double y);

/// First term of the re-expansion in powers of theta = 2 pi w:
/// -theta^2 (e^y - 1)^{-4} [3 + psi_1(y)].
double leading_expansion_term(double y, double theta);

/// sum_{k=1}^{k_max} (-1)^{k+1} theta^{2k}/(2k)! d^{2k+1}/dy^{2k+1} 1/(e^y - 1),
/// which converges to the margin for |theta| < y.
double derivative_expansion(double y, double theta, unsigned k_max);

}  // namespace planepart
