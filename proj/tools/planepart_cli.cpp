// planepart: exact and asymptotic counts of plane partitions.
//
// Exit codes: 0 success, 1 usage error, 2 internal consistency failure
// (oracle disagreement, divisibility failure), 3 condition-(iv) violation.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "planepart/condition_iv.hpp"
#include "planepart/divisor_sieve.hpp"
#include "planepart/exact_series.hpp"
#include "planepart/meinardus.hpp"
#include "planepart/precision_constants.hpp"
#include "planepart/rendering.hpp"
#include "planepart/serialization.hpp"

namespace {

using namespace planepart;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitConsistency = 2;
constexpr int kExitScanViolation = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { text, csv, json };

const std::map<std::string, Format> kFormats{{"text", Format::text}, {"csv", Format::csv}, {"json", Format::json}};

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

// Display width, counting UTF-8 code points.
std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  }));
}

std::string pad_right(const std::string& s, std::size_t width) {
  const std::size_t w = display_width(s);
  return w >= width ? s : s + std::string(width - w, ' ');
}

std::string log10_string(const HPReal& v) { return v.fixed(30); }

// ---- exact --------------------------------------------------------------

struct ExactOptions {
  std::optional<std::size_t> n;
  std::optional<std::size_t> upto;
  std::string method = "recurrence";
  Format format = Format::text;
  bool verify = false;
};

CoefficientTable exact_by(const std::string& method, std::size_t limit) {
  if (method == "recurrence") return plane_partition_table(limit);
  if (method == "product") return euler_product_coeffs(WeightSpec::identity(), limit);
  if (limit > kBruteForceCap) {
    throw UsageError("--method brute supports n <= " + std::to_string(kBruteForceCap));
  }
  std::vector<BigInt> v(limit + 1);
  for (std::size_t n = 0; n <= limit; ++n) {
    v[n] = static_cast<unsigned long>(brute_force_plane_partitions(static_cast<unsigned>(n)));
  }
  return CoefficientTable(std::move(v), SeriesSource::brute_force);
}

int run_exact(const ExactOptions& o) {
  if (o.n.has_value() == o.upto.has_value()) throw UsageError("give exactly one of <n> or --upto N");
  const std::size_t limit = o.n ? *o.n : *o.upto;
  const std::size_t first = o.n ? *o.n : 0;
  const CoefficientTable table = exact_by(o.method, limit);
  if (o.verify) {
    std::vector<std::string> others;
    for (const char* m : {"recurrence", "product", "brute"}) {
      if (m == o.method) continue;
      if (std::string(m) == "brute" && limit > kBruteForceCap) continue;
      others.emplace_back(m);
    }
    for (const auto& m : others) {
      const CoefficientTable check = exact_by(m, limit);
      for (std::size_t n = first; n <= limit; ++n) {
        if (check[n] != table[n]) {
          throw ConsistencyError("q(" + std::to_string(n) + "): " + o.method + " gives " + table[n].get_str() +
                                 ", " + m + " gives " + check[n].get_str());
        }
      }
      std::cerr << "verified against " << m << " for n <= " << limit << '\n';
    }
  }
  switch (o.format) {
    case Format::text:
      if (o.n) {
        std::cout << table[*o.n].get_str() << '\n';
      } else {
        for (std::size_t n = 0; n <= limit; ++n) std::cout << n << ' ' << table[n].get_str() << '\n';
      }
      break;
    case Format::csv: std::cout << to_csv(table, first); break;
    case Format::json: print_json(to_json(table, first)); break;
  }
  return kExitOk;
}

// ---- asym ---------------------------------------------------------------

WrightGamma0 parse_gamma0(const std::string& s) {
  if (s == "one") return WrightGamma0::claimed_one;
  if (s == "corrected") return WrightGamma0::corrected_inv_sqrt3;
  throw UsageError("--gamma0 must be 'one' or 'corrected'");
}

json asym_json(std::uint64_t n, const WrightLeading& w) {
  return {{"n", n},
          {"gamma0", std::string(to_string(w.gamma0))},
          {"log10", log10_string(w.value.log10_value)},
          {"mantissa", w.value.rendered.mantissa.get_str()},
          {"exponent", w.value.rendered.exponent},
          {"text", w.value.text()}};
}

int run_asym(std::uint64_t n, const std::string& gamma0, unsigned prec, Format format) {
  if (n == 0) throw UsageError("n must be >= 1");
  const WrightLeading w = wright_leading(n, parse_gamma0(gamma0), prec);
  switch (format) {
    case Format::text: std::cout << w.value.text() << '\n'; break;
    case Format::csv:
      std::cout << "n,gamma0,log10,mantissa,exponent\n"
                << n << ',' << to_string(w.gamma0) << ',' << log10_string(w.value.log10_value) << ','
                << w.value.rendered.mantissa.get_str() << ',' << w.value.rendered.exponent << '\n';
      break;
    case Format::json: print_json(asym_json(n, w)); break;
  }
  return kExitOk;
}

// ---- table --------------------------------------------------------------

std::vector<std::size_t> parse_rows(const std::string& spec) {
  std::vector<std::size_t> rows;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      const long long v = std::stoll(item, &pos);
      if (pos != item.size() || v < 1) throw std::invalid_argument(item);
      rows.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw UsageError("--rows expects comma-separated positive integers, got '" + item + "'");
    }
  }
  if (rows.empty()) throw UsageError("--rows is empty");
  return rows;
}

struct TableRow {
  std::size_t n;
  BigInt exact;
  Rendered exact_rendered;
  WrightLeading one;
  WrightLeading corrected;
  Rendered one_rendered;
  Rendered corrected_rendered;
};

// Asymptotic columns share the exact column's exponent, as in
// "59 206 × 10^12 | 103 709 × 10^12 | 59 876 × 10^12".
Rendered align(const WrightLeading& w, const Rendered& exact) {
  if (exact.exponent <= 0) return w.value.rendered;
  return {mantissa_at_exponent(w.value.log10_value, exact.exponent), exact.exponent};
}

int run_table(const std::string& rows_spec, unsigned prec, Format format, std::size_t max_row) {
  const std::vector<std::size_t> rows = parse_rows(rows_spec);
  const std::size_t top = *std::max_element(rows.begin(), rows.end());
  if (top > max_row) {
    throw UsageError("row " + std::to_string(top) + " exceeds --max-row " + std::to_string(max_row));
  }
  const CoefficientTable q = plane_partition_table(top);
  std::vector<TableRow> out;
  for (std::size_t n : rows) {
    TableRow r{n, q[n], round_significant(q[n]), wright_leading(n, WrightGamma0::claimed_one, prec),
               wright_leading(n, WrightGamma0::corrected_inv_sqrt3, prec), {}, {}};
    r.one_rendered = align(r.one, r.exact_rendered);
    r.corrected_rendered = align(r.corrected, r.exact_rendered);
    out.push_back(std::move(r));
  }
  switch (format) {
    case Format::text: {
      const std::vector<std::string> header{"n", "q(n)", "gamma0=1", "gamma0=3^(-1/2)"};
      std::vector<std::vector<std::string>> cells{header};
      for (const auto& r : out) {
        cells.push_back({group_digits(std::to_string(r.n)), format_rendered(r.exact_rendered),
                         format_rendered(r.one_rendered), format_rendered(r.corrected_rendered)});
      }
      std::vector<std::size_t> widths(header.size(), 0);
      for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i) widths[i] = std::max(widths[i], display_width(line[i]));
      }
      for (const auto& line : cells) {
        std::string s;
        for (std::size_t i = 0; i < line.size(); ++i) {
          s += i + 1 < line.size() ? pad_right(line[i], widths[i] + 3) : line[i];
        }
        std::cout << s << '\n';
      }
      break;
    }
    case Format::csv:
      std::cout << "n,exact,gamma0_one_mantissa,gamma0_one_exponent,gamma0_corrected_mantissa,"
                   "gamma0_corrected_exponent\n";
      for (const auto& r : out) {
        std::cout << r.n << ',' << r.exact.get_str() << ',' << r.one_rendered.mantissa.get_str() << ','
                  << r.one_rendered.exponent << ',' << r.corrected_rendered.mantissa.get_str() << ','
                  << r.corrected_rendered.exponent << '\n';
      }
      break;
    case Format::json: {
      json arr = json::array();
      for (const auto& r : out) {
        arr.push_back({{"n", r.n},
                       {"exact", r.exact.get_str()},
                       {"exact_text", format_rendered(r.exact_rendered)},
                       {"gamma0_one", asym_json(r.n, r.one)},
                       {"gamma0_one_text", format_rendered(r.one_rendered)},
                       {"gamma0_corrected", asym_json(r.n, r.corrected)},
                       {"gamma0_corrected_text", format_rendered(r.corrected_rendered)}});
      }
      print_json({{"precision_bits", prec}, {"rows", arr}});
      break;
    }
  }
  return kExitOk;
}

// ---- constants ----------------------------------------------------------

int run_constants(unsigned prec, Format format) {
  const HPReal z3 = zeta3(prec);
  const HPReal gamma = euler_gamma(prec);
  const HPReal c = constant_c(prec);
  const HPReal c_quad = constant_c_quadrature(prec);
  const HPReal zp = zeta_prime_minus1(prec);
  const std::string d0 = to_string(d_zero());
  const int digits = static_cast<int>(prec * 0.30103) - 2;
  switch (format) {
    case Format::text:
      std::cout << "zeta(3)          = " << z3.describe(digits) << '\n'
                << "euler_gamma      = " << gamma.describe(digits) << '\n'
                << "c                = " << c.describe(digits) << '\n'
                << "c (quadrature)   = " << c_quad.describe(digits) << '\n'
                << "zeta'(-1) = 2c   = " << zp.describe(digits) << '\n'
                << "D(0) = zeta(-1)  = " << d0 << '\n';
      break;
    case Format::csv:
      std::cout << "name,value,error_bound\n";
      for (const auto& [name, v] : std::vector<std::pair<std::string, const HPReal*>>{
               {"zeta3", &z3}, {"euler_gamma", &gamma}, {"c", &c}, {"c_quadrature", &c_quad}, {"zeta_prime_minus1", &zp}}) {
        std::cout << name << ',' << v->value().str(digits, std::ios::scientific) << ','
                  << v->error_bound().str(3, std::ios::scientific) << '\n';
      }
      std::cout << "d0," << d0 << ",0\n";
      break;
    case Format::json: {
      auto entry = [&](const HPReal& v) {
        return json{{"value", v.value().str(digits, std::ios::scientific)},
                    {"error_bound", v.error_bound().str(3, std::ios::scientific)}};
      };
      print_json({{"precision_bits", prec},
                  {"zeta3", entry(z3)},
                  {"euler_gamma", entry(gamma)},
                  {"c", entry(c)},
                  {"c_quadrature", entry(c_quad)},
                  {"zeta_prime_minus1", entry(zp)},
                  {"d0", d0}});
      break;
    }
  }
  return kExitOk;
}

// ---- meinardus ----------------------------------------------------------

Rational parse_rational(const std::string& s, const char* what) {
  try {
    Rational q(s, 10);
    q.canonicalize();
    return q;
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + " expects a rational like 1/100, got '" + s + "'");
  }
}

int run_meinardus(const std::string& instance, std::optional<std::uint64_t> n, unsigned prec,
                  const std::string& delta_s, Format format) {
  const Rational delta = parse_rational(delta_s, "--delta");
  MeinardusParams p = [&] {
    if (instance == "plane") return plane_partition_params(prec, delta);
    if (instance == "ordinary") return ordinary_partition_params(prec, delta);
    throw UsageError("--instance must be 'plane' or 'ordinary'");
  }();
  const MeinardusConstants mc = meinardus_constants(p, prec);
  std::optional<HPReal> main_log10;
  if (n) {
    if (*n == 0) throw UsageError("n must be >= 1");
    main_log10 = asymptotic_log10(p, *n, prec);
  }
  const int digits = static_cast<int>(prec * 0.30103) - 2;
  switch (format) {
    case Format::text:
      std::cout << "instance = " << instance << '\n'
                << "alpha = " << to_string(p.alpha) << ", A = " << to_string(p.residue)
                << ", D(0) = " << to_string(p.d0) << ", C0 = " << to_string(p.c0)
                << ", delta = " << to_string(p.delta) << '\n'
                << "C = " << mc.C.describe(digits) << '\n'
                << "K = " << to_string(mc.K) << '\n'
                << "K1 = " << to_string(mc.K1) << '\n';
      if (main_log10) {
        std::cout << "log10 main term (n = " << *n << ") = " << log10_string(*main_log10) << '\n'
                  << "main term = " << format_rendered(round_significant(*main_log10)) << '\n';
      }
      break;
    case Format::csv:
      std::cout << "instance,C,K,K1,n,log10_main_term\n"
                << instance << ',' << mc.C.value().str(digits, std::ios::scientific) << ',' << to_string(mc.K)
                << ',' << to_string(mc.K1) << ',' << (n ? std::to_string(*n) : "") << ','
                << (main_log10 ? log10_string(*main_log10) : "") << '\n';
      break;
    case Format::json: {
      json j{{"instance", instance},
             {"precision_bits", prec},
             {"alpha", to_string(p.alpha)},
             {"A", to_string(p.residue)},
             {"D0", to_string(p.d0)},
             {"C0", to_string(p.c0)},
             {"delta", to_string(p.delta)},
             {"C", mc.C.value().str(digits, std::ios::scientific)},
             {"K", to_string(mc.K)},
             {"K1", to_string(mc.K1)}};
      if (main_log10) {
        j["n"] = *n;
        j["log10_main_term"] = log10_string(*main_log10);
      }
      print_json(j);
      break;
    }
  }
  return kExitOk;
}

// ---- scan-iv ------------------------------------------------------------

int run_scan(double ymin, double ymax, std::size_t steps, std::size_t wsteps, double eps, double c2, Format format) {
  GridSpec grid;
  try {
    grid = GridSpec::log_spaced(ymin, ymax, steps, wsteps, eps, c2);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const ScanReport r = scan_condition_iv(grid);
  switch (format) {
    case Format::text: {
      std::ostringstream os;
      os.precision(10);
      os << "points        = " << r.points << '\n'
         << "epsilon, C2   = " << r.epsilon << ", " << r.c2 << '\n'
         << "violations    = " << r.violations << '\n'
         << "worst (y, w)  = (" << r.worst.y << ", " << r.worst.w << "), margin " << r.worst.margin
         << ", excess " << r.worst.excess << '\n'
         << "certified C2  = " << r.certified_c2 << '\n'
         << "result        = " << (r.passed ? "PASS" : "FAIL") << '\n';
      std::cout << os.str();
      break;
    }
    case Format::csv:
      std::cout << "points,epsilon,c2,violations,worst_y,worst_w,worst_margin,worst_excess,certified_c2,passed\n"
                << r.points << ',' << r.epsilon << ',' << r.c2 << ',' << r.violations << ',' << r.worst.y << ','
                << r.worst.w << ',' << r.worst.margin << ',' << r.worst.excess << ',' << r.certified_c2 << ','
                << (r.passed ? "true" : "false") << '\n';
      break;
    case Format::json: print_json(to_json(r, ymin, ymax, steps, wsteps)); break;
  }
  return r.passed ? kExitOk : kExitScanViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and asymptotic counts of plane partitions"};
  app.require_subcommand(1);

  auto add_format = [](CLI::App* cmd, Format& f) {
    cmd->add_option("--format", f, "Output format")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
        ->option_text("text|csv|json");
  };
  auto add_prec = [](CLI::App* cmd, unsigned& p) {
    cmd->add_option("--prec", p, "Working precision in bits")->check(CLI::Range(kMinPrecision, 1u << 16));
  };

  ExactOptions exact;
  auto* cmd_exact = app.add_subcommand("exact", "Exact q(n) or the table q(0..N)");
  cmd_exact->add_option("n", exact.n, "Single index n >= 0");
  cmd_exact->add_option("--upto", exact.upto, "Print q(0..N)");
  cmd_exact->add_option("--method", exact.method)->check(CLI::IsMember({"recurrence", "product", "brute"}));
  cmd_exact->add_flag("--verify", exact.verify, "Cross-check against the other methods");
  add_format(cmd_exact, exact.format);

  std::uint64_t asym_n = 0;
  std::string gamma0 = "corrected";
  unsigned prec = kDefaultPrecision;
  Format format = Format::text;
  auto* cmd_asym = app.add_subcommand("asym", "Leading term of Wright's formula");
  cmd_asym->add_option("n", asym_n)->required();
  cmd_asym->add_option("--gamma0", gamma0, "one | corrected (3^{-1/2})");
  add_prec(cmd_asym, prec);
  add_format(cmd_asym, format);

  std::string rows = "10,100,1000,10000";
  std::size_t max_row = 10000;
  auto* cmd_table = app.add_subcommand("table", "Exact vs asymptotic comparison table");
  cmd_table->add_option("--rows", rows, "Comma-separated n values");
  cmd_table->add_option("--max-row", max_row, "Refuse rows above this n");
  add_prec(cmd_table, prec);
  add_format(cmd_table, format);

  auto* cmd_constants = app.add_subcommand("constants", "zeta(3), gamma, c, zeta'(-1), D(0)");
  add_prec(cmd_constants, prec);
  add_format(cmd_constants, format);

  std::string instance = "plane";
  std::optional<std::uint64_t> mn;
  std::string delta = "1/100";
  auto* cmd_mein = app.add_subcommand("meinardus", "Meinardus constants C, K, K1 and the main term");
  cmd_mein->add_option("n", mn, "Evaluate log10 of the main term at n");
  cmd_mein->add_option("--instance", instance)->check(CLI::IsMember({"plane", "ordinary"}));
  cmd_mein->add_option("--delta", delta, "delta in (0, 1/2), as a rational");
  add_prec(cmd_mein, prec);
  add_format(cmd_mein, format);

  double ymin = 1e-3, ymax = 1e-1, eps = 2, c2 = 1;
  std::size_t steps = 30, wsteps = 60;
  auto* cmd_scan = app.add_subcommand("scan-iv", "Scan Re g(v) - g(y) <= -C2 y^{-eps}");
  cmd_scan->add_option("--ymin", ymin);
  cmd_scan->add_option("--ymax", ymax);
  cmd_scan->add_option("--steps", steps, "Number of y values");
  cmd_scan->add_option("--wsteps", wsteps, "Number of w values per y");
  cmd_scan->add_option("--eps", eps);
  cmd_scan->add_option("--c2", c2);
  add_format(cmd_scan, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*cmd_exact) return run_exact(exact);
    if (*cmd_asym) return run_asym(asym_n, gamma0, prec, format);
    if (*cmd_table) return run_table(rows, prec, format, max_row);
    if (*cmd_constants) return run_constants(prec, format);
    if (*cmd_mein) return run_meinardus(instance, mn, prec, delta, format);
    if (*cmd_scan) return run_scan(ymin, ymax, steps, wsteps, eps, c2, format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << '\n';
    return kExitConsistency;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
