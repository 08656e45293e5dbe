// Command-line surface: digit computation, coefficient tables, diagnostic
// tables, planning, and verification runs, with plain/JSON/LaTeX outputs.
//
// Exit codes: 0 success; 1 verification failure; 2 usage or validation
// error; 3 resource caps exceeded.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "egamma/exact_core.hpp"
#include "egamma/format.hpp"
#include "egamma/functions.hpp"
#include "egamma/reference.hpp"
#include "egamma/series.hpp"

using json = nlohmann::ordered_json;
using namespace egamma;

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
      .count();
}

BigInt rational_floor(const Rational& q) {
  BigInt f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return f;
}

// Largest k <= shown such that the interval [value - bound, value + bound]
// does not straddle a decimal boundary at k fractional digits; 0 when even
// the first digit is uncertain. Truncated digit strings of any point in the
// interval agree up to k digits.
long certified_digits(const Rational& value, const Rational& bound, long shown) {
  for (long k = shown; k >= 1; --k) {
    Rational scale(pow10(static_cast<unsigned long>(k)));
    if (rational_floor((value - bound) * scale) ==
        rational_floor((value + bound) * scale))
      return k;
  }
  return 0;
}

std::string latex_sci(const std::string& sci) {
  auto e = sci.find('e');
  if (e == std::string::npos) return sci;
  return sci.substr(0, e) + "\\times 10^{" + sci.substr(e + 1) + "}";
}

std::string latex_fraction(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

const char* em_source_name(EmSource s) {
  return s == EmSource::exact ? "exact" : "fixed";
}

struct FormatOpt {
  std::string value = "plain";
  bool plain() const { return value == "plain"; }
  bool as_json() const { return value == "json"; }
  bool latex() const { return value == "latex"; }
};

void add_format_option(CLI::App* sub, FormatOpt& fmt) {
  sub->add_option("--format", fmt.value, "Output format")
      ->check(CLI::IsMember({"plain", "json", "latex"}));
}

// ---------------------------------------------------------------- gamma ---

struct GammaArgs {
  long digits = 0;
  long terms = 0;
  int level = 0;  // 0 = auto
  double cost = 2.0;
  long shown = 0;  // 0 = default per mode
  FormatOpt format;
  bool verbose = false;
  CLI::Option* opt_digits = nullptr;
  CLI::Option* opt_terms = nullptr;
  CLI::Option* opt_level = nullptr;
};

int run_gamma(const GammaArgs& args) {
  bool digits_mode = args.opt_digits->count() > 0;
  bool terms_mode = args.opt_terms->count() > 0;
  if (!digits_mode && !terms_mode) {
    std::cerr << "gamma: one of --digits or --terms is required\n";
    return 2;
  }

  SeriesPlan plan;
  long shown = args.shown;
  if (digits_mode) {
    int level = args.opt_level->count() > 0 ? args.level
                                            : auto_level(args.digits, args.cost);
    plan = plan_for_digits(args.digits, level);
    if (shown <= 0) shown = args.digits;
  } else {
    if (args.opt_level->count() == 0) {
      std::cerr << "gamma: --terms requires an explicit --level\n";
      return 2;
    }
    if (shown <= 0) shown = 20;
    plan = plan_for_terms(args.level, args.terms, shown);
  }

  ProgressFn progress;
  if (args.verbose) {
    progress = [](long term, long total) {
      std::fprintf(stderr, "term %ld/%ld\n", term, total);
    };
  }

  auto start = Clock::now();
  GammaApproximation g = gamma_series(plan, progress);
  long long elapsed = ms_since(start);

  std::string value_str = fx_to_decimal(g.value, shown);
  long certified = certified_digits(g.value.to_rational(), g.total_error_bound, shown);
  std::string bound_str = format_scientific_upper(g.total_error_bound);
  std::string last_str = format_scientific_upper(g.last_term_magnitude, 4);

  if (args.format.as_json()) {
    json out;
    out["value"] = value_str;
    out["error_bound"] = bound_str;
    out["level"] = g.plan.level;
    out["terms"] = g.terms_used;
    out["frac_bits"] = g.plan.frac_bits;
    out["elapsed_ms"] = elapsed;
    out["em_source"] = em_source_name(g.plan.em_source);
    out["digits_certified"] = certified;
    out["last_term"] = last_str;
    std::cout << out.dump(2) << "\n";
  } else if (args.format.latex()) {
    std::cout << "$\\ell=" << g.plan.level << "$ & $M=" << g.terms_used << "$ & $"
              << value_str << "\\dots$ & $\\leq " << latex_sci(bound_str)
              << "$ \\\\\n";
  } else {
    std::cout << value_str << "\n";
    std::cout << "# error_bound <= " << bound_str << "\n";
    std::cout << "# level " << g.plan.level << "  terms " << g.terms_used
              << "  frac_bits " << g.plan.frac_bits << "  em "
              << em_source_name(g.plan.em_source) << "\n";
    std::cout << "# digits_certified " << certified << " of " << shown << "\n";
    if (g.terms_used > 0) std::cout << "# last_term <= " << last_str << "\n";
    std::cout << "# elapsed_ms " << elapsed << "\n";
  }
  return 0;
}

// ----------------------------------------------------------- em and cm ---

int run_coefficient_list(long from, long to, long s, const FormatOpt& format) {
  if (from < 0 || from > to || to > static_cast<long>(kExactTrackCap)) {
    std::cerr << "coefficient range must satisfy 0 <= from <= to <= "
              << kExactTrackCap << "\n";
    return 2;
  }
  std::vector<Rational> values;
  if (s == 0) {  // e_m list
    EmTable table;
    for (long m = from; m <= to; ++m) values.push_back(table.at(static_cast<unsigned>(m)));
  } else {
    CmTable table(s);
    for (long m = from; m <= to; ++m) values.push_back(table.at(static_cast<unsigned>(m)));
  }

  if (format.as_json()) {
    json out;
    if (s != 0) out["s"] = s;
    out["from"] = from;
    out["to"] = to;
    json arr = json::array();
    for (const auto& v : values) arr.push_back(to_fraction_string(v));
    out["values"] = arr;
    std::cout << out.dump(2) << "\n";
  } else if (format.latex()) {
    for (long m = from; m <= to; ++m) {
      std::cout << "$" << m << "$ & $"
                << latex_fraction(values[static_cast<std::size_t>(m - from)])
                << "$ \\\\\n";
    }
  } else {
    for (const auto& v : values) std::cout << to_fraction_string(v) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- delta ---

long delta_frac_bits(long shown) {
  return std::max(192L, 64 + 4 * (shown + 10));
}

int run_delta(long from, long to, long shown, const FormatOpt& format) {
  if (from < 0 || from > to || to > static_cast<long>(kExactTrackCap)) {
    std::cerr << "delta range must satisfy 0 <= from <= to <= " << kExactTrackCap
              << "\n";
    return 2;
  }
  if (shown < 1 || shown > 1000) {
    std::cerr << "delta: --digits-shown must be in [1, 1000]\n";
    return 2;
  }
  PrecisionCtx ctx(delta_frac_bits(shown));
  EmTable table;
  json rows = json::array();
  for (long m = from; m <= to; ++m) {
    DeltaRecord d = delta(static_cast<unsigned>(m), ctx, table);
    std::string value_str = fx_to_decimal(d.delta, shown);
    if (format.as_json()) {
      json row;
      row["m"] = m;
      row["value"] = value_str;
      row["error_bound"] = format_scientific_upper(d.error_bound);
      rows.push_back(row);
    } else if (format.latex()) {
      std::cout << "$" << m << "$ & " << value_str << "\\dots \\\\\n";
    } else {
      std::cout << m << "\t" << value_str << "\n";
    }
  }
  if (format.as_json()) {
    json out;
    out["from"] = from;
    out["to"] = to;
    out["rows"] = rows;
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- table ---

struct Table1Layout {
  int level;
  long terms;
  long nominal;
};

constexpr Table1Layout kTable1Rows[] = {
    {2, 10, 6},  {3, 10, 10}, {4, 10, 12}, {5, 10, 16}, {6, 10, 20},
    {7, 10, 24}, {4, 20, 24}, {3, 20, 18}, {2, 20, 10},
};
constexpr long kTable1ShownCap = 40;

int run_table(int which, const FormatOpt& format) {
  if (which == 1) {
    json rows = json::array();
    for (const auto& layout : kTable1Rows) {
      SeriesPlan plan = plan_for_terms(layout.level, layout.terms, kTable1ShownCap);
      GammaApproximation g = gamma_series(plan);
      long certified = certified_digits(g.value.to_rational(), g.total_error_bound,
                                        kTable1ShownCap);
      long width = std::max(certified, 1L);
      std::string value_str = fx_to_decimal(g.value, width);
      std::string last_str = format_scientific_upper(g.last_term_magnitude, 4);
      if (format.as_json()) {
        json row;
        row["level"] = layout.level;
        row["terms"] = layout.terms;
        row["value"] = value_str;
        row["digits"] = width;
        row["nominal"] = layout.nominal;
        row["last_term"] = last_str;
        rows.push_back(row);
      } else if (format.latex()) {
        std::cout << "$" << layout.level << "$ & $" << layout.terms << "$ & $"
                  << value_str << "\\dots$ & $" << latex_sci(last_str) << "$ \\\\\n";
      } else {
        std::cout << "l=" << layout.level << " M=" << layout.terms << "  "
                  << value_str;
        if (width != layout.nominal)
          std::cout << "  (certified " << width << ", nominal " << layout.nominal
                    << ")";
        std::cout << "  last_term <= " << last_str << "\n";
      }
    }
    if (format.as_json()) {
      json out;
      out["rows"] = rows;
      out["reference"] = kReferenceDigits;
      std::cout << out.dump(2) << "\n";
    } else if (format.latex()) {
      std::cout << "$\\gamma$ & & $" << kReferenceDigits << "\\dots$ & \\\\\n";
    } else {
      std::cout << "gamma reference  " << kReferenceDigits << "\n";
    }
    return 0;
  }
  if (which == 2) {
    return run_delta(1, 20, 12, format);
  }
  if (which == 3) {
    return run_coefficient_list(1, 20, 0, format);
  }
  std::cerr << "table: id must be 1, 2, or 3\n";
  return 2;
}

// ----------------------------------------------------------------- plan ---

int run_plan(long digits, int level_opt, double cost, const FormatOpt& format) {
  auto start = Clock::now();
  int level = level_opt > 0 ? level_opt : auto_level(digits, cost);
  SeriesPlan plan = plan_for_digits(digits, level);
  long long elapsed = ms_since(start);

  Rational total = plan.tail_bound + plan.rounding_bound;
  double tail_log10 = log10_estimate(plan.tail_bound);
  std::string tail_str = format_scientific_upper(plan.tail_bound);

  if (format.as_json()) {
    json out;
    out["value"] = nullptr;  // planning only; nothing evaluated
    out["error_bound"] = format_scientific_upper(total);
    out["level"] = plan.level;
    out["terms"] = plan.terms;
    out["frac_bits"] = plan.frac_bits;
    out["elapsed_ms"] = elapsed;
    out["tail_bound_log10"] = tail_log10;
    out["em_source"] = em_source_name(plan.em_source);
    std::cout << out.dump(2) << "\n";
  } else if (format.latex()) {
    std::cout << "$" << plan.level << "$ & $" << plan.terms << "$ & $"
              << plan.frac_bits << "$ & $" << latex_sci(tail_str) << "$ \\\\\n";
  } else {
    std::cout << "level " << plan.level << "\n";
    std::cout << "terms " << plan.terms << "\n";
    std::cout << "frac_bits " << plan.frac_bits << "\n";
    std::cout << "tail_bound <= " << tail_str << " (log10 " << tail_log10 << ")\n";
    std::cout << "rounding <= " << format_scientific_upper(plan.rounding_bound)
              << "\n";
    std::cout << "em " << em_source_name(plan.em_source) << "\n";
  }
  return 0;
}

// --------------------------------------------------------------- verify ---

int run_verify(long bounds_m, long oracle_m, long cross_d, bool eta_flag,
               bool any_flag) {
  if (!any_flag) {
    bounds_m = 300;
    oracle_m = 10;
    cross_d = 50;
    eta_flag = true;
  }
  bool all_pass = true;

  if (bounds_m >= 0) {
    if (bounds_m > 5000) {
      std::cerr << "verify: --bounds must be <= 5000\n";
      return 2;
    }
    auto rows = verify_bounds(0, static_cast<unsigned>(bounds_m));
    bool pass = true;
    Rational min_margin;
    bool have_margin = false;
    unsigned min_at = 0;
    for (const auto& row : rows) {
      if (!row.pass()) pass = false;
      auto consider = [&](const Rational& margin) {
        if (!have_margin || margin < min_margin) {
          min_margin = margin;
          min_at = row.m;
          have_margin = true;
        }
      };
      if (row.m >= 1) consider(row.margin_basic_lower);
      consider(row.margin_basic_upper);
      if (row.sharp_checked) {
        consider(row.margin_sharp_lower);
        consider(row.margin_sharp_upper);
      }
    }
    std::cout << "bounds m=0.." << bounds_m << ": " << (pass ? "PASS" : "FAIL")
              << "  (boundary equality at m=0; min strict margin "
              << format_scientific_upper(min_margin) << " at m=" << min_at << ")\n";
    all_pass = all_pass && pass;
  }

  if (oracle_m >= 1) {
    if (oracle_m > 64) {
      std::cerr << "verify: --oracle must be <= 64\n";
      return 2;
    }
    PrecisionCtx ctx(128);
    EmTable table;
    Rational h = dyadic(BigInt(1), 20);
    Rational tol = make_rational(1, pow10(7));
    Rational max_dev(0);
    for (long m = 1; m <= oracle_m; ++m) {
      Bounded est = em_derivative_oracle(static_cast<unsigned>(m), h, ctx);
      Rational dev = abs(est.value.to_rational() - table.at(static_cast<unsigned>(m)));
      if (dev > max_dev) max_dev = dev;
    }
    bool pass = max_dev < tol;
    std::cout << "oracle m=1.." << oracle_m << ": " << (pass ? "PASS" : "FAIL")
              << "  (max deviation " << format_scientific_upper(max_dev)
              << " < 1e-7)\n";
    all_pass = all_pass && pass;
  }

  if (cross_d >= 1) {
    std::vector<GammaApproximation> runs;
    for (int level = 2; level <= 7; ++level) {
      runs.push_back(gamma_series(plan_for_digits(cross_d, level)));
    }
    bool pass = true;
    Rational worst_gap(0);
    for (std::size_t i = 0; i < runs.size(); ++i) {
      for (std::size_t j = i + 1; j < runs.size(); ++j) {
        Rational diff =
            abs(runs[i].value.to_rational() - runs[j].value.to_rational());
        Rational combined = runs[i].total_error_bound + runs[j].total_error_bound;
        if (diff > combined) pass = false;
        if (diff > worst_gap) worst_gap = diff;
      }
    }
    std::cout << "cross-level D=" << cross_d << ": " << (pass ? "PASS" : "FAIL")
              << "  (max pair gap " << format_scientific_upper(worst_gap) << ")\n";
    all_pass = all_pass && pass;
  }

  if (eta_flag) {
    PrecisionCtx ctx(160);
    bool pass = true;
    Log2Enclosure ln2 = log2_enclosure(ctx);
    for (int level : {2, 3, 4}) {
      Bounded v = eta_level_series(1, level, 40, ctx);
      if (!(v.lower() <= ln2.hi && v.upper() >= ln2.lo)) pass = false;
    }
    Bounded a = eta_level_series(2, 2, 40, ctx);
    Bounded b = eta_level_series(2, 4, 40, ctx);
    if (!(a.lower() <= b.upper() && b.lower() <= a.upper())) pass = false;
    std::cout << "eta: " << (pass ? "PASS" : "FAIL")
              << "  (s=1 matches the log at levels 2,3,4; s=2 levels 2/4 overlap)\n";
    all_pass = all_pass && pass;
  }

  std::cout << (all_pass ? "VERIFY PASS" : "VERIFY FAIL") << "\n";
  return all_pass ? 0 : 1;
}

// ------------------------------------------------------------------ eta ---

int run_eta(long s, int level, long terms, long shown, const FormatOpt& format) {
  PrecisionCtx ctx(delta_frac_bits(shown));
  auto start = Clock::now();
  Bounded v = eta_level_series(s, level, terms, ctx);
  long long elapsed = ms_since(start);

  std::string value_str = fx_to_decimal(v.value, shown);
  std::string bound_str = format_scientific_upper(v.error_bound());
  long certified = certified_digits(v.value.to_rational(), v.error_bound(), shown);

  if (format.as_json()) {
    json out;
    out["value"] = value_str;
    out["error_bound"] = bound_str;
    out["s"] = s;
    out["level"] = level;
    out["terms"] = terms;
    out["frac_bits"] = ctx.frac_bits();
    out["elapsed_ms"] = elapsed;
    out["digits_certified"] = certified;
    std::cout << out.dump(2) << "\n";
  } else if (format.latex()) {
    std::cout << "$s=" << s << "$ & $\\ell=" << level << "$ & $" << value_str
              << "\\dots$ & $\\leq " << latex_sci(bound_str) << "$ \\\\\n";
  } else {
    std::cout << value_str << "\n";
    std::cout << "# error_bound <= " << bound_str << "\n";
    std::cout << "# s " << s << "  level " << level << "  terms " << terms
              << "  frac_bits " << ctx.frac_bits() << "\n";
    std::cout << "# digits_certified " << certified << " of " << shown << "\n";
    std::cout << "# elapsed_ms " << elapsed << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"High-precision evaluation of Euler's constant via dyadic-block series"};
  app.require_subcommand(1);

  // gamma
  GammaArgs gamma_args;
  auto* gamma_cmd = app.add_subcommand("gamma", "Compute the constant");
  gamma_args.opt_digits =
      gamma_cmd->add_option("--digits", gamma_args.digits, "Decimal digit target")
          ->check(CLI::PositiveNumber);
  gamma_args.opt_terms =
      gamma_cmd->add_option("--terms", gamma_args.terms, "Fixed number of series terms")
          ->check(CLI::NonNegativeNumber);
  gamma_args.opt_digits->excludes(gamma_args.opt_terms);
  gamma_args.opt_terms->excludes(gamma_args.opt_digits);
  gamma_args.opt_level =
      gamma_cmd->add_option("--level", gamma_args.level, "Block level (2-7)")
          ->check(CLI::Range(2, 7));
  gamma_cmd->add_option("--cost", gamma_args.cost,
                        "Cost exponent for automatic level choice")
      ->check(CLI::PositiveNumber);
  gamma_cmd->add_option("--digits-shown", gamma_args.shown, "Digits to display")
      ->check(CLI::PositiveNumber);
  add_format_option(gamma_cmd, gamma_args.format);
  gamma_cmd->add_flag("--verbose", gamma_args.verbose,
                      "Log a progress line per 100 terms to stderr");

  // em
  long em_from = 0, em_to = 0;
  FormatOpt em_format;
  auto* em_cmd = app.add_subcommand("em", "Exact series coefficients");
  em_cmd->add_option("--from", em_from, "First index")->check(CLI::NonNegativeNumber);
  auto* em_to_opt =
      em_cmd->add_option("--to", em_to, "Last index")->check(CLI::NonNegativeNumber);
  add_format_option(em_cmd, em_format);

  // cm
  long cm_from = 0, cm_to = 0, cm_s = 1;
  FormatOpt cm_format;
  auto* cm_cmd = app.add_subcommand("cm", "Exact auxiliary coefficients at integer s");
  cm_cmd->add_option("--s", cm_s, "Series argument (integer >= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  cm_cmd->add_option("--from", cm_from, "First index")->check(CLI::NonNegativeNumber);
  auto* cm_to_opt =
      cm_cmd->add_option("--to", cm_to, "Last index")->check(CLI::NonNegativeNumber);
  add_format_option(cm_cmd, cm_format);

  // delta
  long delta_from = 1, delta_to = 20, delta_shown = 12;
  FormatOpt delta_format;
  auto* delta_cmd =
      app.add_subcommand("delta", "Coefficient offsets from the harmonic quotient");
  delta_cmd->add_option("--from", delta_from, "First index")
      ->check(CLI::NonNegativeNumber);
  delta_cmd->add_option("--to", delta_to, "Last index")->check(CLI::NonNegativeNumber);
  delta_cmd->add_option("--digits-shown", delta_shown, "Digits to display")
      ->check(CLI::PositiveNumber);
  add_format_option(delta_cmd, delta_format);

  // table
  int table_which = 0;
  FormatOpt table_format;
  auto* table_cmd = app.add_subcommand("table", "Reproduce a summary table (1, 2, or 3)");
  table_cmd->add_option("which", table_which, "Table id")->required();
  add_format_option(table_cmd, table_format);

  // plan
  long plan_digits = 0;
  int plan_level = 0;
  double plan_cost = 2.0;
  FormatOpt plan_format;
  auto* plan_cmd = app.add_subcommand("plan", "Plan a digit computation without running it");
  plan_cmd->add_option("--digits", plan_digits, "Decimal digit target")
      ->required()
      ->check(CLI::PositiveNumber);
  plan_cmd->add_option("--level", plan_level, "Block level (2-7)")->check(CLI::Range(2, 7));
  plan_cmd->add_option("--cost", plan_cost, "Cost exponent for automatic level choice")
      ->check(CLI::PositiveNumber);
  add_format_option(plan_cmd, plan_format);

  // verify
  long verify_bounds_m = -1, verify_oracle_m = -1, verify_cross_d = -1;
  bool verify_eta = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification checks");
  auto* vb = verify_cmd->add_option("--bounds", verify_bounds_m,
                                    "Check coefficient bounds for m up to this index")
                 ->check(CLI::NonNegativeNumber);
  auto* vo = verify_cmd->add_option("--oracle", verify_oracle_m,
                                    "Check the derivative estimate for m up to this index")
                 ->check(CLI::PositiveNumber);
  auto* vc = verify_cmd->add_option("--cross-level", verify_cross_d,
                                    "Cross-check all levels at this digit target")
                 ->check(CLI::PositiveNumber);
  auto* ve = verify_cmd->add_flag("--eta", verify_eta,
                                  "Check the alternating-series identities");

  // eta
  long eta_s = 1, eta_terms = 40, eta_shown = 20;
  int eta_level = 3;
  FormatOpt eta_format;
  auto* eta_cmd = app.add_subcommand("eta", "Evaluate the alternating series at integer s");
  eta_cmd->add_option("--s", eta_s, "Argument (integer >= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  eta_cmd->add_option("--level", eta_level, "Block level (2-7)")->check(CLI::Range(2, 7));
  eta_cmd->add_option("--terms", eta_terms, "Correction terms")->check(CLI::PositiveNumber);
  eta_cmd->add_option("--digits-shown", eta_shown, "Digits to display")
      ->check(CLI::PositiveNumber);
  add_format_option(eta_cmd, eta_format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gamma_cmd->parsed()) return run_gamma(gamma_args);
    if (em_cmd->parsed()) {
      if (em_to_opt->count() == 0) {
        std::cerr << "em: --to is required\n";
        return 2;
      }
      return run_coefficient_list(em_from, em_to, 0, em_format);
    }
    if (cm_cmd->parsed()) {
      if (cm_to_opt->count() == 0) {
        std::cerr << "cm: --to is required\n";
        return 2;
      }
      return run_coefficient_list(cm_from, cm_to, cm_s, cm_format);
    }
    if (delta_cmd->parsed())
      return run_delta(delta_from, delta_to, delta_shown, delta_format);
    if (table_cmd->parsed()) return run_table(table_which, table_format);
    if (plan_cmd->parsed())
      return run_plan(plan_digits, plan_level, plan_cost, plan_format);
    if (verify_cmd->parsed()) {
      bool any = vb->count() || vo->count() || vc->count() || ve->count();
      return run_verify(verify_bounds_m, verify_oracle_m, verify_cross_d, verify_eta,
                        any);
    }
    if (eta_cmd->parsed())
      return run_eta(eta_s, eta_level, eta_terms, eta_shown, eta_format);
  } catch (const PlanLimitError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid request: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid request: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
