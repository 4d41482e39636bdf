#pragma once

// Command-line front end: argument parsing into a RunConfig and dispatch.
//
// Exit status: 0 success, 1 verification failure, 2 invalid configuration or
// input, 3 resource cap exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "polyiamond/bounds.hpp"
#include "polyiamond/counts_io.hpp"
#include "polyiamond/enumerate.hpp"
#include "polyiamond/geometry.hpp"
#include "polyiamond/recurrence.hpp"
#include "polyiamond/suite.hpp"

namespace polyiamond::cli {

enum class Command { Count, Marked, Recurrence, Bound, Verify };
enum class OutputFormat { Table, Json, Csv };

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kInvalidConfig = 2, kCapExceeded = 3 };

struct RunConfig {
  Command command = Command::Verify;
  std::optional<int> n_max;
  Representation representation = Representation::Triangle;
  std::optional<std::string> geometry_path;
  OutputFormat format = OutputFormat::Table;
  unsigned workers = 1;
  Precision precision = Precision::Double;
  std::optional<std::string> seed_path;
  std::optional<int> cutoff;
  std::optional<std::string> out_path;
};

/// Defaults per command when --n-max is omitted.
inline int default_n_max(Command c) {
  switch (c) {
    case Command::Count: return 10;
    case Command::Marked: return 10;
    case Command::Recurrence: return 30;
    case Command::Bound: return 12;
    case Command::Verify: return 10;
  }
  return 10;
}

/// Upper limits for commands not governed by the enumeration caps.
constexpr int kRecurrenceCap = 10000;

struct ParseOutcome {
  std::optional<RunConfig> config;
  int exit_code = kSuccess;  // meaningful when config is empty (help or error)
  std::string message;
};

inline ParseOutcome parse_args(int argc, const char* const* argv) {
  CLI::App app{"Polyiamond counts, majorizing recurrences and the growth-constant bound"};
  app.require_subcommand(1);
  RunConfig cfg;
  int n_max = 0;
  std::string representation = "triangle", format = "table", precision = "double";
  std::string geometry, seed, out;
  int cutoff = 0;
  int workers = 1;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n-max", n_max, "Largest size or order to compute");
    sub->add_option("--format", format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--out", out, "Write the report to this file instead of stdout");
    sub->add_option("--workers", workers, "Worker threads for enumeration")->check(CLI::PositiveNumber);
  };

  auto* count = app.add_subcommand("count", "Fixed polyiamond counts T(n)");
  add_common(count);
  count->add_option("--representation", representation, "triangle or hex")
      ->check(CLI::IsMember({"triangle", "hex"}));

  auto* marked = app.add_subcommand("marked", "Marked-vertex counts G_n, H_n, K_n");
  add_common(marked);
  marked->add_option("--geometry", geometry, "Geometry JSON file (default: built-in)");

  auto* recurrence = app.add_subcommand("recurrence", "Majorizing sequences, optionally the hybrid U(n)");
  add_common(recurrence);
  recurrence->add_option("--seed", seed, "Counts CSV seeding U(n) (triangle representation)");
  recurrence->add_option("--cutoff", cutoff, "Cutoff n0 for U(n)")->check(CLI::Range(2, 1000000));

  auto* bound = app.add_subcommand("bound", "Root of 2z^3+z^2-1, the upper bound and the Fekete lower bound");
  add_common(bound);
  bound->add_option("--seed", seed, "Counts CSV for the lower bound (default: fresh enumeration)");
  bound->add_option("--precision", precision, "double or extended")->check(CLI::IsMember({"double", "extended"}));

  auto* verify = app.add_subcommand("verify", "Run the full invariant suite");
  add_common(verify);
  verify->add_option("--geometry", geometry, "Geometry JSON file (default: built-in)");

  ParseOutcome outcome;
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    outcome.message = app.help();
    outcome.exit_code = kSuccess;
    return outcome;
  } catch (const CLI::ParseError& e) {
    outcome.message = e.what();
    outcome.exit_code = kInvalidConfig;
    return outcome;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  if (name == "count") cfg.command = Command::Count;
  else if (name == "marked") cfg.command = Command::Marked;
  else if (name == "recurrence") cfg.command = Command::Recurrence;
  else if (name == "bound") cfg.command = Command::Bound;
  else cfg.command = Command::Verify;

  if (chosen->count("--n-max")) cfg.n_max = n_max;
  cfg.representation = representation == "hex" ? Representation::Hex : Representation::Triangle;
  cfg.format = format == "json" ? OutputFormat::Json : format == "csv" ? OutputFormat::Csv : OutputFormat::Table;
  cfg.precision = precision == "extended" ? Precision::Extended : Precision::Double;
  cfg.workers = static_cast<unsigned>(workers);
  if (!geometry.empty()) cfg.geometry_path = geometry;
  if (!seed.empty()) cfg.seed_path = seed;
  if (!out.empty()) cfg.out_path = out;
  if (name == "recurrence" && chosen->count("--cutoff")) cfg.cutoff = cutoff;
  outcome.config = cfg;
  return outcome;
}

namespace detail {

inline std::string json_int_array(const std::vector<BigInt>& values, std::size_t from) {
  std::string out = "[";
  for (std::size_t i = from; i < values.size(); ++i) {
    if (i > from) out += ", ";
    out += values[i].get_str();
  }
  return out + "]";
}

inline void emit_count(const RunConfig& cfg, std::ostream& out) {
  const int n = cfg.n_max.value_or(default_n_max(cfg.command));
  const CountTable t = count_fixed(n, cfg.representation, cfg.workers);
  switch (cfg.format) {
    case OutputFormat::Csv: write_counts_csv(out, t, "T"); break;
    case OutputFormat::Json:
      out << "{\"representation\": \"" << to_string(t.representation) << "\", \"n_max\": " << n
          << ", \"T\": " << json_int_array(t.values, 1) << "}\n";
      break;
    case OutputFormat::Table:
      out << "# fixed polyiamonds, " << to_string(t.representation) << " representation\n";
      out << "n, T(n)\n";
      for (int i = 1; i <= n; ++i) out << i << ", " << t.values[i].get_str() << '\n';
      break;
  }
}

inline Geometry geometry_for(const RunConfig& cfg) {
  return cfg.geometry_path ? load_geometry(*cfg.geometry_path) : default_geometry();
}

inline void emit_marked(const RunConfig& cfg, std::ostream& out) {
  const int n = cfg.n_max.value_or(default_n_max(cfg.command));
  const Geometry geo = geometry_for(cfg);
  const MarkedTables m = count_marked(geo, n, cfg.workers);
  switch (cfg.format) {
    case OutputFormat::Csv:
      out << "n,G,H,K\n";
      for (int i = 0; i <= n; ++i)
        out << i << ',' << m.g.values[i].get_str() << ',' << m.h.values[i].get_str() << ',' << m.k.values[i].get_str()
            << '\n';
      break;
    case OutputFormat::Json:
      out << "{\"n_max\": " << n << ", \"G\": " << json_int_array(m.g.values, 0)
          << ", \"H\": " << json_int_array(m.h.values, 0) << ", \"K\": " << json_int_array(m.k.values, 0) << "}\n";
      break;
    case OutputFormat::Table:
      out << "# marked-vertex counts (" << (cfg.geometry_path ? *cfg.geometry_path : "built-in geometry") << ")\n";
      out << "n, G_n, H_n, K_n\n";
      for (int i = 0; i <= n; ++i)
        out << i << ", " << m.g.values[i].get_str() << ", " << m.h.values[i].get_str() << ", "
            << m.k.values[i].get_str() << '\n';
      break;
  }
}

inline void emit_recurrence(const RunConfig& cfg, std::ostream& out) {
  const int n = cfg.n_max.value_or(default_n_max(cfg.command));
  if (n < 0) throw InputError("--n-max must be nonnegative");
  if (n > kRecurrenceCap)
    throw SizeLimitError("recurrence: n_max " + std::to_string(n) + " exceeds cap " + std::to_string(kRecurrenceCap));

  if (cfg.seed_path || cfg.cutoff) {
    CountTable seed = cfg.seed_path ? load_counts_csv(*cfg.seed_path, Representation::Triangle)
                                    : count_fixed(*cfg.cutoff, Representation::Triangle, cfg.workers);
    const int n0 = cfg.cutoff.value_or(seed.n_max());
    const HybridSequence u = u_sequence(seed, n0, std::max(n, n0));
    switch (cfg.format) {
      case OutputFormat::Csv: write_u_csv(out, u); break;
      case OutputFormat::Json:
        out << "{\"cutoff\": " << n0 << ", \"U\": " << json_int_array(u.values, 1) << "}\n";
        break;
      case OutputFormat::Table:
        out << "# hybrid sequence U(n), cutoff n0 = " << n0
            << " (values depend on n0)\n";
        write_u_csv(out, u);
        break;
    }
    return;
  }

  const BoundSequences s = hat_sequences(n);
  switch (cfg.format) {
    case OutputFormat::Csv: write_hat_csv(out, s); break;
    case OutputFormat::Json:
      out << "{\"G_hat\": " << json_int_array(s.g_hat, 0) << ", \"H_hat\": " << json_int_array(s.h_hat, 0)
          << ", \"K_hat\": " << json_int_array(s.k_hat, 0) << "}\n";
      break;
    case OutputFormat::Table:
      out << "# majorizing sequences\n";
      out << "n, G_hat, H_hat, K_hat\n";
      for (int i = 0; i <= n; ++i)
        out << i << ", " << s.g_hat[i].get_str() << ", " << s.h_hat[i].get_str() << ", " << s.k_hat[i].get_str()
            << '\n';
      break;
  }
}

template <class Real>
void emit_bound_as(const RunConfig& cfg, const GrowthEstimate& lower, std::ostream& out) {
  const CubicSolution<Real> s = solve_bound<Real>();
  if (cfg.format == OutputFormat::Table) {
    out << "# growth-constant bound (" << (cfg.precision == Precision::Double ? "double" : "extended")
        << " precision)\n";
    out << "z                " << format_real(s.z) << '\n';
    out << "lambda_upper     " << format_real(s.lambda_upper) << '\n';
    out << "x_c              " << format_real(s.x_c) << '\n';
    out << "residual_cubic   " << format_real(s.residual_cubic) << '\n';
    out << "residual_saddle  " << format_real(s.residual_saddle.first) << ' '
        << format_real(s.residual_saddle.second) << '\n';
    out << "closed_form_gap  " << format_real(s.closed_form_gap) << '\n';
    out << "lambda_upper < 3.6108: " << (s.lambda_upper < Real(36108) / 10000 ? "yes" : "no") << '\n';
    out << "lower_bound      " << format_real(lower.value) << " (max T(n)^(1/n), n=" << lower.n_used
        << "; desk-scale counts only)\n";
  } else {
    // csv has no natural shape for this report; both machine formats emit the JSON object.
    out << bound_report_json(s, lower, cfg.precision);
  }
}

inline void emit_bound(const RunConfig& cfg, std::ostream& out) {
  const CountTable t = cfg.seed_path
                           ? load_counts_csv(*cfg.seed_path, Representation::Triangle)
                           : count_fixed(cfg.n_max.value_or(default_n_max(cfg.command)), Representation::Triangle,
                                         cfg.workers);
  const GrowthEstimate lower = lower_bound_fekete(t);
  if (cfg.precision == Precision::Extended) emit_bound_as<ExtendedReal>(cfg, lower, out);
  else emit_bound_as<double>(cfg, lower, out);
}

inline bool emit_verify(const RunConfig& cfg, std::ostream& out) {
  SuiteOptions opt;
  opt.n_max = cfg.n_max.value_or(default_n_max(cfg.command));
  opt.workers = cfg.workers;
  const auto results = run_verification(geometry_for(cfg), opt);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  if (cfg.format == OutputFormat::Table) {
    for (const auto& r : results) out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    out << (all ? "all checks passed" : "verification FAILED") << '\n';
  } else if (cfg.format == OutputFormat::Csv) {
    out << "check,passed,detail\n";
    for (const auto& r : results) out << '"' << r.name << "\"," << (r.passed ? "true" : "false") << ",\"" << r.detail << "\"\n";
  } else {
    nlohmann::ordered_json j;
    j["n_max"] = opt.n_max;
    j["passed"] = all;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : results) arr.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    j["checks"] = arr;
    out << j.dump(2) << '\n';
  }
  return all;
}

}  // namespace detail

/// Executes one configured command. Reports go to `out` (or --out), diagnostics to `err`.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.workers < 1) {
    err << "error: --workers must be at least 1\n";
    return kInvalidConfig;
  }
  try {
    std::ofstream file;
    std::ostream* sink = &out;
    if (cfg.out_path) {
      file.open(*cfg.out_path);
      if (!file) throw InputError("cannot open output file '" + *cfg.out_path + "'");
      sink = &file;
    }
    switch (cfg.command) {
      case Command::Count: detail::emit_count(cfg, *sink); break;
      case Command::Marked: detail::emit_marked(cfg, *sink); break;
      case Command::Recurrence: detail::emit_recurrence(cfg, *sink); break;
      case Command::Bound: detail::emit_bound(cfg, *sink); break;
      case Command::Verify:
        if (!detail::emit_verify(cfg, *sink)) {
          err << "verification failed\n";
          return kVerificationFailed;
        }
        break;
    }
    return kSuccess;
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidConfig;
  }
}

inline int main(int argc, const char* const* argv) {
  const ParseOutcome parsed = parse_args(argc, argv);
  if (!parsed.config) {
    (parsed.exit_code == kSuccess ? std::cout : std::cerr) << parsed.message << '\n';
    return parsed.exit_code;
  }
  return run(*parsed.config, std::cout, std::cerr);
}

}  // namespace polyiamond::cli
