#pragma once

// The full invariant suite behind `polyiamond verify`.

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "polyiamond/bounds.hpp"
#include "polyiamond/enumerate.hpp"
#include "polyiamond/geometry.hpp"
#include "polyiamond/recurrence.hpp"
#include "polyiamond/verify.hpp"

namespace polyiamond {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteOptions {
  int n_max = 10;
  unsigned workers = 1;
  int oracle_max = 10;
  int series_order = 1000;
};

namespace detail {
inline std::string describe(const InequalityReport& r) {
  const auto failures = r.failures();
  if (failures.empty()) return std::to_string(r.checks.size()) + " comparisons";
  const auto& f = failures.front();
  return std::to_string(failures.size()) + " failing, first " + f.name + " at n=" + std::to_string(f.n) + ": " +
         f.lhs.get_str() + " > " + f.rhs.get_str();
}

inline std::string first_difference(const CountTable& a, const CountTable& b, int from = 0) {
  for (int n = from; n <= std::min(a.n_max(), b.n_max()); ++n)
    if (a.values[n] != b.values[n])
      return "differ at n=" + std::to_string(n) + ": " + a.values[n].get_str() + " vs " + b.values[n].get_str();
  return a.n_max() == b.n_max() ? "identical" : "lengths differ";
}

inline bool tables_equal_from(const CountTable& a, const CountTable& b, int from) {
  if (a.n_max() != b.n_max()) return false;
  for (int n = from; n <= a.n_max(); ++n)
    if (a.values[n] != b.values[n]) return false;
  return true;
}
}  // namespace detail

inline std::vector<CheckResult> run_verification(const Geometry& geo, const SuiteOptions& opt) {
  std::vector<CheckResult> results;
  const int n = opt.n_max;

  const CountTable tri = count_fixed(n, Representation::Triangle, opt.workers);
  const CountTable hex = count_fixed(n, Representation::Hex, opt.workers);

  {
    const bool ok = tri.values[1] == 2 && hex.values[1] == 1 && (n < 3 || tri.values[3] == 6);
    results.push_back({"known small counts", ok, "T(1)=2 triangle, T(1)=1 hex, T(3)=6"});
  }
  {
    const int m = std::min(n, opt.oracle_max);
    bool ok = true;
    std::string detail;
    for (auto rep : {Representation::Triangle, Representation::Hex}) {
      const CountTable fast = count_fixed(m, rep, opt.workers);
      const CountTable slow = count_fixed_oracle(m, rep);
      if (!detail::tables_equal_from(fast, slow, 1)) {
        ok = false;
        detail += std::string(to_string(rep)) + " " + detail::first_difference(fast, slow, 1) + "; ";
      }
    }
    results.push_back({"oracle equivalence n<=" + std::to_string(m), ok, ok ? "both representations" : detail});
  }
  results.push_back({"representation equivalence", detail::tables_equal_from(tri, hex, 2),
                     "n>=2: " + detail::first_difference(tri, hex, 2)});

  {
    bool ok = true;
    std::string detail;
    try {
      validate(geo);
    } catch (const ValidationError& e) {
      ok = false;
      detail = e.what();
    }
    results.push_back({"geometry invariants", ok, ok ? "g, h, k, g' valid" : detail});
  }
  {
    const ClosureReport closure = check_closure(geo);
    std::string detail;
    for (const auto& step : closure.steps)
      if (!step.holds())
        detail += std::string(to_string(step.parent)) + "->" + std::string(to_string(step.child)) + " does not fit; ";
    if (!closure.observation_down) detail += "g not below/right; ";
    if (!closure.observation_up) detail += "g' not below/right; ";
    if (!closure.g_to_g_prime) detail += "g' is not a symmetric image of g; ";
    results.push_back({"geometry closure", closure.holds(), closure.holds() ? "every decomposition step fits" : detail});
  }

  const int marked_n = std::min(n, current_caps().count_marked);
  const MarkedTables marked = count_marked(geo, marked_n, opt.workers);
  const CountTable g_prime = count_marked(geo.g_prime, marked_n, opt.workers);
  results.push_back({"g' table equals g table", detail::tables_equal_from(marked.g, g_prime, 0),
                     detail::first_difference(marked.g, g_prime)});

  {
    const auto r = verify_proposition1(marked.g, marked.h, marked.k);
    results.push_back({"marked-count recurrence inequalities", r.passed(), detail::describe(r)});
  }

  const int hat_order = std::max(opt.series_order + 1, n);
  const BoundSequences hats = hat_sequences(hat_order);
  {
    CountTable hex_trim = hex;
    hex_trim.values.resize(static_cast<std::size_t>(marked_n) + 1);
    const auto r = verify_observation(hex_trim, marked.g, hats.g_hat);
    results.push_back({"T(n) <= 2 G_n and T(n) <= 2 Ghat_n", r.passed(), detail::describe(r)});
  }
  {
    const auto r = dominance_check(marked, hats);
    results.push_back({"dominance G,H,K <= Ghat,Hhat,Khat", r.passed(), detail::describe(r)});
  }
  {
    const auto r = verify_series_identities(hats, opt.series_order);
    std::string detail = std::to_string(r.coefficients_checked) + " coefficients";
    if (!r.passed())
      detail = r.mismatches.front().identity + " fails at order " + std::to_string(r.mismatches.front().index);
    results.push_back({"series identities to order " + std::to_string(opt.series_order), r.passed(), detail});
  }
  {
    const auto s = solve_bound<double>();
    const double closed = solve_cubic_closed_form<double>();
    const bool ok = s.residual_cubic < 1e-12 && std::abs(cubic(closed)) < 1e-12 && s.closed_form_gap < 1e-12 &&
                    s.residual_saddle.first < 1e-12 && s.residual_saddle.second < 1e-12 && s.lambda_upper < 3.6108 &&
                    reduction_identity_exact() && cubic_sign_changes(1000) == 1;
    results.push_back({"root residuals and bound", ok, "lambda_upper=" + format_real(s.lambda_upper)});
  }
  {
    const auto r = verify_supermultiplicative(tri);
    results.push_back({"supermultiplicativity", r.passed(), detail::describe(r)});
  }
  {
    const GrowthEstimate lower = lower_bound_fekete(tri);
    const double upper = solve_bound<double>().lambda_upper;
    results.push_back({"lower bound below upper bound", lower.value < upper,
                       "max T(n)^(1/n) = " + format_real(lower.value) + " at n=" + std::to_string(lower.n_used)});
  }
  return results;
}

}  // namespace polyiamond
