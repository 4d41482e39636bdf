// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "polyiamond/polyiamond.hpp"

using namespace polyiamond;

namespace {

struct Line {
  std::string id;
  bool passed;
  double seconds;
  double limit;
  std::string detail;
};

std::vector<Line> lines;

// Runs `body`, which fills `detail` and returns the verdict; the time limit is part of the verdict.
void criterion(const std::string& id, double limit_seconds, const std::function<bool(std::string&)>& body) {
  std::string detail;
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s > limit_seconds) {
    ok = false;
    detail += " [over time limit]";
  }
  lines.push_back({id, ok, s, limit_seconds, detail});
  std::printf("%s %-3s %8.3fs (limit %gs)  %s\n", ok ? "PASS" : "FAIL", id.c_str(), s, limit_seconds, detail.c_str());
  std::fflush(stdout);
}

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string str(const BigInt& v) { return v.get_str(); }

}  // namespace

int main() {
  const double lambda = solve_bound<double>().lambda_upper;

  criterion("1", 1.0, [](std::string& d) {
    const CountTable t = count_fixed(9, Representation::Triangle);
    const long want[] = {0, 2, 3, 6, 14, 36};
    bool ok = t.values[9] == 1838;
    for (int n = 1; n <= 5; ++n) ok = ok && t.values[n] == want[n];
    d = "T(1..5)=" + str(t.values[1]) + "," + str(t.values[2]) + "," + str(t.values[3]) + "," + str(t.values[4]) +
        "," + str(t.values[5]) + " T(9)=" + str(t.values[9]);
    return ok;
  });

  criterion("2", 120.0, [](std::string& d) {
    bool ok = true;
    for (auto rep : {Representation::Triangle, Representation::Hex}) {
      const CountTable fast = count_fixed(10, rep, workers());
      const CountTable slow = count_fixed_oracle(10, rep);
      for (int n = 1; n <= 10; ++n) ok = ok && fast.values[n] == slow.values[n];
    }
    const CountTable tri = count_fixed(12, Representation::Triangle, workers());
    const CountTable hex = count_fixed(12, Representation::Hex, workers());
    for (int n = 2; n <= 12; ++n) ok = ok && tri.values[n] == hex.values[n];
    d = "oracle n<=10 both representations, hex=triangle 2..12, T(12)=" + str(tri.values[12]);
    return ok;
  });

  criterion("3", 10.0, [](std::string& d) {
    const BoundSequences s = hat_sequences(1001);
    const std::vector<BigInt> prefix = {1, 1, 2, 5, 13, 36, 104, 309, 939, 2905};
    const bool prefix_ok = std::equal(prefix.begin(), prefix.end(), s.g_hat.begin());
    const IdentityReport r = verify_series_identities(s, 1000);
    d = std::string("Ghat[0..9] ") + (prefix_ok ? "matches" : "differs") + ", " +
        std::to_string(r.coefficients_checked) + " identity coefficients, " + std::to_string(r.mismatches.size()) +
        " mismatches";
    return prefix_ok && r.passed();
  });

  criterion("4", 1.0, [](std::string& d) {
    const double newton = solve_cubic_newton(1e-14);
    const double closed = solve_cubic_closed_form<double>();
    const auto s = solve_bound<double>();
    const auto x = solve_bound<ExtendedReal>();
    const bool six = x.lambda_upper.str(6, std::ios_base::fixed) == "3.610719";
    const bool ok = std::abs(cubic(newton)) < 1e-12 && std::abs(cubic(closed)) < 1e-12 &&
                    std::abs(newton - closed) < 1e-12 && s.lambda_upper < 3.6108 && six &&
                    s.residual_saddle.first < 1e-12 && s.residual_saddle.second < 1e-12 &&
                    x.residual_saddle.first < ExtendedReal("1e-12") && x.residual_saddle.second < ExtendedReal("1e-12");
    d = "z=" + format_real(newton) + " lambda=" + x.lambda_upper.str(6, std::ios_base::fixed) +
        " gap=" + format_real(std::abs(newton - closed));
    return ok;
  });

  criterion("5", 1800.0, [](std::string& d) {
    const auto t0 = std::chrono::steady_clock::now();
    const CountTable t12 = count_fixed(12, Representation::Hex, workers());
    const double s12 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const CountTable t = count_fixed(14, Representation::Hex, workers());
    const BoundSequences s = hat_sequences(14);
    bool ok = s12 < 60.0 && t12.values[12] == t.values[12];
    for (int n = 1; n <= 14; ++n) ok = ok && t.values[n] <= 2 * s.g_hat[n];
    d = "T(14)=" + str(t.values[14]) + " <= 2*Ghat_14=" + str(2 * s.g_hat[14]) + ", n=12 in " +
        std::to_string(s12) + "s";
    return ok;
  });

  criterion("6", 600.0, [](std::string& d) {
    const Geometry geo = default_geometry();
    const MarkedTables m = count_marked(geo, 12, workers());
    const CountTable gp = count_marked(geo.g_prime, 12, workers());
    const CountTable t = count_fixed(12, Representation::Hex, workers());
    const BoundSequences s = hat_sequences(12);
    const auto p = verify_proposition1(m.g, m.h, m.k);
    const auto o = verify_observation(t, m.g);
    const auto dom = dominance_check(m, s);
    const bool sym = gp.values == m.g.values;
    d = "prop " + std::to_string(p.failures().size()) + " fail, T<=2G " + std::to_string(o.failures().size()) +
        " fail, dominance " + std::to_string(dom.failures().size()) + " fail, g'=g " + (sym ? "yes" : "no") +
        ", G_12=" + str(m.g.values[12]);
    return p.passed() && o.passed() && dom.passed() && sym && check_closure(geo).holds();
  });

  criterion("7a", 60.0, [lambda](std::string& d) {
    const CountTable t = count_fixed(12, Representation::Triangle, workers());
    const GrowthEstimate f = lower_bound_fekete(t);
    d = "Fekete max T(n)^(1/n)=" + format_real(f.value) + " at n=" + std::to_string(f.n_used) + " (desk-scale substitute)";
    return std::abs(f.value - 2.41) <= 0.05 && f.value < lambda;
  });

  criterion("7b", 60.0, [lambda](std::string& d) {
    const CountTable t = count_fixed(12, Representation::Triangle, workers());
    const HybridSequence u = u_sequence(t, 12, 400);
    const double r = ratio_to_double(u.values[400], u.values[399]);
    d = "U(400)/U(399)=" + format_real(r) + ", corridor (" + format_real(lambda - 0.4) +
        ", 4.0) (desk-scale substitute, n0=12)";
    return r > lambda - 0.4 && r < 4.0;
  });

  criterion("8", 60.0, [lambda](std::string& d) {
    const BoundSequences s = hat_sequences(2000);
    const double ratio = growth_estimate(s.g_hat, GrowthMethod::Ratio).value;
    const double aitken = growth_estimate(s.g_hat, GrowthMethod::AitkenExtrapolated).value;
    const double reference = 3.610719;
    d = "ratio=" + format_real(ratio) + " aitken=" + format_real(aitken);
    return std::abs(ratio - reference) / reference < 2e-3 && std::abs(aitken - reference) < 1e-4 &&
           std::abs(lambda - reference) < 1e-6;
  });

  criterion("9", 1.0, [](std::string& d) {
    const CountTable t = count_fixed(12, Representation::Triangle, workers());
    const auto r = verify_supermultiplicative(t);
    const bool excluded_fails = t.values[2] < t.values[1] * t.values[1];
    d = std::to_string(r.checks.size()) + " pairs, " + std::to_string(r.failures().size()) + " failures; T(2)=" +
        str(t.values[2]) + " < T(1)^2=" + str(t.values[1] * t.values[1]);
    return r.passed() && excluded_fails;
  });

  int failed = 0;
  for (const auto& l : lines) failed += !l.passed;
  std::printf("%d/%zu criteria passed\n", static_cast<int>(lines.size()) - failed, lines.size());
  return failed ? 1 : 0;
}
