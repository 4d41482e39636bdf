#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "polyiamond/bigint.hpp"
#include "polyiamond/enumerate.hpp"
#include "polyiamond/errors.hpp"

namespace polyiamond {

/// One exact comparison lhs <= rhs at index n.
struct Inequality {
  std::string name;
  int n = 0;
  BigInt lhs;
  BigInt rhs;

  bool holds() const { return lhs <= rhs; }
};

struct InequalityReport {
  std::vector<Inequality> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Inequality& c) { return c.holds(); });
  }
  std::vector<Inequality> failures() const {
    std::vector<Inequality> out;
    std::copy_if(checks.begin(), checks.end(), std::back_inserter(out), [](const Inequality& c) { return !c.holds(); });
    return out;
  }
};

namespace detail {
inline BigInt convolution_term(const CountTable& a, const CountTable& b, int n) {
  BigInt sum = 0;
  for (int i = 0; i <= n; ++i) mpz_addmul(sum.get_mpz_t(), a.values[i].get_mpz_t(), b.values[n - i].get_mpz_t());
  return sum;
}
}  // namespace detail

/// G_n <= sum G_i H_j, H_n <= sum G_i K_j, K_n <= G_{n-1} over i + j = n - 1.
inline InequalityReport verify_proposition1(const CountTable& g, const CountTable& h, const CountTable& k) {
  if (g.values.size() != h.values.size() || g.values.size() != k.values.size())
    throw InputError("verify_proposition1: tables differ in length");
  InequalityReport report;
  for (int n = 1; n <= g.n_max(); ++n) {
    report.checks.push_back({"G", n, g.values[n], detail::convolution_term(g, h, n - 1)});
    report.checks.push_back({"H", n, h.values[n], detail::convolution_term(g, k, n - 1)});
    report.checks.push_back({"K", n, k.values[n], g.values[n - 1]});
  }
  return report;
}

/// T(n) <= 2 G_n for n >= 1; with `g_hat` also T(n) <= 2 G^_n.
inline InequalityReport verify_observation(const CountTable& t, const CountTable& g,
                                           std::span<const BigInt> g_hat = {}) {
  if (t.values.size() != g.values.size()) throw InputError("verify_observation: tables differ in length");
  if (!g_hat.empty() && g_hat.size() < t.values.size())
    throw InputError("verify_observation: hat sequence shorter than the tables");
  InequalityReport report;
  for (int n = 1; n <= t.n_max(); ++n) {
    report.checks.push_back({"T<=2G", n, t.values[n], 2 * g.values[n]});
    if (!g_hat.empty()) report.checks.push_back({"T<=2Ghat", n, t.values[n], 2 * g_hat[n]});
  }
  return report;
}

/// T(l) T(m) <= T(l + m) for l <= m, l + m <= n_max, (l, m) != (1, 1).
/// Each check's n is l + m and its name records the split.
inline InequalityReport verify_supermultiplicative(const CountTable& t) {
  InequalityReport report;
  for (int total = 2; total <= t.n_max(); ++total) {
    for (int l = 1; 2 * l <= total; ++l) {
      const int m = total - l;
      if (l == 1 && m == 1) continue;
      report.checks.push_back({"T(" + std::to_string(l) + ")T(" + std::to_string(m) + ")", total,
                               t.values[l] * t.values[m], t.values[total]});
    }
  }
  return report;
}

}  // namespace polyiamond
