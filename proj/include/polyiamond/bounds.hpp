#pragma once

// The growth-rate bound 1 + 2z + 3z^2, where z is the real root of
// 2z^3 + z^2 - 1 = 0, and the numeric checks around it.
//
// All functions are templates over the real type so the same code runs in
// double and in 50-digit decimal arithmetic (ExtendedReal).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ios>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <type_traits>
#include <utility>

#include <boost/math/special_functions/cbrt.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include "polyiamond/bigint.hpp"
#include "polyiamond/enumerate.hpp"
#include "polyiamond/errors.hpp"

namespace polyiamond {

using ExtendedReal = boost::multiprecision::cpp_dec_float_50;

enum class Precision { Double, Extended };

/// f(z) = 2z^3 + z^2 - 1.
template <class Real>
Real cubic(const Real& z) {
  return ((2 * z + 1) * z) * z - 1;
}

template <class Real>
Real cubic_derivative(const Real& z) {
  return (6 * z + 2) * z;
}

/// Cardano's radical form z = (-1 + cbrt(53 + 6 sqrt 78) + cbrt(53 - 6 sqrt 78)) / 6,
/// evaluated as written.
template <class Real>
Real solve_cubic_closed_form() {
  using std::sqrt;
  using boost::multiprecision::sqrt;
  const Real root78 = sqrt(Real(78));
  const Real plus = Real(53) + 6 * root78;
  const Real minus = Real(53) - 6 * root78;
  return (Real(-1) + boost::math::cbrt(plus) + boost::math::cbrt(minus)) / 6;
}

/// Newton iteration from 0.5 until |f(z)| < tol.
template <class Real>
Real solve_cubic_newton(const Real& tol) {
  if (!(tol > 0) || tol > Real(1e-8)) throw InputError("solve_cubic_newton: tol must lie in (0, 1e-8]");
  using std::abs;
  using boost::multiprecision::abs;
  Real z = Real(1) / 2;
  for (int iter = 0; iter < 100; ++iter) {
    const Real f = cubic(z);
    if (abs(f) < tol) return z;
    z -= f / cubic_derivative(z);
  }
  throw NumericError("solve_cubic_newton: no convergence in 100 iterations");
}

template <class Real>
Real lambda_upper(const Real& z) {
  return 1 + (2 + 3 * z) * z;
}

/// Residuals of z/x = 1 + z + z^2 + z^3 and 1/x = 1 + 2z + 3z^2.
template <class Real>
std::pair<Real, Real> saddle_system_check(const Real& x, const Real& z) {
  if (!(x > 0)) throw InputError("saddle_system_check: x must be positive");
  using std::abs;
  using boost::multiprecision::abs;
  const Real series = 1 + z * (1 + z * (1 + z));
  const Real derivative = 1 + z * (2 + 3 * z);
  return {abs(z / x - series), abs(1 / x - derivative)};
}

/// z (1 + 2z + 3z^2) - (1 + z + z^2 + z^3) equals 2z^3 + z^2 - 1 coefficient by
/// coefficient.
inline bool reduction_identity_exact() {
  const int lhs_times_z[4] = {0, 1, 2, 3};  // z * (1 + 2z + 3z^2)
  const int series[4] = {1, 1, 1, 1};
  const int cubic_coeffs[4] = {-1, 0, 1, 2};
  for (int i = 0; i < 4; ++i)
    if (lhs_times_z[i] - series[i] != cubic_coeffs[i]) return false;
  return true;
}

/// Same identity evaluated at `samples` random points of (0, 2); largest absolute deviation.
inline double reduction_identity_sampled(int samples, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 2.0);
  double worst = 0;
  for (int i = 0; i < samples; ++i) {
    const double z = dist(rng);
    const double lhs = z * (1 + 2 * z + 3 * z * z) - (1 + z + z * z + z * z * z);
    worst = std::max(worst, std::abs(lhs - cubic(z)));
  }
  return worst;
}

/// Number of sign changes of f on the grid k / steps, k = 1..steps-1.
inline int cubic_sign_changes(int steps) {
  int changes = 0;
  double prev = cubic(1.0 / steps);
  for (int k = 2; k < steps; ++k) {
    const double cur = cubic(static_cast<double>(k) / steps);
    if ((prev < 0) != (cur < 0)) ++changes;
    prev = cur;
  }
  return changes;
}

template <class Real>
struct CubicSolution {
  Real z;
  Real lambda_upper;
  Real x_c;
  Real residual_cubic;
  std::pair<Real, Real> residual_saddle;
  Real closed_form_gap;  // |z_newton - z_closed_form|
};

/// z from Newton (tolerance near the type's precision), cross-checked against the radical form.
template <class Real>
CubicSolution<Real> solve_bound() {
  using std::abs;
  using boost::multiprecision::abs;
  Real tol;
  if constexpr (std::is_same_v<Real, double>) tol = 1e-14;
  else tol = Real("1e-45");
  const Real z = solve_cubic_newton<Real>(tol);
  const Real closed = solve_cubic_closed_form<Real>();
  CubicSolution<Real> s;
  s.z = z;
  s.lambda_upper = lambda_upper(z);
  s.x_c = 1 / s.lambda_upper;
  s.residual_cubic = abs(cubic(z));
  s.residual_saddle = saddle_system_check(s.x_c, z);
  s.closed_form_gap = abs(z - closed);
  return s;
}

// ---------------------------------------------------------------------------
// Growth estimates

enum class GrowthMethod { Ratio, NthRoot, AitkenExtrapolated };

constexpr std::string_view to_string(GrowthMethod m) {
  switch (m) {
    case GrowthMethod::Ratio: return "ratio";
    case GrowthMethod::NthRoot: return "nth_root";
    case GrowthMethod::AitkenExtrapolated: return "aitken_extrapolated";
  }
  return "?";
}

struct GrowthEstimate {
  GrowthMethod method = GrowthMethod::Ratio;
  int n_used = 0;
  double value = 0;
};

/// Growth diagnostics for seq[0..n], n = size - 1.
///   ratio:   seq[n] / seq[n-1]
///   nth_root: seq[n]^(1/n)
///   aitken:  Aitken delta-squared on the ratios at n/4, n/2, n. Ratios of a
///            sequence with a square-root singularity approach the limit like
///            1/n, so doubling the index makes that error geometric, which is
///            what the delta-squared step removes exactly.
inline GrowthEstimate growth_estimate(std::span<const BigInt> seq, GrowthMethod method) {
  if (seq.size() < 10) throw InputError("growth_estimate: need at least 10 terms");
  for (const auto& v : seq)
    if (sgn(v) <= 0) throw InputError("growth_estimate: terms must be strictly positive");
  const int n = static_cast<int>(seq.size()) - 1;
  auto ratio = [&](int m) { return ratio_to_double(seq[m], seq[m - 1]); };
  switch (method) {
    case GrowthMethod::Ratio: return {method, n, ratio(n)};
    case GrowthMethod::NthRoot: return {method, n, std::exp(log_big(seq[n]) / n)};
    case GrowthMethod::AitkenExtrapolated: {
      const double a = ratio(n / 4), b = ratio(n / 2), c = ratio(n);
      const double denom = (c - b) - (b - a);
      if (denom == 0) return {method, n, c};
      return {method, n, c - (c - b) * (c - b) / denom};
    }
  }
  return {method, n, 0};
}

/// max over 2 <= n <= n_max of T(n)^(1/n). Any such value is a lower bound on
/// the growth constant of a supermultiplicative sequence.
inline GrowthEstimate lower_bound_fekete(const CountTable& t) {
  if (t.n_max() < 2) throw InputError("lower_bound_fekete: need counts up to at least n = 2");
  GrowthEstimate best{GrowthMethod::NthRoot, 0, 0};
  for (int n = 2; n <= t.n_max(); ++n) {
    if (sgn(t.values[n]) <= 0) throw InputError("lower_bound_fekete: counts must be positive");
    const double v = std::exp(log_big(t.values[n]) / n);
    if (v > best.value) best = {GrowthMethod::NthRoot, n, v};
  }
  return best;
}

// ---------------------------------------------------------------------------
// Report formatting

/// 17 significant digits, scientific notation.
inline std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

inline std::string format_real(const ExtendedReal& v) { return v.str(16, std::ios_base::scientific); }

/// JSON object {z, lambda_upper, x_c, residuals, lower_bound, n_used, method}.
template <class Real>
std::string bound_report_json(const CubicSolution<Real>& s, const std::optional<GrowthEstimate>& lower,
                              Precision precision) {
  std::string out = "{\n";
  out += "  \"z\": " + format_real(s.z) + ",\n";
  out += "  \"lambda_upper\": " + format_real(s.lambda_upper) + ",\n";
  out += "  \"x_c\": " + format_real(s.x_c) + ",\n";
  out += "  \"residuals\": {\"cubic\": " + format_real(s.residual_cubic) +
         ", \"saddle_series\": " + format_real(s.residual_saddle.first) +
         ", \"saddle_derivative\": " + format_real(s.residual_saddle.second) +
         ", \"closed_form_gap\": " + format_real(s.closed_form_gap) + "},\n";
  if (lower) {
    out += "  \"lower_bound\": " + format_real(lower->value) + ",\n";
    out += "  \"n_used\": " + std::to_string(lower->n_used) + ",\n";
  } else {
    out += "  \"lower_bound\": null,\n  \"n_used\": null,\n";
  }
  out += std::string("  \"method\": \"newton+closed_form/") +
         (precision == Precision::Double ? "double" : "extended") + "\"\n}\n";
  return out;
}

}  // namespace polyiamond
