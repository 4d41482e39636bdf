#pragma once

// Majorizing sequences obtained by turning the marked-vertex inequalities into
// equalities:
//
//   G^_n = sum_{i+j=n-1} G^_i H^_j,  H^_n = sum_{i+j=n-1} G^_i K^_j,  K^_n = G^_{n-1},
//
// with G^_0 = H^_0 = K^_0 = 1. Their generating functions satisfy
// g = 1 + x g h, h = 1 + x g k, k = 1 + x g, and z = x g solves
// z / x = 1 + z + z^2 + z^3.

#include <iomanip>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "polyiamond/bigint.hpp"
#include "polyiamond/enumerate.hpp"
#include "polyiamond/errors.hpp"
#include "polyiamond/verify.hpp"

namespace polyiamond {

struct BoundSequences {
  std::vector<BigInt> g_hat;
  std::vector<BigInt> h_hat;
  std::vector<BigInt> k_hat;

  int order() const { return static_cast<int>(g_hat.size()) - 1; }
};

inline BoundSequences hat_sequences(int order) {
  if (order < 0) throw InputError("hat_sequences: order must be nonnegative");
  const auto len = static_cast<std::size_t>(order) + 1;
  BoundSequences s;
  s.g_hat.assign(len, 0);
  s.h_hat.assign(len, 0);
  s.k_hat.assign(len, 0);
  s.g_hat[0] = s.h_hat[0] = s.k_hat[0] = 1;
  for (std::size_t n = 1; n < len; ++n) {
    mpz_ptr g = s.g_hat[n].get_mpz_t();
    mpz_ptr h = s.h_hat[n].get_mpz_t();
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = n - 1 - i;
      mpz_addmul(g, s.g_hat[i].get_mpz_t(), s.h_hat[j].get_mpz_t());
      mpz_addmul(h, s.g_hat[i].get_mpz_t(), s.k_hat[j].get_mpz_t());
    }
    s.k_hat[n] = s.g_hat[n - 1];
  }
  return s;
}

struct IdentityMismatch {
  std::string identity;
  int index = 0;
  BigInt expected;
  BigInt actual;
};

struct IdentityReport {
  int order = 0;
  int coefficients_checked = 0;
  std::vector<IdentityMismatch> mismatches;

  bool passed() const { return mismatches.empty(); }
};

/// Coefficient-exact check of the four functional equations up to `order`.
/// Products are formed by independent convolutions, not by the recurrence.
inline IdentityReport verify_series_identities(const BoundSequences& s, int order) {
  if (order < 0 || s.order() < order + 1) throw InputError("verify_series_identities: sequences too short");
  IdentityReport report;
  report.order = order;
  const auto len = static_cast<std::size_t>(order) + 1;
  const std::span<const BigInt> g(s.g_hat.data(), len), h(s.h_hat.data(), len), k(s.k_hat.data(), len);

  auto check = [&](const char* name, int n, const BigInt& expected, const BigInt& actual) {
    ++report.coefficients_checked;
    if (expected != actual) report.mismatches.push_back({name, n, expected, actual});
  };

  const auto gh = convolve(g, h, len);
  const auto gk = convolve(g, k, len);
  for (std::size_t n = 0; n < len; ++n) {
    const BigInt one = n == 0 ? 1 : 0;
    check("g = 1 + x g h", static_cast<int>(n), one + (n ? gh[n - 1] : BigInt(0)), g[n]);
    check("h = 1 + x g k", static_cast<int>(n), one + (n ? gk[n - 1] : BigInt(0)), h[n]);
    check("k = 1 + x g", static_cast<int>(n), one + (n ? g[n - 1] : BigInt(0)), k[n]);
  }

  // z_n = G^_{n-1}, z_0 = 0; z_{n+1} = [n = 0] + z_n + [x^n] z^2 + [x^n] z^3.
  std::vector<BigInt> z(len + 1, 0);
  for (std::size_t n = 1; n <= len; ++n) z[n] = s.g_hat[n - 1];
  const std::span<const BigInt> zs(z.data(), len);
  const auto z2 = convolve(zs, zs, len);
  const auto z3 = convolve(std::span<const BigInt>(z2), zs, len);
  for (std::size_t n = 0; n < len; ++n) {
    const BigInt one = n == 0 ? 1 : 0;
    check("z/x = 1 + z + z^2 + z^3", static_cast<int>(n), one + z[n] + z2[n] + z3[n], z[n + 1]);
  }
  return report;
}

/// G_n <= G^_n, H_n <= H^_n, K_n <= K^_n.
inline InequalityReport dominance_check(const MarkedTables& counted, const BoundSequences& s) {
  const int n_max = counted.g.n_max();
  if (counted.h.n_max() != n_max || counted.k.n_max() != n_max) throw InputError("dominance_check: table lengths differ");
  if (s.order() < n_max) throw InputError("dominance_check: hat sequences shorter than tables");
  InequalityReport report;
  for (int n = 0; n <= n_max; ++n) {
    report.checks.push_back({"G<=Ghat", n, counted.g.values[n], s.g_hat[n]});
    report.checks.push_back({"H<=Hhat", n, counted.h.values[n], s.h_hat[n]});
    report.checks.push_back({"K<=Khat", n, counted.k.values[n], s.k_hat[n]});
  }
  return report;
}

// ---------------------------------------------------------------------------
// Hybrid upper-bound sequence U(n)

struct HybridSequence {
  int cutoff = 0;
  std::vector<BigInt> values;  // index 0 unused (0)
  CountTable seed;
};

/// U(n) = seed(n) for n <= cutoff, and for n > cutoff
///   U(n) = floor( sum_{k=ceil((n-1)/3)}^{floor((2n+1)/3)} (k+2)(n-k+2)/4 U(k) U(n-k)
///                 + [n even] (n/2+2)^2/4 U(n/2) ).
/// Every weight has denominator 4, so the sum is accumulated exactly as a
/// multiple of 1/4 and floored once.
inline HybridSequence u_sequence(const CountTable& seed, int cutoff, int length) {
  if (cutoff < 2) throw InputError("u_sequence: cutoff must be at least 2");
  if (seed.n_max() < cutoff) throw InputError("u_sequence: seed shorter than cutoff");
  if (length < cutoff) throw InputError("u_sequence: length must be at least the cutoff");
  HybridSequence u;
  u.cutoff = cutoff;
  u.seed = seed;
  u.values.assign(static_cast<std::size_t>(length) + 1, 0);
  for (int n = 1; n <= cutoff; ++n) u.values[n] = seed.values[n];
  for (int n = cutoff + 1; n <= length; ++n) {
    const int k_lo = (n + 1) / 3;  // ceil((n-1)/3)
    const int k_hi = (2 * n + 1) / 3;
    BigInt quarters = 0;
    for (int k = k_lo; k <= k_hi; ++k) {
      const BigInt weight = static_cast<long>(k + 2) * static_cast<long>(n - k + 2);
      quarters += weight * u.values[k] * u.values[n - k];
    }
    if (n % 2 == 0) {
      const long half = n / 2 + 2;
      quarters += BigInt(half * half) * u.values[n / 2];
    }
    mpz_fdiv_q_ui(u.values[n].get_mpz_t(), quarters.get_mpz_t(), 4);
  }
  return u;
}

// ---------------------------------------------------------------------------
// CSV export

inline void write_hat_csv(std::ostream& out, const BoundSequences& s) {
  out << "n,G_hat,H_hat,K_hat\n";
  for (int n = 0; n <= s.order(); ++n)
    out << n << ',' << s.g_hat[n].get_str() << ',' << s.h_hat[n].get_str() << ',' << s.k_hat[n].get_str() << '\n';
}

/// a / b with `digits` significant digits in scientific notation.
inline std::string ratio_significant(const BigInt& a, const BigInt& b, int digits) {
  const mp_bitcnt_t bits = static_cast<mp_bitcnt_t>(digits * 4 + 64);
  mpf_class num(a, bits), den(b, bits);
  mpf_class q(0, bits);
  q = num / den;
  mp_exp_t exp10 = 0;
  std::string mant = q.get_str(exp10, 10, static_cast<std::size_t>(digits));
  if (mant.empty()) return "0";
  while (static_cast<int>(mant.size()) < digits) mant.push_back('0');
  std::string out;
  out += mant[0];
  out += '.';
  out += mant.substr(1);
  out += 'e';
  const long e = static_cast<long>(exp10) - 1;
  out += e < 0 ? '-' : '+';
  const std::string ed = std::to_string(e < 0 ? -e : e);
  if (ed.size() < 2) out += '0';
  out += ed;
  return out;
}

/// Columns n, U, ratio (U(n)/U(n-1), 20 significant digits; empty for n = 1).
inline void write_u_csv(std::ostream& out, const HybridSequence& u) {
  out << "n,U,ratio\n";
  for (std::size_t n = 1; n < u.values.size(); ++n) {
    out << n << ',' << u.values[n].get_str() << ',';
    if (n > 1) out << ratio_significant(u.values[n], u.values[n - 1], 20);
    out << '\n';
  }
}

}  // namespace polyiamond
