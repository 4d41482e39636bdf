#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

namespace polyiamond {

/// Exact nonnegative counts and sequence terms.
using BigInt = mpz_class;

inline std::string to_string(const BigInt& value) { return value.get_str(); }

inline BigInt big_from_u64(unsigned long long value) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(value), 0, 0, &value);
  return out;
}

/// Natural logarithm of a positive integer of any size.
inline double log_big(const BigInt& value) {
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

/// a / b rounded to double through an exact rational.
inline double ratio_to_double(const BigInt& a, const BigInt& b) {
  mpq_class q(a, b);
  q.canonicalize();
  return q.get_d();
}

/// out[n] = sum_{i+j=n} a[i] * b[j] for n < length. Schoolbook, fixed summation order.
inline std::vector<BigInt> convolve(std::span<const BigInt> a, std::span<const BigInt> b,
                                    std::size_t length) {
  std::vector<BigInt> out(length, 0);
  if (a.empty() || b.empty()) return out;
  for (std::size_t n = 0; n < length; ++n) {
    mpz_ptr acc = out[n].get_mpz_t();
    const std::size_t hi = std::min(n, a.size() - 1);
    for (std::size_t i = 0; i <= hi; ++i) {
      const std::size_t j = n - i;
      if (j >= b.size()) continue;
      mpz_addmul(acc, a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return out;
}

}  // namespace polyiamond
