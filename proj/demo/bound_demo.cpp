// Walks through the bound at desk scale: exact counts, the majorizing
// sequence, and the numeric root.

#include <cstdio>

#include "polyiamond/polyiamond.hpp"

int main() {
  using namespace polyiamond;

  const CountTable t = count_fixed(12, Representation::Triangle);
  const BoundSequences hats = hat_sequences(12);
  std::printf("%3s %10s %12s\n", "n", "T(n)", "2*Ghat_n");
  for (int n = 1; n <= 12; ++n) {
    const BigInt twice = 2 * hats.g_hat[n];
    std::printf("%3d %10s %12s\n", n, t.values[n].get_str().c_str(), twice.get_str().c_str());
  }

  const auto s = solve_bound<double>();
  const auto lower = lower_bound_fekete(t);
  std::printf("\nz = %.12f\nupper bound 1+2z+3z^2 = %.12f\n", s.z, s.lambda_upper);
  std::printf("lower bound from T(%d): %.6f\n", lower.n_used, lower.value);
  return 0;
}
