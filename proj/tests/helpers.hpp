// Shared helpers for the unit tests: random parameter draws and multiset
// comparison of complex spectra.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "nhssh/model.hpp"

namespace test {

// Valid, generically non-degenerate parameter draws.  gamma range is kept
// moderate so that random points land in all five spectral regimes.
inline nhssh::ModelParams draw_params(std::mt19937& rng) {
  std::uniform_real_distribution<double> t_d(0.5, 2.0);
  std::uniform_real_distribution<double> delta_d(0.05, 0.95);
  std::uniform_real_distribution<double> theta_d(-M_PI, M_PI);
  std::uniform_real_distribution<double> gamma_d(0.0, 2.5);
  return nhssh::make_params(t_d(rng), delta_d(rng), theta_d(rng), gamma_d(rng),
                            gamma_d(rng));
}

inline std::uniform_real_distribution<double> k_dist() {
  return std::uniform_real_distribution<double>(-M_PI, M_PI);
}

// Compare two spectra as multisets: greedily pair each value with its
// nearest unused partner and report the worst pair distance.  Lexicographic
// sorting is useless here -- eigenvalues with equal real parts and opposite
// imaginary parts swap order under roundoff -- while for genuinely close
// multisets the greedy pairing finds the 1e-12-scale matching.
inline double multiset_distance(const std::vector<nhssh::cplx>& a,
                                const std::vector<nhssh::cplx>& b) {
  if (a.size() != b.size()) return 1e30;
  std::vector<bool> used(b.size(), false);
  double worst = 0.0;
  for (const auto& x : a) {
    double best = 1e30;
    std::size_t pick = b.size();
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(x - b[j]);
      if (d < best) {
        best = d;
        pick = j;
      }
    }
    used[pick] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

// Distance of an angle in [0, 2pi) to a target, respecting wrap-around.
inline double angle_dist(double z, double target) {
  double d = std::abs(z - target);
  return std::min(d, 2.0 * M_PI - d);
}

}  // namespace test
