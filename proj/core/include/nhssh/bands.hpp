#pragma once

#include <array>
#include <vector>

#include "nhssh/eigensolver.hpp"
#include "nhssh/model.hpp"

namespace nhssh {

// Scalar building blocks of the closed-form spectrum and eigenvectors.
//
//   X = 2 (t1^2 + t2^2) - g1^2 - g2^2
//   Y = 2 g1 g2 + 8 t^2 delta cos(theta)        ( = 2[g1 g2 - (t1^2 - t2^2)] )
//   B = sqrt(X^2 - Y^2 - 16 t1^2 t2^2 sin^2(k/2))   (principal branch)
//
// The four bands are +-D1/2 and +-D2/2 with D1 = sqrt(2(X-B)),
// D2 = sqrt(2(X+B)).  Xp/Yp are the analogs in the (hx, hy) parameter plane
// with t2 -> t2 (hx^2 + hy^2); on the unit circle Xp = X and Yp = X^2 - Y^2.
struct AnalyticIntermediates {
  double X = 0.0;
  double Y = 0.0;
  double Xp = 0.0;
  double Yp = 0.0;
  cplx A1, A2, B, C1, C2, D1, D2, E1f, F1f;
};

AnalyticIntermediates band_intermediates(const ModelParams& p, double k);

// Parameter-plane analogs evaluated at (hx, hy); only Xp/Yp are meaningful.
AnalyticIntermediates param_intermediates(const ModelParams& p, double hx,
                                          double hy);

// Closed-form four-band spectrum with principal square roots, returned in the
// fixed order (-D1/2, +D1/2, -D2/2, +D2/2).  Band identity along k is a
// tracking question, not a branch question, so callers doing multiset
// comparisons should sort.
std::array<cplx, 4> analytic_bands(const ModelParams& p, double k);

// Hermitian two-site dispersion +-sqrt(t1^2 + t2^2 + 2 t1 t2 cos q) for the
// gamma1 = gamma2 = 0 chain described with a two-site cell.  The four-band
// spectrum at momentum k folds this as {+-E(k/2), +-E(k/2 + pi)}.
// Throws invalid_parameter_error when called with nonzero gamma.
std::array<double, 2> analytic_hermitian_bands(const ModelParams& p, double q);

// Closed-form eigenvectors, residual-gated.
//
// The printed closed forms are treated as a cross-check, not as the source of
// truth: each vector's residual ||(H - E_n) v|| / ||v|| is reported, and any
// vector whose residual exceeds 1e-6 is replaced by the numeric eigenvector
// for the nearest eigenvalue, with analytic_ok[n] = false recording that the
// formula failed there.  Degenerate points raise critical_point_error.
struct AnalyticEigvecs {
  std::array<cplx, 4> energies;              // (-D1/2, +D1/2, -D2/2, +D2/2)
  std::array<Eigen::Vector4cd, 4> vectors;   // unit norm
  std::array<double, 4> residuals;           // of the *formula* vectors
  std::array<bool, 4> analytic_ok;           // false => numeric fallback used
};
AnalyticEigvecs analytic_eigvecs(const ModelParams& p, double k);

// k-grid sweep with continuity-tracked bands and middle-gap metrics.
struct BandStructure {
  std::vector<double> k_grid;                    // uniform over [-pi, pi]
  std::array<std::vector<cplx>, 4> bands;        // tracked; band index stable,
                                                 // real-part sorted at k = pi
  double gap_re = 0.0;  // min over k of the sorted-Re separation of bands 2|3
  double gap_im = 0.0;  // same for sorted imaginary parts
  std::vector<double> max_abs_re;  // per k: max_n |Re E_n|
  std::vector<double> max_abs_im;  // per k: max_n |Im E_n|
  std::vector<bool> flags;         // per k: near-degeneracy / tracking warning
};
BandStructure band_sweep(const ModelParams& p, int n_k = 401);

}  // namespace nhssh
