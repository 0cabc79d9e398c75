#pragma once

#include <array>
#include <vector>

#include "nhssh/model.hpp"

namespace nhssh {

// Dense non-Hermitian eigendecomposition with biorthogonal left/right pairing.
//
// Ordering convention everywhere: ascending real part, ties broken by
// ascending imaginary part.  This fixes output files and makes band indices
// reproducible before any continuity tracking is applied.
struct EigenSystem {
  Eigen::VectorXcd values;  // sorted as above
  MatrixXc right;           // unit-norm right eigenvectors, one per column
  MatrixXc left;            // rows; filled by biorthogonalize(), else 0x0
  double residual = 0.0;    // max_n ||(H - E_n) psi_n|| / ||H||
  double biorth_condition = 0.0;  // condition estimate of the right matrix

  bool has_left() const { return left.size() > 0; }
};

// Thresholds shared by the eigensolver and everything downstream that needs
// to recognize an exceptional point.
struct EigTolerances {
  double residual_tol = 1e-9;     // eigenpair residual bound
  double separation_rel = 1e-8;   // min eigenvalue separation / spectral scale
  double condition_max = 1e10;    // right-eigenvector condition ceiling
};

// Full spectrum of a square complex matrix.  Throws invalid_parameter_error
// on non-square/NaN input and eigensolver_error if the residual bound cannot
// be met.
EigenSystem eig_dense(const MatrixXc& M, double residual_tol = 1e-9);

// Attaches left eigenvectors by inverting the right-eigenvector matrix, which
// guarantees <phi_m|psi_n> = delta_mn by construction.  A failure of that
// inversion is precisely the exceptional-point detector: if the smallest
// eigenvalue separation falls below tol.separation_rel (relative to the
// spectral scale) or the right-matrix condition number exceeds
// tol.condition_max, a critical_point_error is thrown and the caller must
// treat the parameter point as critical.
EigenSystem biorthogonalize(EigenSystem es, const MatrixXc& M,
                            const EigTolerances& tol = {});

// Smallest pairwise distance between eigenvalues, divided by the largest
// eigenvalue magnitude (or 1 if the spectrum is tiny).
double min_relative_separation(const Eigen::VectorXcd& values);

// Reorders bands along a parameter path for continuous plotting.  Step j
// returns the permutation perm such that band perm[m] of systems[j+1]
// continues band m of systems[j], chosen greedily by maximal right-eigenvector
// overlap |<psi_m(j)|psi_n(j+1)>|.  If the greedy choice is ambiguous (two
// competing overlaps within 1e-3) the step is flagged and falls back to the
// canonical sorted order.
struct TrackedPath {
  std::vector<std::array<int, 4>> permutations;  // one per step
  std::vector<bool> ambiguous;                   // per-step warning flag
};
TrackedPath track_bands(const std::vector<EigenSystem>& systems);

}  // namespace nhssh
