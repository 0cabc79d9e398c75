#pragma once

#include <string>
#include <vector>

#include "nhssh/eigensolver.hpp"
#include "nhssh/model.hpp"
#include "nhssh/topology.hpp"

namespace nhssh {

// Full eigendecomposition of a finite chain.
struct ChainSpectrum {
  ModelParams params;
  int n_cells = 0;
  Boundary bc = Boundary::open;
  Eigen::VectorXcd eigenvalues;  // ascending (Re, Im), as everywhere
  MatrixXc right;                // unit-norm right eigenvectors (columns)
  std::vector<int> edge_indices; // detected mid-gap states (possibly empty)
  std::string edge_note;         // why detection was skipped, if it was
  double residual = 0.0;         // max eigenpair residual / ||H||

  int site_count() const { return 4 * n_cells; }
};

// Diagonalizes realspace_hamiltonian; edge_indices is left empty here.
ChainSpectrum chain_spectrum(const ModelParams& p, int n_cells, Boundary bc);

// Open-boundary spectrum with best-effort default edge detection: mid-gap
// states are recorded in edge_indices, and if detection is impossible (no
// real-line bulk gap at these parameters) the spectrum is still returned
// with the reason in edge_note.
ChainSpectrum obc_spectrum(const ModelParams& p, int n_cells);

struct EdgeStates {
  std::vector<int> indices;
  std::vector<double> im_parts;  // Im E of each detected state
  double bulk_gap = 0.0;         // infinite-chain central real gap used
  double guard = 0.0;            // separation actually required
};

// States with |Re E| < re_tol whose real parts are separated from every
// remaining (bulk) level by at least gap_guard.  gap_guard <= 0 requests the
// default guard, one tenth of the infinite-chain central real gap at the
// same parameters.  Throws transition_point_error when that bulk gap is
// closed (mid-gap states are then meaningless); callers scanning parameters
// should flag the point and continue.
EdgeStates detect_edge_states(const ChainSpectrum& cs, double re_tol = 1e-6,
                              double gap_guard = 0.0);

// Per-site intensity |psi_i|^2 of one unit-norm right eigenvector; the
// weights are nonnegative and sum to 1.
struct LDOSProfile {
  std::vector<double> weights;  // one per site
};
LDOSProfile ldos(const ChainSpectrum& cs, int state_index);

// Inverse participation ratio of a normalized profile: sum of squared
// weights; 1/site_count for a perfectly extended state, 1 for a single-site
// one.
double ipr(const LDOSProfile& profile);

// Open-chain spectra along one swept parameter (Boundary::open throughout).
struct SweepPoint {
  double value = 0.0;            // swept-parameter value
  Eigen::VectorXcd eigenvalues;
  std::vector<int> edge_indices;
  std::vector<double> edge_ipr;  // IPR of each detected edge state
  bool edge_detection_failed = false;
  std::string note;
};

struct SpectrumSweep {
  ModelParams base;
  Axis axis = Axis::theta;
  int n_cells = 0;
  std::vector<double> values;
  std::vector<SweepPoint> points;
};

// pre: n_points >= 16 (the plots this feeds need a real scan; single points
// go through obc_spectrum).  Per-point edge-detection failures are recorded
// on the point, never thrown.
SpectrumSweep spectrum_sweep(const ModelParams& base, Axis axis, double lo,
                             double hi, int n_points, int n_cells,
                             double re_tol = 1e-6, int workers = 0);

}  // namespace nhssh
