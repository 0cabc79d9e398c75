#include "nhssh/realspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nhssh/bands.hpp"
#include "nhssh/errors.hpp"
#include "nhssh/parallel.hpp"

namespace nhssh {

namespace {
constexpr double kGapFloor = 1e-8;
}

ChainSpectrum chain_spectrum(const ModelParams& p, int n_cells, Boundary bc) {
  validate(p);
  if (n_cells < 2)
    throw invalid_parameter_error("chain_spectrum: n_cells must be >= 2");
  const MatrixXc H = realspace_hamiltonian(p, n_cells, bc);
  EigenSystem es = eig_dense(H);
  ChainSpectrum cs;
  cs.params = p;
  cs.n_cells = n_cells;
  cs.bc = bc;
  cs.eigenvalues = std::move(es.values);
  cs.right = std::move(es.right);
  cs.residual = es.residual;
  return cs;
}

ChainSpectrum obc_spectrum(const ModelParams& p, int n_cells) {
  ChainSpectrum cs = chain_spectrum(p, n_cells, Boundary::open);
  try {
    cs.edge_indices = detect_edge_states(cs).indices;
  } catch (const computation_error& e) {
    cs.edge_note = e.what();
  }
  return cs;
}

EdgeStates detect_edge_states(const ChainSpectrum& cs, double re_tol,
                              double gap_guard) {
  if (re_tol <= 0.0)
    throw invalid_parameter_error("detect_edge_states: re_tol must be > 0");
  const int n = static_cast<int>(cs.eigenvalues.size());

  EdgeStates out;
  // The guard scale comes from the infinite chain: the central real gap of
  // the Bloch bands at the same parameters.
  const BandStructure bs = band_sweep(cs.params, 201);
  out.bulk_gap = bs.gap_re;
  out.guard = gap_guard > 0.0 ? gap_guard : 0.1 * bs.gap_re;
  if (bs.gap_re < kGapFloor)
    throw transition_point_error(
        "detect_edge_states: bulk real spectrum is gapless at these "
        "parameters; mid-gap detection is not meaningful");

  std::vector<int> candidates;
  for (int i = 0; i < n; ++i)
    if (std::abs(cs.eigenvalues(i).real()) < re_tol) candidates.push_back(i);
  if (candidates.empty()) return out;

  // Bulk levels = everything that is not a candidate; require every candidate
  // to sit at least `guard` away from all of them on the real axis.
  double bulk_min = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    if (std::binary_search(candidates.begin(), candidates.end(), i)) continue;
    bulk_min = std::min(bulk_min, std::abs(cs.eigenvalues(i).real()));
  }
  if (!(bulk_min - re_tol >= out.guard))
    throw transition_point_error(
        "detect_edge_states: candidate zero modes are not separated from the "
        "bulk real bands by the requested guard");

  out.indices = candidates;
  for (int i : candidates) out.im_parts.push_back(cs.eigenvalues(i).imag());
  return out;
}

LDOSProfile ldos(const ChainSpectrum& cs, int state_index) {
  if (state_index < 0 || state_index >= cs.eigenvalues.size())
    throw invalid_parameter_error("ldos: state index out of range");
  LDOSProfile profile;
  const auto col = cs.right.col(state_index);
  profile.weights.resize(col.size());
  for (Eigen::Index i = 0; i < col.size(); ++i)
    profile.weights[i] = std::norm(col(i));
  return profile;
}

double ipr(const LDOSProfile& profile) {
  double sum = 0.0;
  for (double w : profile.weights) sum += w * w;
  return sum;
}

SpectrumSweep spectrum_sweep(const ModelParams& base, Axis axis, double lo,
                             double hi, int n_points, int n_cells,
                             double re_tol, int workers) {
  validate(base);
  if (n_points < 16)
    throw invalid_parameter_error("spectrum_sweep: n_points must be >= 16");
  if (n_cells < 2)
    throw invalid_parameter_error("spectrum_sweep: n_cells must be >= 2");

  SpectrumSweep sweep;
  sweep.base = base;
  sweep.axis = axis;
  sweep.n_cells = n_cells;
  sweep.values.resize(n_points);
  for (int i = 0; i < n_points; ++i)
    sweep.values[i] = lo + (hi - lo) * i / (n_points - 1);
  sweep.points.resize(n_points);

  parallel_for(
      static_cast<std::size_t>(n_points),
      [&](std::size_t i) {
        SweepPoint& pt = sweep.points[i];
        pt.value = sweep.values[i];
        const ModelParams p = with_axis(base, axis, pt.value);
        const ChainSpectrum cs = chain_spectrum(p, n_cells, Boundary::open);
        pt.eigenvalues = cs.eigenvalues;
        try {
          const EdgeStates es = detect_edge_states(cs, re_tol);
          pt.edge_indices = es.indices;
          for (int idx : es.indices) pt.edge_ipr.push_back(ipr(ldos(cs, idx)));
        } catch (const computation_error& e) {
          pt.edge_detection_failed = true;
          pt.note = e.what();
        }
      },
      workers);
  return sweep;
}

}  // namespace nhssh
