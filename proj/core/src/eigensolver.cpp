#include "nhssh/eigensolver.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace nhssh {

namespace {

bool value_less(const cplx& a, const cplx& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

EigenSystem eig_dense(const MatrixXc& M, double residual_tol) {
  if (M.rows() != M.cols() || M.rows() < 1)
    throw invalid_parameter_error("eig_dense: matrix must be square and non-empty");
  if (!M.allFinite())
    throw invalid_parameter_error("eig_dense: matrix has NaN/Inf entries");

  Eigen::ComplexEigenSolver<MatrixXc> solver(M, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success) {
    std::ostringstream os;
    os << "eig_dense: QR iteration did not converge for " << M.rows() << "x"
       << M.cols() << " matrix";
    throw eigensolver_error(os.str());
  }

  const int n = static_cast<int>(M.rows());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  const Eigen::VectorXcd raw = solver.eigenvalues();
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return value_less(raw(a), raw(b)); });

  EigenSystem es;
  es.values.resize(n);
  es.right.resize(n, n);
  for (int j = 0; j < n; ++j) {
    es.values(j) = raw(order[j]);
    es.right.col(j) = solver.eigenvectors().col(order[j]).normalized();
  }

  const double scale = std::max(M.norm(), 1e-300);
  double worst = 0.0;
  for (int j = 0; j < n; ++j) {
    const double r = (M * es.right.col(j) - es.values(j) * es.right.col(j)).norm();
    worst = std::max(worst, r / scale);
  }
  es.residual = worst;
  if (worst > residual_tol) {
    std::ostringstream os;
    os << "eig_dense: eigenpair residual " << worst << " exceeds tolerance "
       << residual_tol;
    throw eigensolver_error(os.str());
  }
  return es;
}

double min_relative_separation(const Eigen::VectorXcd& values) {
  const int n = static_cast<int>(values.size());
  double scale = 1.0;
  for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(values(i)));
  double sep = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      sep = std::min(sep, std::abs(values(i) - values(j)));
  return sep / scale;
}

EigenSystem biorthogonalize(EigenSystem es, const MatrixXc& M,
                            const EigTolerances& tol) {
  const double sep = min_relative_separation(es.values);
  if (sep < tol.separation_rel) {
    std::ostringstream os;
    os << "biorthogonalize: eigenvalue separation " << sep
       << " below threshold " << tol.separation_rel
       << " (exceptional point / degeneracy)";
    throw critical_point_error(os.str());
  }

  Eigen::JacobiSVD<MatrixXc> svd(es.right);
  const double smin = svd.singularValues()(svd.singularValues().size() - 1);
  const double smax = svd.singularValues()(0);
  es.biorth_condition = (smin > 0.0) ? smax / smin
                                     : std::numeric_limits<double>::infinity();
  if (es.biorth_condition > tol.condition_max) {
    std::ostringstream os;
    os << "biorthogonalize: right-eigenvector condition "
       << es.biorth_condition << " above " << tol.condition_max
       << " (exceptional point)";
    throw critical_point_error(os.str());
  }

  es.left = es.right.inverse();

  // The rows of R^{-1} are left eigenvectors of M up to conjugation; verify
  // against the matrix itself so a silent solver failure cannot slip through.
  const double scale = std::max(M.norm(), 1e-300);
  const double lres = (es.left * M - es.values.asDiagonal() * es.left).norm() / scale;
  if (lres > 1e-7) {
    std::ostringstream os;
    os << "biorthogonalize: left-eigenvector residual " << lres;
    // A bad inverse together with nearly-parallel right eigenvectors is a
    // degeneracy that slipped past the separation gate (the eigenvalue
    // splitting of a defective pair scales like sqrt(eps), so it can sit
    // just above separation_rel while the vectors have already coalesced).
    if (es.biorth_condition > 1e5) {
      os << " with eigenvector condition " << es.biorth_condition
         << " (exceptional point)";
      throw critical_point_error(os.str());
    }
    throw eigensolver_error(os.str());
  }
  return es;
}

TrackedPath track_bands(const std::vector<EigenSystem>& systems) {
  TrackedPath path;
  if (systems.size() < 2) return path;

  for (std::size_t j = 0; j + 1 < systems.size(); ++j) {
    const MatrixXc& cur = systems[j].right;
    const MatrixXc& nxt = systems[j + 1].right;
    if (cur.cols() != 4 || nxt.cols() != 4)
      throw invalid_parameter_error("track_bands: expects four-band systems");

    // overlap(m, n) = |<psi_m(j) | psi_n(j+1)>|
    Eigen::Matrix4d overlap;
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n)
        overlap(m, n) = std::abs(cur.col(m).dot(nxt.col(n)));

    std::array<int, 4> perm{};
    bool ambiguous = false;
    std::array<bool, 4> taken{};
    // Greedy: repeatedly take the largest remaining overlap entry.  A pick is
    // ambiguous only when the chosen band has a near-equal alternative target
    // in its own row; the margin must not be measured across the whole matrix,
    // where other bands' diagonal overlaps are legitimately just as large.
    std::array<bool, 4> assigned{};
    for (int pick = 0; pick < 4; ++pick) {
      double best = -1.0;
      int bm = -1, bn = -1;
      for (int m = 0; m < 4; ++m) {
        if (assigned[m]) continue;
        for (int n = 0; n < 4; ++n) {
          if (taken[n]) continue;
          if (overlap(m, n) > best) {
            best = overlap(m, n);
            bm = m;
            bn = n;
          }
        }
      }
      double runner_up = -1.0;
      for (int n = 0; n < 4; ++n)
        if (!taken[n] && n != bn) runner_up = std::max(runner_up, overlap(bm, n));
      if (runner_up >= 0.0 && best - runner_up < 0.05) ambiguous = true;
      perm[bm] = bn;
      assigned[bm] = true;
      taken[bn] = true;
    }
    if (ambiguous) {
      // Matching is unreliable here (near-degenerate overlaps); fall back to
      // the canonical sorted order and let the caller see the flag.
      perm = {0, 1, 2, 3};
    }
    path.permutations.push_back(perm);
    path.ambiguous.push_back(ambiguous);
  }
  return path;
}

}  // namespace nhssh
