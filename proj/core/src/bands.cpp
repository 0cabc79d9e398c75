#include "nhssh/bands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nhssh {

namespace {
constexpr double kPi = 3.14159265358979323846;
const cplx kI(0.0, 1.0);
}  // namespace

AnalyticIntermediates band_intermediates(const ModelParams& p, double k) {
  validate(p);
  const double t1 = p.t1(), t2 = p.t2();
  const double g1 = p.gamma1, g2 = p.gamma2;
  AnalyticIntermediates w;
  w.X = 2.0 * (t1 * t1 + t2 * t2) - g1 * g1 - g2 * g2;
  w.Y = 2.0 * g1 * g2 + 8.0 * p.t * p.t * p.delta * std::cos(p.theta);
  const double s = std::sin(0.5 * k);
  w.B = std::sqrt(cplx(w.X * w.X - w.Y * w.Y -
                       16.0 * t1 * t1 * t2 * t2 * s * s));
  w.A1 = 2.0 * t1 * t1 * (1.0 + std::exp(kI * k));
  w.A2 = 2.0 * t2 * t2 * (1.0 + std::exp(-kI * k));
  w.C1 = g1 - g2;
  w.C2 = g1 + g2;
  w.D1 = std::sqrt(2.0 * (w.X - w.B));
  w.D2 = std::sqrt(2.0 * (w.X + w.B));
  w.E1f = 1.0 + std::exp(kI * k);
  w.F1f = std::exp(kI * k) - 1.0;
  // unit-circle parameter-plane analogs at hx + i hy = e^{i k/2}
  w.Xp = w.X;
  w.Yp = w.X * w.X - w.Y * w.Y;
  return w;
}

AnalyticIntermediates param_intermediates(const ModelParams& p, double hx,
                                          double hy) {
  validate(p);
  const double t1 = p.t1(), t2 = p.t2();
  const double g1 = p.gamma1, g2 = p.gamma2;
  const double t2p = t2 * (hx * hx + hy * hy);
  AnalyticIntermediates w;
  w.Xp = 2.0 * (t2p * t2p + t1 * t1) - g1 * g1 - g2 * g2;
  w.Yp = (-4.0 * t2p * t2p + (g1 - g2) * (g1 - g2)) *
         ((g1 + g2) * (g1 + g2) - 4.0 * t1 * t1);
  return w;
}

std::array<cplx, 4> analytic_bands(const ModelParams& p, double k) {
  const AnalyticIntermediates w = band_intermediates(p, k);
  return {-0.5 * w.D1, 0.5 * w.D1, -0.5 * w.D2, 0.5 * w.D2};
}

std::array<double, 2> analytic_hermitian_bands(const ModelParams& p, double q) {
  validate(p);
  if (p.gamma1 != 0.0 || p.gamma2 != 0.0)
    throw invalid_parameter_error(
        "analytic_hermitian_bands: requires gamma1 = gamma2 = 0");
  const double t1 = p.t1(), t2 = p.t2();
  const double arg = t1 * t1 + t2 * t2 + 2.0 * t1 * t2 * std::cos(q);
  const double e = std::sqrt(std::max(arg, 0.0));  // clamp roundoff at closing
  return {-e, e};
}

AnalyticEigvecs analytic_eigvecs(const ModelParams& p, double k) {
  const AnalyticIntermediates w = band_intermediates(p, k);
  const double t1 = p.t1(), t2 = p.t2();
  const double g1 = p.gamma1, g2 = p.gamma2;
  const cplx A1 = w.A1, A2 = w.A2, B = w.B, C1 = w.C1, C2 = w.C2;
  const cplx D1 = w.D1, D2 = w.D2, E1 = w.E1f, F1 = w.F1f;
  const cplx M = 4.0 * kI * (C1 * t1 * t1 - C2 * t2 * t2);

  AnalyticEigvecs out;
  out.energies = {-0.5 * D1, 0.5 * D1, -0.5 * D2, 0.5 * D2};

  // The four printed column vectors, components (v1, v2, v3, 1).  The sign
  // pattern alternates with the energy branch; the third denominators carry
  // t1 where the first carry t2.
  std::array<Eigen::Vector4cd, 4> raw;
  raw[0] << (-A2 + B + C1 * (C1 + kI * D1)) / (t2 * E1 * D1 - 2.0 * kI * t2 * g1 * F1),
      (-M - (B - C1 * C2) * (D1 + 2.0 * kI * g2)) /
          (2.0 * t1 * t2 * (E1 * D1 - 2.0 * kI * g1 * F1)),
      (-A1 + B + C2 * (C2 - kI * D1)) / (t1 * E1 * D1 - 2.0 * kI * t1 * g1 * F1),
      1.0;
  raw[1] << (A2 - B - C1 * (C1 - kI * D1)) / (t2 * E1 * D1 + 2.0 * kI * t2 * g1 * F1),
      (M + (B - C1 * C2) * (-D1 + 2.0 * kI * g2)) /
          (2.0 * t1 * t2 * (E1 * D1 + 2.0 * kI * g1 * F1)),
      (A1 - B - C2 * (C2 + kI * D1)) / (t1 * E1 * D1 + 2.0 * kI * t1 * g1 * F1),
      1.0;
  raw[2] << (-A2 - B + C1 * (C1 + kI * D2)) / (t2 * E1 * D2 - 2.0 * kI * t2 * g1 * F1),
      (-M + (B + C1 * C2) * (D2 + 2.0 * kI * g2)) /
          (2.0 * t1 * t2 * (E1 * D2 - 2.0 * kI * g1 * F1)),
      (-A1 - B + C2 * (C2 - kI * D2)) / (t1 * E1 * D2 - 2.0 * kI * t1 * g1 * F1),
      1.0;
  raw[3] << (A2 + B - C1 * (C1 - kI * D2)) / (t2 * E1 * D2 + 2.0 * kI * t2 * g1 * F1),
      (M - (B + C1 * C2) * (-D2 + 2.0 * kI * g2)) /
          (2.0 * t1 * t2 * (E1 * D2 + 2.0 * kI * g1 * F1)),
      (A1 + B - C2 * (C2 + kI * D2)) / (t1 * E1 * D2 + 2.0 * kI * t1 * g1 * F1),
      1.0;

  const Matrix4c H = bloch_hamiltonian(p, k);
  EigenSystem numeric = eig_dense(H);
  if (min_relative_separation(numeric.values) < 1e-8)
    throw critical_point_error(
        "analytic_eigvecs: degenerate spectrum (exceptional point)");

  for (int n = 0; n < 4; ++n) {
    const Eigen::Vector4cd v = raw[n];
    const double nv = v.norm();
    double res = std::numeric_limits<double>::infinity();
    if (std::isfinite(nv) && nv > 0.0)
      res = (H * v - out.energies[n] * v).norm() / nv;
    out.residuals[n] = res;
    if (res < 1e-6) {
      out.vectors[n] = v / nv;
      out.analytic_ok[n] = true;
    } else {
      // numeric fallback: pick the eigenvector whose eigenvalue is nearest
      int best = 0;
      double bd = std::abs(numeric.values(0) - out.energies[n]);
      for (int m = 1; m < 4; ++m) {
        const double d = std::abs(numeric.values(m) - out.energies[n]);
        if (d < bd) {
          bd = d;
          best = m;
        }
      }
      out.vectors[n] = numeric.right.col(best);
      out.analytic_ok[n] = false;
    }
  }
  return out;
}

BandStructure band_sweep(const ModelParams& p, int n_k) {
  validate(p);
  if (n_k < 16) throw invalid_parameter_error("band_sweep: n_k must be >= 16");

  BandStructure bs;
  bs.k_grid.resize(n_k);
  for (int j = 0; j < n_k; ++j)
    bs.k_grid[j] = -kPi + 2.0 * kPi * j / (n_k - 1);

  std::vector<EigenSystem> systems;
  systems.reserve(n_k);
  double gap_re = std::numeric_limits<double>::infinity();
  double gap_im = std::numeric_limits<double>::infinity();
  bs.max_abs_re.resize(n_k);
  bs.max_abs_im.resize(n_k);
  bs.flags.assign(n_k, false);

  for (int j = 0; j < n_k; ++j) {
    EigenSystem es = eig_dense(bloch_hamiltonian(p, bs.k_grid[j]));
    std::array<double, 4> re, im;
    double mre = 0.0, mim = 0.0;
    for (int n = 0; n < 4; ++n) {
      re[n] = es.values(n).real();
      im[n] = es.values(n).imag();
      mre = std::max(mre, std::abs(re[n]));
      mim = std::max(mim, std::abs(im[n]));
    }
    std::sort(re.begin(), re.end());
    std::sort(im.begin(), im.end());
    gap_re = std::min(gap_re, re[2] - re[1]);
    gap_im = std::min(gap_im, im[2] - im[1]);
    bs.max_abs_re[j] = mre;
    bs.max_abs_im[j] = mim;
    if (min_relative_separation(es.values) < 1e-8) bs.flags[j] = true;
    systems.push_back(std::move(es));
  }
  bs.gap_re = gap_re;
  bs.gap_im = gap_im;

  // Continuity tracking, then one global relabeling so that the band order at
  // the reference momentum k = pi (last grid point) is ascending in Re.
  TrackedPath tracked = track_bands(systems);
  std::array<int, 4> label = {0, 1, 2, 3};  // label[m] = column of band m
  std::vector<std::array<int, 4>> labels(n_k);
  labels[0] = label;
  for (int j = 0; j + 1 < n_k; ++j) {
    if (tracked.ambiguous[j]) bs.flags[j + 1] = true;
    for (int m = 0; m < 4; ++m)
      label[m] = tracked.permutations[j][label[m]];
    labels[j + 1] = label;
  }
  // Columns are Re-sorted at every node (eig_dense convention), so band m's
  // sorted position at the reference is simply its column index there.
  const std::array<int, 4> ref = labels[n_k - 1];
  for (int n = 0; n < 4; ++n) bs.bands[n].resize(n_k);
  for (int m = 0; m < 4; ++m) {
    const int q = ref[m];
    for (int j = 0; j < n_k; ++j)
      bs.bands[q][j] = systems[j].values(labels[j][m]);
  }
  return bs;
}

}  // namespace nhssh
