#include "nhssh/model.hpp"

#include <cmath>
#include <sstream>

namespace nhssh {

namespace {
constexpr double kPi = 3.14159265358979323846;

[[noreturn]] void reject(const char* field, double value, const char* range) {
  std::ostringstream os;
  os << "invalid parameter " << field << " = " << value << " (expected "
     << range << ")";
  throw invalid_parameter_error(os.str());
}
}  // namespace

double ModelParams::t1() const { return t * (1.0 - delta * std::cos(theta)); }
double ModelParams::t2() const { return t * (1.0 + delta * std::cos(theta)); }

void validate(const ModelParams& p) {
  if (!std::isfinite(p.t) || p.t <= 0.0) reject("t", p.t, "t > 0");
  if (!std::isfinite(p.delta) || p.delta <= 0.0 || p.delta >= 1.0)
    reject("delta", p.delta, "0 < delta < 1");
  if (!std::isfinite(p.theta) || p.theta < -kPi || p.theta > kPi)
    reject("theta", p.theta, "-pi <= theta <= pi");
  if (!std::isfinite(p.gamma1) || p.gamma1 < 0.0)
    reject("gamma1", p.gamma1, "gamma1 >= 0");
  if (!std::isfinite(p.gamma2) || p.gamma2 < 0.0)
    reject("gamma2", p.gamma2, "gamma2 >= 0");
}

ModelParams make_params(double t, double delta, double theta, double gamma1,
                        double gamma2) {
  ModelParams p{t, delta, theta, gamma1, gamma2};
  validate(p);
  return p;
}

Matrix4c bloch_hamiltonian(const ModelParams& p, double k) {
  validate(p);
  if (!std::isfinite(k)) reject("k", k, "finite");
  const double t1 = p.t1(), t2 = p.t2();
  const cplx i(0.0, 1.0);
  Matrix4c H = Matrix4c::Zero();
  H(0, 0) = i * p.gamma1;
  H(1, 1) = -i * p.gamma2;
  H(2, 2) = -i * p.gamma1;
  H(3, 3) = i * p.gamma2;
  H(0, 1) = H(1, 0) = t1;
  H(2, 3) = H(3, 2) = t1;
  H(1, 2) = H(2, 1) = t2;
  H(0, 3) = t2 * std::exp(-i * k);
  H(3, 0) = t2 * std::exp(i * k);
  return H;
}

Matrix4c parameter_space_hamiltonian(const ModelParams& p, double hx,
                                     double hy) {
  validate(p);
  if (!std::isfinite(hx)) reject("hx", hx, "finite");
  if (!std::isfinite(hy)) reject("hy", hy, "finite");
  const double t1 = p.t1(), t2 = p.t2();
  const cplx i(0.0, 1.0);
  const cplx h(hx, hy);
  Matrix4c H = Matrix4c::Zero();
  H(0, 0) = i * p.gamma1;
  H(1, 1) = -i * p.gamma2;
  H(2, 2) = -i * p.gamma1;
  H(3, 3) = i * p.gamma2;
  H(0, 1) = H(1, 0) = t1;
  H(2, 3) = H(3, 2) = t1;
  H(1, 2) = H(2, 1) = t2 * (hx * hx + hy * hy);
  H(0, 3) = t2 * std::conj(h) * std::conj(h);
  H(3, 0) = t2 * h * h;
  return H;
}

MatrixXc realspace_hamiltonian(const ModelParams& p, int n_cells, Boundary bc) {
  validate(p);
  if (n_cells < 1) reject("n_cells", n_cells, "n_cells >= 1");
  const double t1 = p.t1(), t2 = p.t2();
  const cplx i(0.0, 1.0);
  const int n = 4 * n_cells;
  const cplx onsite[4] = {i * p.gamma1, -i * p.gamma2, -i * p.gamma1,
                          i * p.gamma2};
  const double bond[4] = {t1, t2, t1, t2};
  MatrixXc H = MatrixXc::Zero(n, n);
  for (int s = 0; s < n; ++s) H(s, s) = onsite[s % 4];
  for (int s = 0; s + 1 < n; ++s) H(s, s + 1) = H(s + 1, s) = bond[s % 4];
  if (bc == Boundary::periodic && n > 1) {
    // the D -> A' bond of the last cell wraps around
    H(n - 1, 0) = H(0, n - 1) = t2;
  }
  return H;
}

}  // namespace nhssh
