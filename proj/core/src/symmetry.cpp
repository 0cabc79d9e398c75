#include "nhssh/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "nhssh/errors.hpp"

namespace nhssh {

namespace {
constexpr double kPi = 3.14159265358979323846;
const cplx kI(0.0, 1.0);

Matrix4c diag_T() {
  Matrix4c T = Matrix4c::Zero();
  T(0, 0) = 1.0;
  T(1, 1) = -1.0;
  T(2, 2) = 1.0;
  T(3, 3) = -1.0;
  return T;
}

Matrix4c eta_matrix(double k) {
  Matrix4c eta = Matrix4c::Zero();
  const cplx down = std::exp(-kI * (0.5 * k));
  const cplx up = std::exp(kI * (0.5 * k));
  eta(0, 2) = down;
  eta(1, 3) = down;
  eta(2, 0) = up;
  eta(3, 1) = up;
  return eta;
}

Matrix4c parity_P() {
  // i sigma_x (x) sigma_y, written out entrywise
  Matrix4c P = Matrix4c::Zero();
  P(0, 3) = 1.0;
  P(1, 2) = -1.0;
  P(2, 1) = 1.0;
  P(3, 0) = -1.0;
  return P;
}

double relation_residual(const ModelParams& p, SymmetryName name, double k) {
  const Matrix4c H = bloch_hamiltonian(p, k);
  const Matrix4c Hm = bloch_hamiltonian(p, -k);
  const Matrix4c U = symmetry_matrix(name, k);
  switch (name) {
    case SymmetryName::antiPT:
      return (U * H.conjugate() * U.inverse() + H).norm();
    case SymmetryName::pseudoH:
      return (U * H.adjoint() * U.inverse() - H).norm();
    case SymmetryName::TRS:
      return (H.conjugate() - Hm).norm();
    case SymmetryName::PHS:
      return (U * H.transpose() * U.inverse() + Hm).norm();
    case SymmetryName::TRSdag:
      return (H.transpose() - Hm).norm();
    case SymmetryName::PHSdag:
      return (U * H.conjugate() * U.inverse() + Hm).norm();
    case SymmetryName::CS:
      return (U * H.adjoint() * U.inverse() + H).norm();
    case SymmetryName::CSdag:
      return (U * H * U.inverse() + H).norm();
  }
  throw invalid_parameter_error("relation_residual: unknown symmetry name");
}

std::vector<double> k_grid(int n_k) {
  if (n_k < 2)
    throw invalid_parameter_error("symmetry residual: n_k must be >= 2");
  std::vector<double> ks(n_k);
  for (int j = 0; j < n_k; ++j) ks[j] = -kPi + 2.0 * kPi * j / n_k;
  return ks;
}
}  // namespace

std::string to_string(SymmetryName name) {
  switch (name) {
    case SymmetryName::antiPT:  return "antiPT";
    case SymmetryName::pseudoH: return "pseudoH";
    case SymmetryName::TRS:     return "TRS";
    case SymmetryName::PHS:     return "PHS";
    case SymmetryName::TRSdag:  return "TRSdag";
    case SymmetryName::PHSdag:  return "PHSdag";
    case SymmetryName::CS:      return "CS";
    case SymmetryName::CSdag:   return "CSdag";
  }
  throw invalid_parameter_error("to_string: unknown symmetry name");
}

SymmetryName symmetry_from_string(const std::string& s) {
  for (SymmetryName name : all_symmetries)
    if (to_string(name) == s) return name;
  throw invalid_parameter_error("unknown symmetry name: " + s);
}

std::string symmetry_relation(SymmetryName name) {
  switch (name) {
    case SymmetryName::antiPT:  return "P H(k)* P^-1 = -H(k)";
    case SymmetryName::pseudoH: return "n H(k)^+ n^-1 = H(k)";
    case SymmetryName::TRS:     return "H(k)* = H(-k)";
    case SymmetryName::PHS:     return "T H(k)^T T^-1 = -H(-k)";
    case SymmetryName::TRSdag:  return "H(k)^T = H(-k)";
    case SymmetryName::PHSdag:  return "T H(k)* T^-1 = -H(-k)";
    case SymmetryName::CS:      return "G H(k)^+ G^-1 = -H(k)";
    case SymmetryName::CSdag:   return "C H(k) C^-1 = -H(k), C = n G";
  }
  throw invalid_parameter_error("symmetry_relation: unknown symmetry name");
}

Matrix4c symmetry_matrix(SymmetryName name, double k) {
  switch (name) {
    case SymmetryName::antiPT:
      return parity_P();
    case SymmetryName::pseudoH:
      return eta_matrix(k);
    case SymmetryName::TRS:
    case SymmetryName::TRSdag:
      return Matrix4c::Identity();
    case SymmetryName::PHS:
    case SymmetryName::PHSdag:
    case SymmetryName::CS:
      return diag_T();
    case SymmetryName::CSdag:
      return eta_matrix(k) * diag_T();
  }
  throw invalid_parameter_error("symmetry_matrix: unknown symmetry name");
}

Matrix4c eta_matrix_alt(double k) {
  const double c = std::cos(0.5 * k);
  const double s = std::sin(0.5 * k);
  Matrix4c sx = Matrix4c::Zero(), sy = Matrix4c::Zero();
  // sigma_x (x) I2 and sigma_y (x) I2 in the 2x2-block sense
  sx(0, 2) = sx(1, 3) = sx(2, 0) = sx(3, 1) = 1.0;
  sy(0, 2) = sy(1, 3) = -kI;
  sy(2, 0) = sy(3, 1) = kI;
  return c * sx + s * sy;
}

double symmetry_residual(const ModelParams& p, SymmetryName name, int n_k) {
  validate(p);
  double worst = 0.0;
  for (double k : k_grid(n_k))
    worst = std::max(worst, relation_residual(p, name, k));
  return worst;
}

const SymmetryReport::Entry& SymmetryReport::entry(SymmetryName name) const {
  for (const Entry& e : entries)
    if (e.name == name) return e;
  throw invalid_parameter_error("SymmetryReport: unknown symmetry name");
}

SymmetryReport classify(const ModelParams& p, int n_k) {
  validate(p);
  SymmetryReport rep;
  const std::vector<double> ks = k_grid(n_k);
  for (std::size_t i = 0; i < all_symmetries.size(); ++i) {
    const SymmetryName name = all_symmetries[i];
    double worst = 0.0;
    for (double k : ks) worst = std::max(worst, relation_residual(p, name, k));
    rep.entries[i] = {name, worst, worst < 1e-10};
  }
  {
    double worst = 0.0;
    for (double k : ks) {
      const Matrix4c H = bloch_hamiltonian(p, k);
      const Matrix4c eta = eta_matrix_alt(k);
      worst = std::max(worst, (eta * H.adjoint() * eta.inverse() - H).norm());
    }
    rep.pseudoH_alt_residual = worst;
  }

  const bool dag_ok = rep.entry(SymmetryName::TRSdag).holds &&
                      rep.entry(SymmetryName::PHSdag).holds &&
                      rep.entry(SymmetryName::CS).holds;
  const bool trs = rep.entry(SymmetryName::TRS).holds;
  const bool phs = rep.entry(SymmetryName::PHS).holds;
  if (dag_ok && !trs && !phs)
    rep.label = "BDI^dag";
  else if (dag_ok && trs && phs)
    rep.label = "BDI";
  else
    rep.label = "unclassified";
  return rep;
}

AntiPTResiduals antiPT_residual(const ModelParams& p, int n_k) {
  validate(p);
  AntiPTResiduals out;
  const Matrix4c P = parity_P();
  const Matrix4c T = diag_T();
  for (double k : k_grid(n_k)) {
    const Matrix4c H = bloch_hamiltonian(p, k);
    const Matrix4c Hm = bloch_hamiltonian(p, -k);
    out.paper_form = std::max(
        out.paper_form, (P * H.conjugate() * P.inverse() + H).norm());
    out.working_form = std::max(
        out.working_form, (T * H.conjugate() * T.inverse() + Hm).norm());
  }
  return out;
}

}  // namespace nhssh
