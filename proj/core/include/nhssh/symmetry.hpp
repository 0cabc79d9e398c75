#pragma once

#include <array>
#include <string>

#include "nhssh/model.hpp"

namespace nhssh {

// The symmetry relations checked numerically on a momentum grid.  Each name
// stands for one defining equation relating H(k), possibly transposed,
// conjugated or daggered, to +-H(k) or +-H(-k) through a fixed unitary:
//
//   antiPT    P H(k)* P^-1   = -H(k)      P = i sigma_x (x) sigma_y
//   pseudoH   n H(k)^+ n^-1  =  H(k)      n = [[0, e^{-ik/2} I2], [e^{ik/2} I2, 0]]
//   TRS       H(k)*          =  H(-k)
//   PHS       T H(k)^T T^-1  = -H(-k)     T = diag(1,-1,1,-1)
//   TRSdag    H(k)^T         =  H(-k)
//   PHSdag    T H(k)* T^-1   = -H(-k)
//   CS        G H(k)^+ G^-1  = -H(k)      G = diag(1,-1,1,-1)
//   CSdag     C H(k)  C^-1   = -H(k)      C = n G
//
// With gain/loss switched on, the daggered triple plus CS hold exactly while
// TRS and PHS are broken by the imaginary onsite potentials; that pattern is
// the BDI^dag row of the 38-fold classification.  antiPT holds only for
// balanced potentials gamma1 = gamma2 (its residual is 2|gamma1 - gamma2|).
enum class SymmetryName {
  antiPT,
  pseudoH,
  TRS,
  PHS,
  TRSdag,
  PHSdag,
  CS,
  CSdag,
};

inline constexpr std::array<SymmetryName, 8> all_symmetries = {
    SymmetryName::antiPT, SymmetryName::pseudoH, SymmetryName::TRS,
    SymmetryName::PHS,    SymmetryName::TRSdag,  SymmetryName::PHSdag,
    SymmetryName::CS,     SymmetryName::CSdag,
};

std::string to_string(SymmetryName name);

// Inverse of to_string; throws invalid_parameter_error for unknown names.
SymmetryName symmetry_from_string(const std::string& s);

// One-line rendering of the defining relation, for reports.
std::string symmetry_relation(SymmetryName name);

// The unitary entering the relation, evaluated at momentum k.  Most of the
// operators are k-independent; pseudoH and CSdag carry e^{+-ik/2} phases.
Matrix4c symmetry_matrix(SymmetryName name, double k);

// Half-angle Pauli form of the pseudo-Hermiticity operator,
// sigma_x (x) cos(k/2) I2 + sigma_y (x) sin(k/2) I2.  Algebraically equal to
// symmetry_matrix(pseudoH, k); kept as an independently coded cross-check.
Matrix4c eta_matrix_alt(double k);

// Max over an n_k-point uniform momentum grid of the Frobenius norm of
// (LHS - RHS) for the defining relation of `name`.
double symmetry_residual(const ModelParams& p, SymmetryName name, int n_k = 64);

struct SymmetryReport {
  struct Entry {
    SymmetryName name{};
    double residual = 0.0;
    bool holds = false;  // residual < 1e-10
  };
  std::array<Entry, 8> entries;        // in all_symmetries order
  double pseudoH_alt_residual = 0.0;   // same relation via eta_matrix_alt
  std::string label;                   // "BDI^dag", "BDI", or "unclassified"

  const Entry& entry(SymmetryName name) const;
};

// Evaluates every relation and assigns the class label: "BDI^dag" when
// {TRSdag, PHSdag, CS} hold while TRS and PHS fail, "BDI" when those five all
// hold (the Hermitian limit), otherwise "unclassified".
SymmetryReport classify(const ModelParams& p, int n_k = 64);

struct AntiPTResiduals {
  double paper_form = 0.0;    // i sigma_x (x) sigma_y with conjugation, fixed k
  double working_form = 0.0;  // conjugation + diag(1,-1,1,-1) with k -> -k
};

// Two candidate realizations of anti-PT symmetry.  The first uses the literal
// operator above at fixed k and only vanishes for gamma1 = gamma2; the second
// is the PHSdag identity, which holds for all parameters.  Both are reported
// without asserting either.
AntiPTResiduals antiPT_residual(const ModelParams& p, int n_k = 64);

}  // namespace nhssh
