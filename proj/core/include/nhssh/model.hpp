#pragma once

#include <Eigen/Dense>
#include <complex>

#include "nhssh/errors.hpp"

namespace nhssh {

using cplx = std::complex<double>;
using Matrix4c = Eigen::Matrix4cd;
using MatrixXc = Eigen::MatrixXcd;

// Four-site unit cell (A, B, C, D) with staggered imaginary onsite
// potentials (+i g1, -i g2, -i g1, +i g2) and alternating hoppings
//   t1 = t (1 - delta cos theta)   inside the A-B and C-D dimers,
//   t2 = t (1 + delta cos theta)   on the B-C and D-A' bonds.
struct ModelParams {
  double t = 1.0;       // overall hopping scale, > 0
  double delta = 0.3;   // dimerization strength, 0 < delta < 1
  double theta = 0.0;   // modulation phase, in [-pi, pi]
  double gamma1 = 0.0;  // gain/loss on A and C sites, >= 0
  double gamma2 = 0.0;  // gain/loss on B and D sites, >= 0

  // Derived hoppings are always recomputed, never stored.
  double t1() const;
  double t2() const;
};

enum class Boundary { open, periodic };

// Validates the parameter ranges and returns the params unchanged.
// Throws invalid_parameter_error naming the offending field.
ModelParams make_params(double t, double delta, double theta, double gamma1,
                        double gamma2);
void validate(const ModelParams& p);

// 4x4 momentum-space Hamiltonian:
//   [ i g1      t1        0        t2 e^{-ik} ]
//   [ t1       -i g2      t2       0          ]
//   [ 0         t2       -i g1     t1         ]
//   [ t2 e^{ik} 0         t1       i g2       ]
Matrix4c bloch_hamiltonian(const ModelParams& p, double k);

// Same matrix with e^{ik} replaced by (h_x + i h_y)^2 on the cell-crossing
// bond and |h|^2 on the central bond, which extends the model into a
// two-dimensional parameter plane.  On the unit circle h_x + i h_y = e^{ik/2}
// this reduces exactly to bloch_hamiltonian at momentum k.
Matrix4c parameter_space_hamiltonian(const ModelParams& p, double hx,
                                     double hy);

// Finite chain of n_cells four-site cells (4 n_cells sites).  Bonds alternate
// t1, t2, t1, t2, ... starting with t1 between sites 1 and 2; the onsite
// pattern (+i g1, -i g2, -i g1, +i g2) repeats per cell.  With
// Boundary::periodic an extra t2 bond closes the ring.  The matrix is
// complex-symmetric (equal to its own transpose) for both boundary kinds.
MatrixXc realspace_hamiltonian(const ModelParams& p, int n_cells, Boundary bc);

}  // namespace nhssh
