#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nhssh/bands.hpp"
#include "nhssh/model.hpp"

namespace nhssh {

// Biorthogonal Zak phase of the half-filled (lower two) band pair.
//
// Discrete Wilson loop on an n_k-point half-offset grid k_j = 2pi(j+1/2)/n_k
// over one Bloch period: the occupied pair is the two bands with the most
// negative real parts at the reference node (the node where the central
// real-part separation is largest), carried around the loop by biorthogonal
// overlap tracking; Z = (-arg det W) reduced into [0, 2pi).
//
// Errors: critical_point_error when a grid node sits at (or the tracked pair
// collapses into) an eigenvalue degeneracy; transition_point_error when the
// central real-part separation drops below 1e-8 anywhere on the loop, which
// makes "the two lowest-Re bands" ill-defined.  The second case covers entire
// parameter regions (wherever the spectrum turns purely imaginary on a
// k-window); there the invariant is not quantized and callers should fall
// back to the critical-line criterion (see classify_phase_point).
double zak_phase(const ModelParams& p, int n_k = 128);

// Band-degeneracy points of the Hamiltonian continued to the (hx, hy)
// parameter plane: (+-((t1^2 - g1 g2)/t2^2)^{1/4}, 0) when the fourth root is
// real, else an empty list with none_real set.
struct DegeneracyPoints {
  std::vector<std::pair<double, double>> points;  // (hx, hy)
  bool none_real = false;                         // t1^2 < g1 g2
};
DegeneracyPoints degeneracy_points(const ModelParams& p);

// Geometric winding number: half the count of degeneracy points strictly
// inside the unit circle.  nullopt when no real degeneracy points exist (the
// geometric picture is silent there; use zak_phase).  Throws
// critical_point_error when a point lies within 1e-9 of the circle.
std::optional<int> winding_number(const ModelParams& p);

// The three analytic transition-line families in the (g1, g2) plane at fixed
// (t, delta, theta), each reduced to one number:
//   g1 + g2   = gamma_sum      (central imaginary gap closes;  = 2 t1)
//   |g1 - g2| = gamma_absdiff  (central real gap closes;       = 2 t2)
//   g1 * g2   = gamma_product  (topological transition; = t1^2 - t2^2,
//                               may be negative, then unreachable for g >= 0)
struct CriticalLines {
  double t1 = 0.0;
  double t2 = 0.0;
  double gamma_sum = 0.0;
  double gamma_absdiff = 0.0;
  double gamma_product = 0.0;
};
CriticalLines critical_lines(double t, double delta, double theta);

enum class Region {
  trivial,
  nontrivial_real_line_gapped,  // an all-real k-window exists
  nontrivial_complex,           // complex quartets at every k
  nontrivial_partial_reZero,    // Re E = 0 on a proper k-window
  nontrivial_all_imaginary,     // Re E = 0 at every k
};
std::string to_string(Region r);

struct PhasePoint {
  ModelParams params;
  double zak = 0.0;         // in [0, 2pi); meaningful only if zak_valid
  bool zak_valid = false;
  std::optional<int> winding;
  Region region = Region::trivial;
  double gap_re = 0.0;      // min over k of the central sorted-Re separation
  double gap_im = 0.0;      // same for sorted imaginary parts
  bool boundary = false;    // some sub-operation hit a critical/transition
  std::string note;         //   condition; region then comes from the
                            //   critical-line criterion
};

// Full classification of one parameter point: band sweep for the gap metrics
// and Re/Im-vanishing pattern, Zak phase for trivial vs nontrivial (falling
// back to the sign of g1 g2 - (t1^2 - t2^2) when zak_phase reports a
// transition or critical condition), then the region sub-label from the
// sweep.
PhasePoint classify_phase_point(const ModelParams& p, int n_k = 401,
                                int n_zak = 128);

enum class Axis { gamma1, gamma2, theta };
std::string to_string(Axis a);
Axis axis_from_string(const std::string& s);
ModelParams with_axis(ModelParams p, Axis a, double value);

struct AxisSpec {
  Axis axis = Axis::gamma1;
  double lo = 0.0;
  double hi = 1.0;
  int n = 2;  // number of nodes, endpoints included
};

struct PhaseDiagram {
  AxisSpec axis1, axis2;
  std::vector<double> values1, values2;
  std::vector<PhasePoint> points;  // row-major: index = i2 * axis1.n + i1
  const PhasePoint& at(int i1, int i2) const;
};

// classify_phase_point on a product grid; nodes are evaluated concurrently
// (worker count from the workers argument, else NHSSH_WORKERS, else the
// hardware) and assembled deterministically.
PhaseDiagram phase_diagram(const AxisSpec& axis1, const AxisSpec& axis2,
                           const ModelParams& base, int n_k = 201,
                           int n_zak = 96, int workers = 0);

}  // namespace nhssh
