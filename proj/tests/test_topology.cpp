#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "nhssh/eigensolver.hpp"
#include "nhssh/errors.hpp"
#include "nhssh/model.hpp"
#include "nhssh/topology.hpp"

using namespace nhssh;
using doctest::Approx;

namespace {
// reference point family used throughout: t = 1, delta = 0.3, theta = pi,
// gamma2 = 1, with gamma1 scanned through all five spectral regimes
ModelParams ref(double gamma1) {
  return make_params(1.0, 0.3, M_PI, gamma1, 1.0);
}
}  // namespace

TEST_CASE("zak: quantized plateaus on both sides of the transition") {
  CHECK(test::angle_dist(zak_phase(ref(0.6)), 0.0) < 1e-2);
  CHECK(test::angle_dist(zak_phase(ref(1.5)), M_PI) < 1e-2);

  // Hermitian checks: weak-bond-first ordering decides the invariant
  const auto herm_nt = make_params(1.0, 0.3, 0.2 * M_PI, 0.0, 0.0);
  CHECK(test::angle_dist(zak_phase(herm_nt), M_PI) < 1e-2);
  const auto herm_tr = make_params(1.0, 0.3, M_PI, 0.0, 0.0);
  CHECK(test::angle_dist(zak_phase(herm_tr), 0.0) < 1e-2);
}

TEST_CASE("zak: refining the grid does not move the converged value") {
  const double coarse = zak_phase(ref(1.5), 128);
  const double fine = zak_phase(ref(1.5), 512);
  CHECK(test::angle_dist(coarse, fine) < 1e-3);
}

TEST_CASE("zak: rejects grids too coarse to trust") {
  CHECK_THROWS_AS(zak_phase(ref(0.6), 32), invalid_parameter_error);
}

TEST_CASE("zak: reports failure where the real line gap is closed") {
  // partially and fully imaginary regimes have no quantized invariant;
  // the Wilson loop degrades detectably instead of returning garbage
  CHECK_THROWS_AS(zak_phase(ref(2.6)), computation_error);
  CHECK_THROWS_AS(zak_phase(ref(3.1)), computation_error);
  // and directly at the topological transition
  CHECK_THROWS_AS(zak_phase(ref(1.2)), computation_error);
}

TEST_CASE("zak: random draws are quantized whenever the loop converges") {
  std::mt19937 rng(51);
  int quantized = 0, skipped = 0;
  while (quantized + skipped < 120) {
    const auto p = test::draw_params(rng);
    double z;
    try {
      z = zak_phase(p, 96);
    } catch (const computation_error&) {
      ++skipped;  // gapless or near-critical draw; expected for some draws
      continue;
    }
    const double d0 = test::angle_dist(z, 0.0);
    const double dpi = test::angle_dist(z, M_PI);
    CHECK(std::min(d0, dpi) < 1e-2);
    ++quantized;
  }
  CHECK(quantized > 40);  // the sample must not be dominated by failures
}

TEST_CASE("degeneracy points: fourth-root positions on the real axis") {
  const DegeneracyPoints weak = degeneracy_points(ref(0.6));
  REQUIRE(weak.points.size() == 2);
  CHECK_FALSE(weak.none_real);
  CHECK(std::abs(weak.points[0].first) == Approx(1.221259).epsilon(1e-5));
  CHECK(std::abs(weak.points[1].first) == Approx(1.221259).epsilon(1e-5));
  CHECK(weak.points[0].second == 0.0);
  CHECK(weak.points[0].first == -weak.points[1].first);

  // ((t1^2 - g1 g2) / t2^2)^{1/4} = (0.19 / 0.49)^{1/4}
  const DegeneracyPoints strong = degeneracy_points(ref(1.5));
  REQUIRE(strong.points.size() == 2);
  CHECK(std::abs(strong.points[0].first) ==
        Approx(std::pow(0.19 / 0.49, 0.25)).epsilon(1e-12));

  const DegeneracyPoints beyond = degeneracy_points(ref(2.0));
  CHECK(beyond.none_real);  // gamma1 gamma2 exceeds t1^2
  CHECK(beyond.points.empty());

  // at the transition the points sit exactly on the unit circle
  const DegeneracyPoints at = degeneracy_points(ref(1.2));
  REQUIRE(at.points.size() == 2);
  CHECK(std::abs(std::abs(at.points[0].first) - 1.0) < 1e-9);
}

TEST_CASE("degeneracy points: the spectrum actually degenerates there") {
  for (double g1 : {0.6, 1.5}) {
    const auto p = ref(g1);
    const DegeneracyPoints d = degeneracy_points(p);
    REQUIRE_FALSE(d.points.empty());
    const auto [hx, hy] = d.points[0];
    const EigenSystem es =
        eig_dense(parameter_space_hamiltonian(p, hx, hy));
    CHECK(min_relative_separation(es.values) < 1e-9);

    // four-digit rounding of the position still leaves a tiny splitting
    const EigenSystem rough =
        eig_dense(parameter_space_hamiltonian(p, std::round(hx * 1e4) / 1e4, 0.0));
    CHECK(min_relative_separation(rough.values) < 2e-4);
  }
}

TEST_CASE("winding: counts enclosed degeneracy points") {
  CHECK(winding_number(ref(0.6)) == 0);   // points outside the unit circle
  CHECK(winding_number(ref(1.5)) == 1);   // points inside
  CHECK_FALSE(winding_number(ref(2.0)).has_value());  // no real points at all
  CHECK_THROWS_AS(winding_number(ref(1.2)), critical_point_error);
}

TEST_CASE("winding and zak agree wherever both are defined") {
  std::mt19937 rng(52);
  int agreed = 0;
  while (agreed < 40) {
    const auto p = test::draw_params(rng);
    std::optional<int> w;
    try {
      w = winding_number(p);
    } catch (const critical_point_error&) {
      continue;  // degeneracy point grazing the unit circle
    }
    if (!w) continue;
    double z;
    try {
      z = zak_phase(p, 96);
    } catch (const computation_error&) {
      continue;
    }
    const bool zak_pi = test::angle_dist(z, M_PI) < 1e-2;
    CHECK(zak_pi == (*w == 1));
    ++agreed;
  }
}

TEST_CASE("critical lines: closed forms at the three reference angles") {
  const CriticalLines at_pi = critical_lines(1.0, 0.3, M_PI);
  CHECK(at_pi.t1 == Approx(1.3));
  CHECK(at_pi.t2 == Approx(0.7));
  CHECK(at_pi.gamma_sum == Approx(2.6));
  CHECK(at_pi.gamma_absdiff == Approx(1.4));
  CHECK(at_pi.gamma_product == Approx(1.2));

  const CriticalLines at_zero = critical_lines(1.0, 0.3, 0.0);
  CHECK(at_zero.gamma_sum == Approx(1.4));
  CHECK(at_zero.gamma_absdiff == Approx(2.6));
  CHECK(at_zero.gamma_product == Approx(-1.2));  // no transition reachable

  const CriticalLines mid = critical_lines(1.0, 0.3, 0.5 * M_PI);
  CHECK(mid.gamma_sum == Approx(2.0));
  CHECK(mid.gamma_absdiff == Approx(2.0));
  CHECK(mid.gamma_product == Approx(0.0).scale(1.0));
}

TEST_CASE("critical lines: zone-center degeneracies sit exactly on them") {
  // gamma1 + gamma2 = 2 t1 pinches the k = 0 spectrum into two pairs
  const EigenSystem on_sum = eig_dense(bloch_hamiltonian(ref(1.6), 0.0));
  CHECK(min_relative_separation(on_sum.values) < 1e-7);

  // |gamma1 - gamma2| = 2 t2 is the other zone-center pinch
  const auto p_diff = make_params(1.0, 0.3, M_PI, 2.4, 1.0);
  const EigenSystem on_diff = eig_dense(bloch_hamiltonian(p_diff, 0.0));
  CHECK(min_relative_separation(on_diff.values) < 1e-7);

  // gamma1 gamma2 = t1^2 - t2^2 sends an eigenvalue through zero
  CHECK(std::abs(bloch_hamiltonian(ref(1.2), 0.0).determinant()) < 1e-12);
}

TEST_CASE("classify: the five regimes along the reference cut") {
  const PhasePoint trivial = classify_phase_point(ref(0.6), 201, 96);
  CHECK(trivial.region == Region::trivial);
  CHECK(trivial.zak_valid);
  CHECK(test::angle_dist(trivial.zak, 0.0) < 1e-2);
  CHECK_FALSE(trivial.boundary);
  CHECK(trivial.winding == 0);

  const PhasePoint red = classify_phase_point(ref(1.4), 201, 96);
  CHECK(red.region == Region::nontrivial_real_line_gapped);
  CHECK(red.zak_valid);
  CHECK(test::angle_dist(red.zak, M_PI) < 1e-2);
  CHECK(red.winding == 1);
  CHECK(red.gap_im < 1e-8);

  const PhasePoint blue = classify_phase_point(ref(2.0), 201, 96);
  CHECK(blue.region == Region::nontrivial_complex);
  CHECK(blue.zak_valid);
  CHECK(test::angle_dist(blue.zak, M_PI) < 1e-2);
  CHECK_FALSE(blue.winding.has_value());  // geometric picture silent here
  CHECK(blue.gap_re > 1e-3);
  CHECK(blue.gap_im > 1e-3);

  const PhasePoint light = classify_phase_point(ref(2.6), 201, 96);
  CHECK(light.region == Region::nontrivial_partial_reZero);
  CHECK_FALSE(light.zak_valid);   // no quantized loop without a real-line gap
  CHECK_FALSE(light.boundary);    // ...and that is not a boundary condition
  CHECK(light.gap_re < 1e-8);

  const PhasePoint pink = classify_phase_point(ref(3.1), 201, 96);
  CHECK(pink.region == Region::nontrivial_all_imaginary);
  CHECK_FALSE(pink.zak_valid);
  CHECK_FALSE(pink.boundary);
}

TEST_CASE("classify: transition and exceptional cuts are flagged") {
  const PhasePoint at_transition = classify_phase_point(ref(1.2), 201, 96);
  CHECK(at_transition.boundary);
  CHECK_FALSE(at_transition.note.empty());

  const PhasePoint at_ep = classify_phase_point(ref(1.6), 201, 96);
  CHECK(at_ep.boundary);
}

TEST_CASE("axis: string round-trip and parameter override") {
  for (Axis a : {Axis::gamma1, Axis::gamma2, Axis::theta})
    CHECK(axis_from_string(to_string(a)) == a);
  CHECK_THROWS_AS(axis_from_string("delta"), invalid_parameter_error);

  auto p = ref(0.6);
  CHECK(with_axis(p, Axis::gamma1, 2.0).gamma1 == 2.0);
  CHECK(with_axis(p, Axis::gamma2, 0.25).gamma2 == 0.25);
  CHECK(with_axis(p, Axis::theta, 0.5).theta == 0.5);
}

TEST_CASE("phase diagram: single node equals direct classification") {
  AxisSpec a1{Axis::gamma1, 2.0, 2.0, 1};
  AxisSpec a2{Axis::gamma2, 1.0, 1.0, 1};
  const PhaseDiagram pd = phase_diagram(a1, a2, ref(0.0), 201, 96);
  REQUIRE(pd.points.size() == 1);
  const PhasePoint direct = classify_phase_point(ref(2.0), 201, 96);
  CHECK(pd.at(0, 0).region == direct.region);
  CHECK(pd.at(0, 0).zak_valid == direct.zak_valid);
  CHECK(pd.at(0, 0).zak == Approx(direct.zak).epsilon(1e-12));
  CHECK(pd.at(0, 0).gap_re == Approx(direct.gap_re).epsilon(1e-12));
}

TEST_CASE("phase diagram: worker count does not change the result") {
  AxisSpec a1{Axis::gamma1, 0.2, 3.0, 8};
  AxisSpec a2{Axis::gamma2, 0.2, 2.0, 6};
  const auto base = ref(0.0);
  const PhaseDiagram serial = phase_diagram(a1, a2, base, 101, 64, 1);
  const PhaseDiagram threaded = phase_diagram(a1, a2, base, 101, 64, 4);
  REQUIRE(serial.points.size() == threaded.points.size());
  for (std::size_t i = 0; i < serial.points.size(); ++i) {
    CHECK(serial.points[i].region == threaded.points[i].region);
    CHECK(serial.points[i].zak_valid == threaded.points[i].zak_valid);
    CHECK(serial.points[i].zak == threaded.points[i].zak);  // bitwise equal
    CHECK(serial.points[i].gap_re == threaded.points[i].gap_re);
    CHECK(serial.points[i].boundary == threaded.points[i].boundary);
  }
  // axis bookkeeping
  CHECK(serial.values1.size() == 8);
  CHECK(serial.values2.size() == 6);
  CHECK(serial.values1.front() == Approx(0.2));
  CHECK(serial.values1.back() == Approx(3.0));
}

TEST_CASE("phase diagram: rejects degenerate axis specs") {
  AxisSpec bad{Axis::gamma1, 0.0, 1.0, 0};
  AxisSpec ok{Axis::gamma2, 0.0, 1.0, 2};
  CHECK_THROWS_AS(phase_diagram(bad, ok, ref(0.0)), invalid_parameter_error);
  AxisSpec same{Axis::gamma2, 0.0, 1.0, 2};
  CHECK_THROWS_AS(phase_diagram(ok, same, ref(0.0)), invalid_parameter_error);
}
