#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "helpers.hpp"
#include "nhssh/errors.hpp"
#include "nhssh/model.hpp"

using namespace nhssh;
using doctest::Approx;

namespace {
const cplx I(0.0, 1.0);
}

TEST_CASE("params: validation rejects out-of-range values") {
  CHECK_NOTHROW(make_params(1.0, 0.3, M_PI, 1.5, 1.0));
  CHECK_THROWS_AS(make_params(0.0, 0.3, 0.0, 0.0, 0.0), invalid_parameter_error);
  CHECK_THROWS_AS(make_params(-1.0, 0.3, 0.0, 0.0, 0.0), invalid_parameter_error);
  CHECK_THROWS_AS(make_params(1.0, 0.0, 0.0, 0.0, 0.0), invalid_parameter_error);
  CHECK_THROWS_AS(make_params(1.0, 1.0, 0.0, 0.0, 0.0), invalid_parameter_error);
  CHECK_THROWS_AS(make_params(1.0, 0.3, 3.5, 0.0, 0.0), invalid_parameter_error);
  CHECK_THROWS_AS(make_params(1.0, 0.3, -3.5, 0.0, 0.0), invalid_parameter_error);
  CHECK_THROWS_AS(make_params(1.0, 0.3, 0.0, -0.1, 0.0), invalid_parameter_error);
  CHECK_THROWS_AS(make_params(1.0, 0.3, 0.0, 0.0, -0.1), invalid_parameter_error);
}

TEST_CASE("params: hopping amplitudes at the reference angles") {
  auto p = make_params(1.0, 0.3, M_PI, 0.0, 0.0);
  CHECK(p.t1() == Approx(1.3).epsilon(1e-14));
  CHECK(p.t2() == Approx(0.7).epsilon(1e-14));

  p.theta = 0.0;
  CHECK(p.t1() == Approx(0.7));
  CHECK(p.t2() == Approx(1.3));

  p.theta = 0.5 * M_PI;  // dimerization switched off
  CHECK(p.t1() == Approx(1.0));
  CHECK(p.t2() == Approx(1.0));
}

TEST_CASE("bloch: matrix entries match the four-site cell") {
  const auto p = make_params(1.0, 0.3, M_PI, 1.5, 0.8);
  const double k = 0.73;
  const Matrix4c H = bloch_hamiltonian(p, k);
  const double t1 = p.t1(), t2 = p.t2();

  CHECK(std::abs(H(0, 0) - I * 1.5) < 1e-15);
  CHECK(std::abs(H(1, 1) + I * 0.8) < 1e-15);
  CHECK(std::abs(H(2, 2) + I * 1.5) < 1e-15);
  CHECK(std::abs(H(3, 3) - I * 0.8) < 1e-15);

  CHECK(std::abs(H(0, 1) - t1) < 1e-15);
  CHECK(std::abs(H(1, 0) - t1) < 1e-15);
  CHECK(std::abs(H(2, 3) - t1) < 1e-15);
  CHECK(std::abs(H(3, 2) - t1) < 1e-15);
  CHECK(std::abs(H(1, 2) - t2) < 1e-15);
  CHECK(std::abs(H(2, 1) - t2) < 1e-15);

  CHECK(std::abs(H(0, 3) - t2 * std::exp(-I * k)) < 1e-15);
  CHECK(std::abs(H(3, 0) - t2 * std::exp(I * k)) < 1e-15);

  // every other entry is zero
  CHECK(std::abs(H(0, 2)) == 0.0);
  CHECK(std::abs(H(2, 0)) == 0.0);
  CHECK(std::abs(H(1, 3)) == 0.0);
  CHECK(std::abs(H(3, 1)) == 0.0);
}

TEST_CASE("bloch: transpose flips the momentum") {
  std::mt19937 rng(11);
  auto kd = test::k_dist();
  for (int i = 0; i < 20; ++i) {
    const auto p = test::draw_params(rng);
    const double k = kd(rng);
    const Matrix4c lhs = bloch_hamiltonian(p, k).transpose();
    const Matrix4c rhs = bloch_hamiltonian(p, -k);
    CHECK((lhs - rhs).norm() < 1e-14);
  }
}

TEST_CASE("parameter space: unit circle reduces to the Bloch matrix") {
  std::mt19937 rng(12);
  auto kd = test::k_dist();
  for (int i = 0; i < 20; ++i) {
    const auto p = test::draw_params(rng);
    const double k = kd(rng);
    const Matrix4c A =
        parameter_space_hamiltonian(p, std::cos(k / 2), std::sin(k / 2));
    const Matrix4c B = bloch_hamiltonian(p, k);
    CHECK((A - B).norm() < 1e-13);
  }
}

TEST_CASE("parameter space: radial entries scale with |h|^2") {
  const auto p = make_params(1.0, 0.3, M_PI, 0.6, 1.0);
  const double hx = 1.3, hy = -0.4;
  const Matrix4c H = parameter_space_hamiltonian(p, hx, hy);
  const cplx h(hx, hy);
  const double r2 = hx * hx + hy * hy;
  CHECK(std::abs(H(3, 0) - p.t2() * h * h) < 1e-14);
  CHECK(std::abs(H(0, 3) - p.t2() * std::conj(h) * std::conj(h)) < 1e-14);
  CHECK(std::abs(H(1, 2) - p.t2() * r2) < 1e-14);
  CHECK(std::abs(H(2, 1) - p.t2() * r2) < 1e-14);
}

TEST_CASE("realspace: dimensions, bonds, and boundary wiring") {
  const auto p = make_params(1.0, 0.3, M_PI, 0.9, 0.4);
  const int n = 6;
  const MatrixXc H = realspace_hamiltonian(p, n, Boundary::open);
  REQUIRE(H.rows() == 4 * n);
  REQUIRE(H.cols() == 4 * n);

  const double t1 = p.t1(), t2 = p.t2();
  const cplx onsite[4] = {I * p.gamma1, -I * p.gamma2, -I * p.gamma1,
                          I * p.gamma2};
  for (int s = 0; s < 4 * n; ++s)
    CHECK(std::abs(H(s, s) - onsite[s % 4]) < 1e-15);

  // alternating t1 t2 t1 t2 bond pattern down the chain
  for (int s = 0; s + 1 < 4 * n; ++s) {
    const double want = (s % 2 == 0) ? t1 : t2;
    CHECK(std::abs(H(s, s + 1) - want) < 1e-15);
    CHECK(std::abs(H(s + 1, s) - want) < 1e-15);
  }

  // open chain has no corner hopping; nothing beyond first off-diagonals
  CHECK(std::abs(H(4 * n - 1, 0)) == 0.0);
  CHECK(std::abs(H(0, 4 * n - 1)) == 0.0);
  for (int s = 0; s + 2 < 4 * n; ++s) CHECK(std::abs(H(s, s + 2)) == 0.0);

  const MatrixXc Hp = realspace_hamiltonian(p, n, Boundary::periodic);
  CHECK(std::abs(Hp(4 * n - 1, 0) - t2) < 1e-15);
  CHECK(std::abs(Hp(0, 4 * n - 1) - t2) < 1e-15);
  CHECK((Hp - MatrixXc(Hp.topLeftCorner(4 * n, 4 * n))).norm() == 0.0);

  // hoppings are real, so the chain matrix is complex symmetric
  CHECK((H - MatrixXc(H.transpose())).norm() < 1e-15);
  CHECK((Hp - MatrixXc(Hp.transpose())).norm() < 1e-15);
}

TEST_CASE("realspace: rejects non-positive cell counts") {
  const auto p = make_params(1.0, 0.3, M_PI, 0.0, 0.0);
  CHECK_THROWS_AS(realspace_hamiltonian(p, 0, Boundary::open),
                  invalid_parameter_error);
  CHECK_THROWS_AS(realspace_hamiltonian(p, -3, Boundary::periodic),
                  invalid_parameter_error);
}
