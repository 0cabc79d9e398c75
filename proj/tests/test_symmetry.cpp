#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "nhssh/errors.hpp"
#include "nhssh/model.hpp"
#include "nhssh/symmetry.hpp"

using namespace nhssh;
using doctest::Approx;

TEST_CASE("symmetry: name round-trips and relation strings") {
  for (SymmetryName name : all_symmetries) {
    CHECK(symmetry_from_string(to_string(name)) == name);
    CHECK_FALSE(symmetry_relation(name).empty());
  }
  CHECK_THROWS_AS(symmetry_from_string("nope"), invalid_parameter_error);
}

TEST_CASE("symmetry: transformation matrices are unitary") {
  std::mt19937 rng(41);
  auto kd = test::k_dist();
  for (int i = 0; i < 10; ++i) {
    const double k = kd(rng);
    for (SymmetryName name : all_symmetries) {
      const Matrix4c U = symmetry_matrix(name, k);
      CHECK((U * U.adjoint() - Matrix4c::Identity()).norm() < 1e-14);
    }
    CHECK((eta_matrix_alt(k) * eta_matrix_alt(k).adjoint() -
           Matrix4c::Identity())
              .norm() < 1e-14);
  }
}

TEST_CASE("symmetry: daggered set is exact, conventional set is broken") {
  std::mt19937 rng(42);
  for (int i = 0; i < 40; ++i) {
    const auto p = test::draw_params(rng);
    CHECK(symmetry_residual(p, SymmetryName::pseudoH) < 1e-10);
    CHECK(symmetry_residual(p, SymmetryName::TRSdag) < 1e-10);
    CHECK(symmetry_residual(p, SymmetryName::PHSdag) < 1e-10);
    CHECK(symmetry_residual(p, SymmetryName::CS) < 1e-10);
    CHECK(symmetry_residual(p, SymmetryName::CSdag) < 1e-10);

    // conventional TRS/PHS fail by exactly the weight of the onsite terms
    const double broken =
        2.0 * std::sqrt(2.0) *
        std::hypot(p.gamma1, p.gamma2);
    CHECK(symmetry_residual(p, SymmetryName::TRS) ==
          Approx(broken).epsilon(1e-9).scale(1.0));
    CHECK(symmetry_residual(p, SymmetryName::PHS) ==
          Approx(broken).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("symmetry: parity-time residual measures the gain/loss imbalance") {
  std::mt19937 rng(43);
  for (int i = 0; i < 40; ++i) {
    auto p = test::draw_params(rng);
    const AntiPTResiduals r = antiPT_residual(p);
    CHECK(r.paper_form ==
          Approx(2.0 * std::abs(p.gamma1 - p.gamma2)).epsilon(1e-9).scale(1.0));
    CHECK(r.working_form < 1e-12);  // holds for every gamma

    p.gamma2 = p.gamma1;  // balanced: both forms hold
    const AntiPTResiduals b = antiPT_residual(p);
    CHECK(b.paper_form < 1e-12);
    CHECK(b.working_form < 1e-12);
  }
}

TEST_CASE("symmetry: alternative eta gives the same pseudo-Hermiticity verdict") {
  std::mt19937 rng(44);
  for (int i = 0; i < 10; ++i) {
    const auto p = test::draw_params(rng);
    const SymmetryReport rep = classify(p);
    CHECK(rep.entry(SymmetryName::pseudoH).residual < 1e-10);
    CHECK(rep.pseudoH_alt_residual < 1e-10);
  }
}

TEST_CASE("symmetry: class label tracks the gain/loss") {
  const auto on = make_params(1.0, 0.3, M_PI, 1.5, 1.0);
  const SymmetryReport rep = classify(on);
  CHECK(rep.label == "BDI^dag");
  CHECK(rep.entry(SymmetryName::TRSdag).holds);
  CHECK(rep.entry(SymmetryName::PHSdag).holds);
  CHECK(rep.entry(SymmetryName::CS).holds);
  CHECK(rep.entry(SymmetryName::CSdag).holds);
  CHECK(rep.entry(SymmetryName::pseudoH).holds);
  CHECK_FALSE(rep.entry(SymmetryName::TRS).holds);
  CHECK_FALSE(rep.entry(SymmetryName::PHS).holds);
  CHECK_FALSE(rep.entry(SymmetryName::antiPT).holds);

  const auto off = make_params(1.0, 0.3, M_PI, 0.0, 0.0);
  const SymmetryReport herm = classify(off);
  CHECK(herm.label == "BDI");
  for (SymmetryName name : all_symmetries)
    CHECK(herm.entry(name).holds);  // everything holds in the Hermitian limit
}
