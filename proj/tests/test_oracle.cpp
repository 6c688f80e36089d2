// Copyright 2026 The refbit Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "refbit/conversion.hpp"
#include "refbit/oracle/bell.hpp"
#include "refbit/oracle/cg.hpp"
#include "refbit/oracle/channels.hpp"
#include "refbit/oracle/mp.hpp"
#include "refbit/quadrature.hpp"

using namespace refbit;
using namespace refbit::oracle;

TEST_CASE("wigner rotations") {
  const auto id = wigner_d(Spin(3), RotationParam::axis_angle(
                                        Eigen::Vector3d::UnitX(), 0.0));
  CHECK((id - DenseOperator::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);

  const double w = 0.7123;
  const auto z = wigner_d(Spin(1), RotationParam::axis_angle(
                                       Eigen::Vector3d::UnitZ(), w));
  CHECK(std::abs(z(0, 0) - std::exp(std::complex<double>(0, -w / 2))) < 1e-12);
  CHECK(std::abs(z(1, 1) - std::exp(std::complex<double>(0, w / 2))) < 1e-12);
  CHECK(std::abs(z(0, 1)) < 1e-14);

  std::mt19937_64 rng(3);
  for (int tj = 0; tj <= 5; ++tj) {
    const auto u = wigner_d(Spin(tj), RotationParam::random(rng));
    CHECK(unitarity_defect(u) < 1e-10);
    CHECK(std::abs(std::abs(u.determinant()) - 1.0) < 1e-10);
  }

  // class character from the trace, any axis
  Eigen::Vector3d axis(0.3, -1.1, 0.64);
  axis.normalize();
  for (const double angle : {0.1, 1.0, 2.5, -1.7})
    for (int tj = 0; tj <= 5; ++tj) {
      const auto u =
          wigner_d(Spin(tj), RotationParam::axis_angle(axis, angle));
      CHECK(std::abs(u.trace().real() - character(Spin(tj), angle)) < 1e-9);
      CHECK(std::abs(u.trace().imag()) < 1e-10);
    }

  CHECK_THROWS_AS(
      RotationParam::axis_angle(Eigen::Vector3d(1.0, 1.0, 0.0), 1.0),
      std::invalid_argument);
}

TEST_CASE("clebsch-gordan coefficients") {
  // singlet antisymmetry with the Condon-Shortley sign
  CHECK(cg_coefficient(Spin(1), Spin(1), Spin(0), 1, -1, 0) ==
        doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(cg_coefficient(Spin(1), Spin(1), Spin(0), -1, 1, 0) ==
        doctest::Approx(-1.0 / std::sqrt(2.0)));
  // stretched states
  for (int tj = 1; tj <= 4; ++tj)
    CHECK(cg_coefficient(Spin(tj), Spin(tj), Spin(2 * tj), tj, tj, 2 * tj) ==
          doctest::Approx(1.0));
  // completeness over the coupled labels
  for (int tm1 = -2; tm1 <= 2; tm1 += 2)
    for (int tm2 = -1; tm2 <= 1; tm2 += 2) {
      double sum = 0.0;
      for (int tj = 1; tj <= 3; tj += 2) {
        const double c =
            cg_coefficient(Spin(2), Spin(1), Spin(tj), tm1, tm2, tm1 + tm2);
        sum += c * c;
      }
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
  CHECK(cg_coefficient(Spin(2), Spin(1), Spin(5), 0, 1, 1) == 0.0);
}

TEST_CASE("coupling unitaries are orthogonal and intertwine rotations") {
  std::mt19937_64 rng(5);
  for (const auto& [ta, tb] : std::vector<std::pair<int, int>>{
           {1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 3}}) {
    const DenseOperator w = coupling_unitary(Spin(ta), Spin(tb));
    CHECK(unitarity_defect(w) < 1e-10);

    const RotationParam g = RotationParam::random(rng);
    DenseOperator coupled = DenseOperator::Zero(w.cols(), w.cols());
    int offset = 0;
    for (const Spin total : couple_range(Spin(ta), Spin(tb))) {
      coupled.block(offset, offset, total.dim(), total.dim()) =
          wigner_d(total, g);
      offset += total.dim();
    }
    const DenseOperator product = kron(wigner_d(Spin(ta), g), wigner_d(Spin(tb), g));
    CHECK((product * w - w * coupled).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("bell states") {
  const auto v = bell_state(Spin(1), RotationParam::identity(), 1);
  REQUIRE(v.size() == 4);
  CHECK(std::abs(v(0) - 1.0 / std::sqrt(2.0)) < 1e-14);
  CHECK(std::abs(v(3) - 1.0 / std::sqrt(2.0)) < 1e-14);
  CHECK(std::abs(v(1)) < 1e-14);

  std::mt19937_64 rng(9);
  for (int tj = 1; tj <= 3; ++tj) {
    const RotationParam g = RotationParam::random(rng);
    const auto psi = bell_state_matrix(Spin(tj), g, 1);
    CHECK(psi.squaredNorm() == doctest::Approx(1.0).epsilon(1e-12));
    const DenseOperator reduced = psi * psi.adjoint();
    CHECK((reduced - DenseOperator::Identity(tj + 1, tj + 1) / double(tj + 1))
              .cwiseAbs()
              .maxCoeff() < 1e-10);
  }
}

TEST_CASE("dimension cap guards state construction") {
  CHECK_THROWS_AS(bell_state(Spin(1), RotationParam::identity(), 7),
                  DimensionCapError);
  CHECK_THROWS_AS(sector_weights_numeric(4, Spin(3)), DimensionCapError);
  setenv("REFBIT_DIM_CAP", "20000", 1);
  CHECK_NOTHROW(bell_state(Spin(1), RotationParam::identity(), 7));
  unsetenv("REFBIT_DIM_CAP");
  CHECK_THROWS_AS(bell_state(Spin(1), RotationParam::identity(), 7),
                  DimensionCapError);
}

TEST_CASE("numeric sector weights match the exact distribution") {
  const auto two = sector_weights_numeric(2, Spin(1));
  CHECK(two.g_deviation < 1e-9);
  CHECK(two.weights.at(0) == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(two.weights.at(2) == doctest::Approx(0.75).epsilon(1e-10));

  const auto single = sector_weights_numeric(1, Spin(3));
  REQUIRE(single.weights.size() == 1);
  CHECK(single.weights.at(3) == doctest::Approx(1.0).epsilon(1e-10));

  const auto three = sector_weights_numeric(3, Spin(2));
  const auto exact = sector_distribution(3, Spin(2));
  for (const auto& [tj, w] : exact.weights)
    CHECK(three.weights.at(tj) == doctest::Approx(w).epsilon(1e-9));
}

TEST_CASE("character-quadrature multiplicities") {
  CHECK(multiplicity_numeric(3, Spin(1), Spin(1)) ==
        doctest::Approx(2.0).epsilon(1e-9));
  CHECK(multiplicity_numeric(2, Spin(2), Spin(6)) ==
        doctest::Approx(0.0));
  CHECK(multiplicity_numeric(6, Spin(1), Spin(0)) ==
        doctest::Approx(5.0).epsilon(1e-9));  // Catalan C_3
  CHECK(multiplicity_numeric(3, Spin(1), Spin(0)) == 0.0);  // parity
}

TEST_CASE("dicke embedding carries the spin irrep") {
  std::mt19937_64 rng(21);
  for (int tj = 1; tj <= 3; ++tj) {
    const DenseOperator e = dicke_embedding(Spin(tj));
    CHECK(isometry_defect(e) < 1e-12);
    const RotationParam g = RotationParam::random(rng);
    const DenseOperator lhs = e * wigner_d(Spin(tj), g);
    const DenseOperator rhs = kron_power(wigner_d(Spin(1), g), tj) * e;
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("clone/discard channel") {
  const auto identity = clone_discard_channel(Spin(2), Spin(2));
  REQUIRE(identity.size() == 1);
  CHECK((identity[0] - DenseOperator::Identity(3, 3)).cwiseAbs().maxCoeff() <
        1e-14);

  for (const auto& [tj, tk] : std::vector<std::pair<int, int>>{
           {1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}}) {
    const auto kraus = clone_discard_channel(Spin(tj), Spin(tk));
    DenseOperator sum = DenseOperator::Zero(tj + 1, tj + 1);
    for (const auto& a : kraus) sum += a.adjoint() * a;
    CHECK((sum - DenseOperator::Identity(tj + 1, tj + 1)).cwiseAbs().maxCoeff() <
          1e-10);
  }

  CHECK(clone_discard_bell_fidelity(Spin(2), Spin(1)) ==
        doctest::Approx(0.75).epsilon(1e-8));
  CHECK(clone_discard_bell_fidelity(Spin(1), Spin(2)) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-8));
}

TEST_CASE("two-pair covariant isometry") {
  const DenseOperator v = build_isometry_n2(Spin(1), Spin(2));
  CHECK(isometry_defect(v) < 1e-10);
  CHECK(isometry_covariance_residual_n2(Spin(1), Spin(2)) < 1e-9);
  CHECK(isometry_bell_fidelity_n2(Spin(1), Spin(2)) ==
        doctest::Approx(4.0 / 9.0).epsilon(1e-8));
  CHECK(isometry_bell_fidelity_n2(Spin(1), Spin(2)) ==
        doctest::Approx(
            det_iso_fidelity(ConversionTask(2, Spin(1), 2, Spin(2))).value)
            .epsilon(1e-8));

  const DenseOperator same = build_isometry_n2(Spin(1), Spin(1));
  CHECK((same - DenseOperator::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-12);

  CHECK_THROWS_AS(build_isometry_n2(Spin(2), Spin(1)), std::invalid_argument);
}

TEST_CASE("measure-and-prepare channel oracle") {
  CHECK(povm_completeness_residual(2) < 1e-8);
  CHECK_THROWS_AS(povm_completeness_residual(3), std::invalid_argument);

  const double numeric = mp_channel_fidelity_numeric(2, Spin(1));
  CHECK(std::abs(numeric - mp_fidelity_exact(2, Spin(1)).value) < 1e-6);

  // trace route (multiplicity spaces enter at n = 3)
  const double three = mp_channel_fidelity_numeric(3, Spin(1));
  CHECK(std::abs(three - mp_fidelity_exact(3, Spin(1)).value) < 1e-6);

  CHECK(mp_channel_fidelity_numeric(8, Spin(1)) >
        mp_channel_fidelity_numeric(2, Spin(1)));
}

TEST_CASE("class quadrature") {
  CHECK(haar_class_quadrature([](double) { return 1.0; }, 1e-13).value ==
        doctest::Approx(1.0).epsilon(1e-12));
  for (int ta = 0; ta <= 4; ++ta)
    for (int tb = ta % 2; tb <= 4; tb += 2) {
      const auto q = haar_class_quadrature(
          [&](double w) { return character(Spin(ta), w) * character(Spin(tb), w); },
          1e-11);
      CHECK(q.value == doctest::Approx(ta == tb ? 1.0 : 0.0).epsilon(1e-9));
    }
  const auto multi = haar_class_quadrature(
      [](double w) { return std::pow(character(Spin(1), w), 4); }, 1e-11);
  CHECK(multi.value == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("adaptive integrator reports non-convergence honestly") {
  const auto good = integrate_adaptive(
      [](double x) { return x * x; }, 0.0, 1.0, 1e-12);
  CHECK(good.converged);
  CHECK(good.value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  const auto hard = integrate_adaptive(
      [](double x) { return 1.0 / std::sqrt(std::abs(x) + 1e-300); }, -1.0,
      1.0, 1e-14, 4);
  CHECK_FALSE(hard.converged);
  CHECK(hard.error_estimate > 1e-14);
}

TEST_CASE("monte-carlo class sampling is seeded and consistent") {
  const auto f = [](double w) { return std::pow(character(Spin(1), w), 6); };
  const auto a = haar_class_monte_carlo(f, 200000, 42);
  const auto b = haar_class_monte_carlo(f, 200000, 42);
  CHECK(a.mean == b.mean);
  CHECK(std::abs(a.mean - 5.0) < 3.0 * a.std_error);
  const auto c = haar_class_monte_carlo(f, 200000, 43);
  CHECK(c.mean != a.mean);
}
