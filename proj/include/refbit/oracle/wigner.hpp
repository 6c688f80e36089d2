// Copyright 2026 The refbit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <random>

#include "refbit/oracle/dense.hpp"
#include "refbit/spin.hpp"

namespace refbit::oracle {

/// An SO(3)/SU(2) rotation, given either as a unit axis with an angle or as
/// z-y-z Euler angles.
class RotationParam {
 public:
  /// Throws when the axis is not normalized to within 1e-12.
  static RotationParam axis_angle(const Eigen::Vector3d& axis, double angle);
  static RotationParam euler(double alpha, double beta, double gamma);
  static RotationParam identity() { return euler(0.0, 0.0, 0.0); }

  /// Haar-distributed rotation (uniform alpha, gamma; uniform cos beta).
  static RotationParam random(std::mt19937_64& rng);

  bool is_euler() const { return euler_; }
  const Eigen::Vector3d& axis() const { return axis_; }
  double angle() const { return angle_; }
  const std::array<double, 3>& euler_angles() const { return angles_; }

 private:
  RotationParam() = default;
  bool euler_ = false;
  Eigen::Vector3d axis_{0, 0, 1};
  double angle_ = 0.0;
  std::array<double, 3> angles_{0, 0, 0};
};

/// Angular-momentum generators for the spin-j irrep in the basis
/// |j,m> with m descending from j to -j.
struct Generators {
  DenseOperator jx, jy, jz;
};
Generators angular_momentum(Spin j);

/// (2j+1)-dimensional rotation matrix U_{g,j}, built by exponentiating the
/// generators (one code path for all spins). Unitary to 1e-10; its trace
/// reproduces the class character.
DenseOperator wigner_d(Spin j, const RotationParam& g);

}  // namespace refbit::oracle
