// Copyright 2026 The refbit Authors
// SPDX-License-Identifier: Apache-2.0

#include "refbit/oracle/wigner.hpp"

#include <cmath>
#include <numbers>

namespace refbit::oracle {

RotationParam RotationParam::axis_angle(const Eigen::Vector3d& axis,
                                        double angle) {
  if (std::abs(axis.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("RotationParam: axis must be normalized");
  RotationParam g;
  g.euler_ = false;
  g.axis_ = axis;
  g.angle_ = angle;
  return g;
}

RotationParam RotationParam::euler(double alpha, double beta, double gamma) {
  RotationParam g;
  g.euler_ = true;
  g.angles_ = {alpha, beta, gamma};
  return g;
}

RotationParam RotationParam::random(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> cosb(-1.0, 1.0);
  return euler(angle(rng), std::acos(cosb(rng)), angle(rng));
}

Generators angular_momentum(Spin j) {
  const int d = j.dim();
  Generators g{DenseOperator::Zero(d, d), DenseOperator::Zero(d, d),
               DenseOperator::Zero(d, d)};
  // basis index a corresponds to m = j - a
  for (int a = 0; a < d; ++a) g.jz(a, a) = 0.5 * (j.twice() - 2 * a);
  const double jj = j.casimir();
  for (int a = 1; a < d; ++a) {
    const double m = 0.5 * (j.twice() - 2 * a);  // J+ raises m -> m+1
    const double c = std::sqrt(jj - m * (m + 1.0));
    g.jx(a - 1, a) += 0.5 * c;
    g.jx(a, a - 1) += 0.5 * c;
    g.jy(a - 1, a) += std::complex<double>(0.0, -0.5) * c;
    g.jy(a, a - 1) += std::complex<double>(0.0, 0.5) * c;
  }
  return g;
}

namespace {

DenseOperator exp_neg_i(const DenseOperator& hermitian, double angle) {
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(hermitian);
  const auto& v = es.eigenvectors();
  Eigen::VectorXcd phases(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < phases.size(); ++i)
    phases(i) = std::exp(std::complex<double>(0.0, -angle * es.eigenvalues()(i)));
  return v * phases.asDiagonal() * v.adjoint();
}

}  // namespace

DenseOperator wigner_d(Spin j, const RotationParam& g) {
  const Generators gen = angular_momentum(j);
  if (!g.is_euler()) {
    const DenseOperator h = g.axis()(0) * gen.jx + g.axis()(1) * gen.jy +
                            g.axis()(2) * gen.jz;
    return exp_neg_i(h, g.angle());
  }
  const auto& [alpha, beta, gamma] = g.euler_angles();
  const int d = j.dim();
  Eigen::VectorXcd za(d), zg(d);
  for (int a = 0; a < d; ++a) {
    const double m = 0.5 * (j.twice() - 2 * a);
    za(a) = std::exp(std::complex<double>(0.0, -alpha * m));
    zg(a) = std::exp(std::complex<double>(0.0, -gamma * m));
  }
  return za.asDiagonal() * exp_neg_i(gen.jy, beta) * zg.asDiagonal();
}

}  // namespace refbit::oracle
