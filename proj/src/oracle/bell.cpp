// Copyright 2026 The refbit Authors
// SPDX-License-Identifier: Apache-2.0

#include "refbit/oracle/bell.hpp"

#include <cmath>

#include "refbit/quadrature.hpp"

namespace refbit::oracle {

DenseOperator bell_state_matrix(Spin j, const RotationParam& g, int copies) {
  if (copies < 1) throw std::invalid_argument("bell_state: copies >= 1");
  double amplitudes = 1.0;
  for (int i = 0; i < 2 * copies; ++i) amplitudes *= j.dim();
  check_dim_cap(static_cast<std::size_t>(amplitudes), "bell_state");
  const DenseOperator u = wigner_d(j, g);
  return kron_power(u, copies) / std::pow(double(j.dim()), 0.5 * copies);
}

StateVector bell_state(Spin j, const RotationParam& g, int copies) {
  const DenseOperator m = bell_state_matrix(j, g, copies);
  StateVector v(m.size());
  for (Eigen::Index a = 0; a < m.rows(); ++a)
    for (Eigen::Index b = 0; b < m.cols(); ++b) v(a * m.cols() + b) = m(a, b);
  return v;
}

DenseOperator total_j_squared(int n, Spin j) {
  const Generators gen = angular_momentum(j);
  Eigen::Index dim = 1;
  for (int i = 0; i < n; ++i) dim *= j.dim();
  const DenseOperator eye1 = DenseOperator::Identity(j.dim(), j.dim());
  DenseOperator jx = DenseOperator::Zero(dim, dim), jy = jx, jz = jx;
  for (int site = 0; site < n; ++site) {
    DenseOperator tx(1, 1), ty(1, 1), tz(1, 1);
    tx(0, 0) = ty(0, 0) = tz(0, 0) = 1.0;
    for (int i = 0; i < n; ++i) {
      tx = kron(tx, i == site ? gen.jx : eye1);
      ty = kron(ty, i == site ? gen.jy : eye1);
      tz = kron(tz, i == site ? gen.jz : eye1);
    }
    jx += tx;
    jy += ty;
    jz += tz;
  }
  return jx * jx + jy * jy + jz * jz;
}

SectorWeights sector_weights_numeric(int n, Spin j, std::uint64_t seed,
                                     int rotations) {
  // Cap applies to the full 2n-system state; the J^2 eigenproblem lives on
  // the n probe halves only.
  double amplitudes = 1.0;
  for (int i = 0; i < 2 * n; ++i) amplitudes *= j.dim();
  check_dim_cap(static_cast<std::size_t>(amplitudes), "sector_weights_numeric");

  Eigen::SelfAdjointEigenSolver<DenseOperator> es(total_j_squared(n, j));
  const auto sector_of = [](double eig) {
    return static_cast<int>(std::lround(std::sqrt(4.0 * eig + 1.0) - 1.0));
  };

  std::mt19937_64 rng(seed);
  std::vector<RotationParam> gs{RotationParam::identity()};
  for (int i = 1; i < std::max(1, rotations); ++i)
    gs.push_back(RotationParam::random(rng));

  std::vector<std::map<int, double>> per_g;
  for (const auto& g : gs) {
    const DenseOperator psi = bell_state_matrix(j, g, n);
    // ||(P_tj (x) I) psi||^2 accumulated eigenvector by eigenvector
    std::map<int, double> w;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      const int tj = sector_of(es.eigenvalues()(i));
      w[tj] += (es.eigenvectors().col(i).adjoint() * psi).squaredNorm();
    }
    per_g.push_back(std::move(w));
  }

  SectorWeights out;
  for (const auto& [tj, w0] : per_g.front()) {
    double lo = w0, hi = w0, sum = 0.0;
    for (const auto& w : per_g) {
      const auto it = w.find(tj);
      const double v = it == w.end() ? 0.0 : it->second;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      sum += v;
    }
    out.weights[tj] = sum / per_g.size();
    out.g_deviation = std::max(out.g_deviation, hi - lo);
  }
  if (out.g_deviation > 1e-9)
    throw std::logic_error(
        "sector_weights_numeric: projection weights depend on g");
  // drop numerically empty sectors
  std::erase_if(out.weights, [](const auto& kv) { return kv.second < 1e-12; });
  return out;
}

double multiplicity_numeric(int n, Spin j, Spin sector) {
  if ((n * j.twice() - sector.twice()) % 2 != 0) return 0.0;
  const auto quad = haar_class_quadrature(
      [&](double w) {
        return std::pow(character(j, w), n) * character(sector, w);
      },
      1e-9);
  return quad.value;
}

}  // namespace refbit::oracle
