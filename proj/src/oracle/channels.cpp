// Copyright 2026 The refbit Authors
// SPDX-License-Identifier: Apache-2.0

#include "refbit/oracle/channels.hpp"

#include <bit>
#include <cmath>

#include "refbit/oracle/cg.hpp"

namespace refbit::oracle {

DenseOperator dicke_embedding(Spin j) {
  const int nq = j.twice();
  const std::size_t rows = std::size_t{1} << nq;
  DenseOperator e = DenseOperator::Zero(rows, j.dim());
  if (nq == 0) {
    e(0, 0) = 1.0;
    return e;
  }
  std::vector<double> norm(nq + 1, 0.0);
  for (std::size_t x = 0; x < rows; ++x) norm[std::popcount(x)] += 1.0;
  for (std::size_t x = 0; x < rows; ++x) {
    const int ones = std::popcount(x);  // column a = number of down spins
    e(x, ones) = 1.0 / std::sqrt(norm[ones]);
  }
  return e;
}

std::vector<DenseOperator> clone_discard_channel(Spin j, Spin k) {
  if (j == k)
    return {DenseOperator::Identity(j.dim(), j.dim())};
  const DenseOperator ej = dicke_embedding(j);
  const DenseOperator ek = dicke_embedding(k);
  std::vector<DenseOperator> kraus;
  if (j < k) {
    const int extra = k.twice() - j.twice();
    const std::size_t env_dim = std::size_t{1} << extra;
    check_dim_cap((std::size_t{1} << k.twice()) * j.dim(),
                  "clone_discard_channel");
    const double c = std::sqrt(double(j.dim()) / double(k.dim()));
    kraus.reserve(env_dim);
    for (std::size_t env = 0; env < env_dim; ++env) {
      // E_K^dag (E_J v (x) |env>): the symmetric projector collapses onto
      // E_K E_K^dag, so only the decode of the padded embedding survives.
      DenseOperator a = DenseOperator::Zero(k.dim(), j.dim());
      for (Eigen::Index col = 0; col < j.dim(); ++col)
        for (Eigen::Index x = 0; x < ej.rows(); ++x) {
          const std::complex<double> amp = ej(x, col);
          if (amp == 0.0) continue;
          const std::size_t padded = (static_cast<std::size_t>(x) << extra) | env;
          a.col(col) += c * amp * ek.row(padded).adjoint();
        }
      kraus.push_back(std::move(a));
    }
  } else {
    const int dropped = j.twice() - k.twice();
    const std::size_t env_dim = std::size_t{1} << dropped;
    check_dim_cap(std::size_t{1} << j.twice(), "clone_discard_channel");
    kraus.reserve(env_dim);
    for (std::size_t env = 0; env < env_dim; ++env) {
      DenseOperator a = DenseOperator::Zero(k.dim(), j.dim());
      for (Eigen::Index col = 0; col < j.dim(); ++col)
        for (Eigen::Index kept = 0; kept < (Eigen::Index{1} << k.twice());
             ++kept) {
          const std::size_t x =
              (static_cast<std::size_t>(kept) << dropped) | env;
          const std::complex<double> amp = ej(x, col);
          if (amp == 0.0) continue;
          a.col(col) += amp * ek.row(kept).adjoint();
        }
      kraus.push_back(std::move(a));
    }
  }
  return kraus;
}

double clone_discard_bell_fidelity(Spin j, Spin k, std::uint64_t seed,
                                   int rotations) {
  const auto kraus = clone_discard_channel(j, k);
  std::mt19937_64 rng(seed);
  std::vector<RotationParam> gs{RotationParam::identity()};
  for (int i = 1; i < std::max(2, rotations); ++i)
    gs.push_back(RotationParam::random(rng));

  double lo = 1.0, hi = 0.0, sum = 0.0;
  for (const auto& g : gs) {
    const DenseOperator psi = wigner_d(j, g) / std::sqrt(double(j.dim()));
    const DenseOperator target = wigner_d(k, g) / std::sqrt(double(k.dim()));
    double f = 0.0;
    for (const auto& a : kraus)
      for (const auto& b : kraus)
        f += std::norm((target.adjoint() * a * psi * b.transpose()).trace());
    lo = std::min(lo, f);
    hi = std::max(hi, f);
    sum += f;
  }
  if (hi - lo > 1e-9)
    throw std::logic_error(
        "clone_discard_bell_fidelity: integrand depends on g");
  return sum / gs.size();
}

DenseOperator isometry_n2_half(Spin j, Spin k) {
  if (j > k)
    throw std::invalid_argument("build_isometry_n2: requires J <= K");
  const DenseOperator wj = coupling_unitary(j, j);
  const DenseOperator wk = coupling_unitary(k, k);
  DenseOperator t = DenseOperator::Zero(wk.rows(), wj.rows());
  for (const Spin total : couple_range(j, j)) {
    const auto bj = wj.middleCols(coupled_block_offset(j, j, total), total.dim());
    const auto bk = wk.middleCols(coupled_block_offset(k, k, total), total.dim());
    t += bk * bj.adjoint();
  }
  return t;
}

DenseOperator build_isometry_n2(Spin j, Spin k) {
  const std::size_t out_dim = std::size_t(k.dim()) * k.dim();
  check_dim_cap(out_dim * out_dim, "build_isometry_n2");
  const DenseOperator t = isometry_n2_half(j, k);
  return kron(t, t);
}

double isometry_bell_fidelity_n2(Spin j, Spin k, std::uint64_t seed,
                                 int rotations) {
  const DenseOperator t = isometry_n2_half(j, k);
  std::mt19937_64 rng(seed);
  std::vector<RotationParam> gs{RotationParam::identity()};
  for (int i = 1; i < std::max(2, rotations); ++i)
    gs.push_back(RotationParam::random(rng));
  double lo = 1.0, hi = 0.0, sum = 0.0;
  for (const auto& g : gs) {
    const DenseOperator uj = wigner_d(j, g);
    const DenseOperator uk = wigner_d(k, g);
    const DenseOperator psi = kron(uj, uj) / double(j.dim());
    const DenseOperator target = kron(uk, uk) / double(k.dim());
    const double f = std::norm((target.adjoint() * t * psi * t.transpose()).trace());
    lo = std::min(lo, f);
    hi = std::max(hi, f);
    sum += f;
  }
  if (hi - lo > 1e-9)
    throw std::logic_error("isometry_bell_fidelity_n2: integrand depends on g");
  return sum / gs.size();
}

double isometry_covariance_residual_n2(Spin j, Spin k, std::uint64_t seed,
                                       int pairs) {
  const DenseOperator v = build_isometry_n2(j, k);
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int i = 0; i < pairs; ++i) {
    const RotationParam g = RotationParam::random(rng);
    const RotationParam h = RotationParam::random(rng);
    const DenseOperator gj = kron(wigner_d(j, g), wigner_d(j, g));
    const DenseOperator hj = kron(wigner_d(j, h), wigner_d(j, h));
    const DenseOperator gk = kron(wigner_d(k, g), wigner_d(k, g));
    const DenseOperator hk = kron(wigner_d(k, h), wigner_d(k, h));
    const DenseOperator lhs = kron(gk, hk) * v;
    const DenseOperator rhs = v * kron(gj, hj);
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace refbit::oracle
