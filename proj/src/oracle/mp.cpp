// Copyright 2026 The refbit Authors
// SPDX-License-Identifier: Apache-2.0

#include "refbit/oracle/mp.hpp"

#include <cmath>
#include <numbers>

#include "refbit/oracle/bell.hpp"
#include "refbit/oracle/cg.hpp"
#include "refbit/quadrature.hpp"

namespace refbit::oracle {

namespace {

// |eta_g><eta_g| seed vector of the optimal covariant POVM for two refbits,
// expressed as a matrix between the coupled probe pair and reference pair:
// H_g = sum_k sqrt(d_k) W_k U_{g,k} W_k^T with W_k the coupled-basis blocks.
DenseOperator povm_seed_matrix_n2(const RotationParam& g) {
  const DenseOperator w = coupling_unitary(spin_half, spin_half);
  DenseOperator h = DenseOperator::Zero(4, 4);
  for (const Spin total : couple_range(spin_half, spin_half)) {
    const auto block =
        w.middleCols(coupled_block_offset(spin_half, spin_half, total),
                     total.dim());
    h += std::sqrt(double(total.dim())) * block * wigner_d(total, g) *
         block.transpose();
  }
  return h;
}

// Sector weights of n refbits from the eigenvalue count of total J^2:
// p_k = (# eigenvalues in sector k) / 2^n.
std::map<int, double> sector_weights_by_count(int n) {
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(total_j_squared(n, spin_half));
  std::map<int, double> p;
  const double total = std::pow(2.0, n);
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const int tj =
        static_cast<int>(std::lround(std::sqrt(4.0 * es.eigenvalues()(i) + 1.0) - 1.0));
    p[tj] += 1.0 / total;
  }
  return p;
}

double mp_numeric_n2(Spin k) {
  const DenseOperator rho = bell_state_matrix(spin_half, RotationParam::identity(), 2);
  const double dk = k.dim();
  const auto integrand = [&](double w) {
    const RotationParam g =
        RotationParam::axis_angle(Eigen::Vector3d::UnitZ(), w);
    const DenseOperator eta = povm_seed_matrix_n2(g);
    // Tr[M_g rho] for the pure input, and the preparation overlap
    const double likelihood = std::norm((eta.adjoint() * rho).trace());
    const double prep =
        std::norm(wigner_d(k, g).trace()) / (dk * dk);
    return likelihood * prep;
  };
  const auto quad = haar_class_quadrature(integrand, 1e-9);
  return quad.value;
}

double mp_numeric_traces(int n, Spin k) {
  const auto p = sector_weights_by_count(n);
  const double dk = k.dim();
  const auto integrand = [&](double w) {
    const RotationParam g =
        RotationParam::axis_angle(Eigen::Vector3d::UnitZ(), w);
    double a = 0.0;
    for (const auto& [tj, weight] : p)
      a += std::sqrt(weight) * wigner_d(Spin(tj), g).trace().real();
    const double prep = std::norm(wigner_d(k, g).trace()) / (dk * dk);
    return a * a * prep;
  };
  const auto quad = haar_class_quadrature(integrand, 1e-9);
  return quad.value;
}

}  // namespace

double mp_channel_fidelity_numeric(int n, Spin k) {
  if (n < 1)
    throw std::invalid_argument("mp_channel_fidelity_numeric: n >= 1");
  if (n > 10)
    throw DimensionCapError(
        "mp_channel_fidelity_numeric: n above the supported probe size");
  return n == 2 ? mp_numeric_n2(k) : mp_numeric_traces(n, k);
}

double povm_completeness_residual(int n) {
  if (n != 2)
    throw std::invalid_argument(
        "povm_completeness_residual: only the multiplicity-free n = 2 POVM "
        "is constructed explicitly");
  // Exact product quadrature over Euler angles: uniform alpha and gamma
  // (band limit 2), Gauss-Legendre in beta against sin(beta).
  constexpr int na = 8, nb = 20, ng = 8;
  std::vector<double> bx(nb), bw(nb);
  {
    // Gauss-Legendre nodes on [0, pi] by Newton iteration on P_nb
    for (int i = 0; i < nb; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (nb + 0.5));
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = 0.0;
        for (int m = 0; m < nb; ++m) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * m + 1.0) * x * p1 - m * p2) / (m + 1.0);
        }
        const double dp = nb * (x * p0 - p1) / (x * x - 1.0);
        const double dx = p0 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      double p0 = 1.0, p1 = 0.0;
      for (int m = 0; m < nb; ++m) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * m + 1.0) * x * p1 - m * p2) / (m + 1.0);
      }
      const double dp = nb * (x * p0 - p1) / (x * x - 1.0);
      bx[i] = std::numbers::pi * 0.5 * (1.0 - x);
      bw[i] = std::numbers::pi / ((1.0 - x * x) * dp * dp);
    }
  }

  DenseOperator accum = DenseOperator::Zero(16, 16);
  for (int ia = 0; ia < na; ++ia) {
    const double alpha = 2.0 * std::numbers::pi * ia / na;
    for (int ib = 0; ib < nb; ++ib) {
      const double beta = bx[ib];
      const double wb = bw[ib] * std::sin(beta) / 2.0;
      for (int ig = 0; ig < ng; ++ig) {
        const double gamma = 2.0 * std::numbers::pi * ig / ng;
        const DenseOperator h =
            povm_seed_matrix_n2(RotationParam::euler(alpha, beta, gamma));
        StateVector eta(16);
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b) eta(a * 4 + b) = h(a, b);
        accum += (wb / (na * ng)) * (eta * eta.adjoint());
      }
    }
  }

  // Diagonal-sector projector sum_k P_k (x) P_k; the orthogonal complement
  // is appended to the POVM as a fixed outcome, so completeness on the full
  // space reduces to matching this projector.
  const DenseOperator w = coupling_unitary(spin_half, spin_half);
  DenseOperator pdiag = DenseOperator::Zero(16, 16);
  for (const Spin total : couple_range(spin_half, spin_half)) {
    const auto block =
        w.middleCols(coupled_block_offset(spin_half, spin_half, total),
                     total.dim());
    const DenseOperator pk = block * block.adjoint();
    pdiag += kron(pk, pk);
  }
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(accum - pdiag);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace refbit::oracle
