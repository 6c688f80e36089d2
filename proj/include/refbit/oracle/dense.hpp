// Copyright 2026 The refbit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace refbit::oracle {

using DenseOperator = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

class DimensionCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Total-amplitude cap for oracle constructions; REFBIT_DIM_CAP overrides
/// the default of 4096.
std::size_t dim_cap();

/// Throws DimensionCapError when `amplitudes` exceeds the cap.
void check_dim_cap(std::size_t amplitudes, const char* what);

/// || A^dag A - I ||_inf over entries; zero for an isometry.
double isometry_defect(const DenseOperator& a);

/// max(||A^dag A - I||, ||A A^dag - I||); zero for a unitary.
double unitarity_defect(const DenseOperator& a);

inline DenseOperator kron(const DenseOperator& a, const DenseOperator& b) {
  DenseOperator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// n-fold Kronecker power.
DenseOperator kron_power(const DenseOperator& a, int n);

}  // namespace refbit::oracle
