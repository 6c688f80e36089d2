// Copyright 2026 The refbit Authors
// SPDX-License-Identifier: Apache-2.0

#include "refbit/oracle/dense.hpp"

#include <cstdlib>
#include <string>

namespace refbit::oracle {

std::size_t dim_cap() {
  if (const char* env = std::getenv("REFBIT_DIM_CAP")) {
    const long long v = std::atoll(env);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return 4096;
}

void check_dim_cap(std::size_t amplitudes, const char* what) {
  const std::size_t cap = dim_cap();
  if (amplitudes > cap)
    throw DimensionCapError(std::string(what) + ": requires " +
                            std::to_string(amplitudes) +
                            " amplitudes, cap is " + std::to_string(cap) +
                            " (override with REFBIT_DIM_CAP)");
}

double isometry_defect(const DenseOperator& a) {
  const DenseOperator g = a.adjoint() * a;
  return (g - DenseOperator::Identity(g.rows(), g.cols()))
      .cwiseAbs()
      .maxCoeff();
}

double unitarity_defect(const DenseOperator& a) {
  if (a.rows() != a.cols()) return 1.0;
  const DenseOperator gt = a * a.adjoint();
  const double right =
      (gt - DenseOperator::Identity(gt.rows(), gt.cols())).cwiseAbs().maxCoeff();
  return std::max(isometry_defect(a), right);
}

DenseOperator kron_power(const DenseOperator& a, int n) {
  if (n < 1) throw std::invalid_argument("kron_power: n >= 1");
  DenseOperator out = a;
  for (int i = 1; i < n; ++i) out = kron(out, a);
  return out;
}

}  // namespace refbit::oracle
