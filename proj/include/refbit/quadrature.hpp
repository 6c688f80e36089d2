// Copyright 2026 The refbit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>

#include "refbit/spin.hpp"

namespace refbit {

/// SU(2) character chi_j(omega) = sin((2j+1) omega/2) / sin(omega/2),
/// evaluated as a cosine sum so the omega = 0 singularity is removable
/// exactly.
double character(Spin j, double omega);

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
};

/// Adaptive Gauss-Legendre integration of f over [a, b] to the requested
/// absolute tolerance.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    double abs_tol = 1e-10,
                                    int max_depth = 24);

/// Class integral of a conjugation-invariant function over SU(2):
/// (1/pi) Int_{-pi}^{pi} sin^2(omega/2) f(omega) d omega.
QuadratureResult haar_class_quadrature(const std::function<double(double)>& f,
                                       double abs_tol = 1e-10);

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
};

/// Seeded Monte-Carlo estimate of the same class integral, sampling omega
/// from the density sin^2(omega/2)/pi by inverse-CDF.
MonteCarloEstimate haar_class_monte_carlo(const std::function<double(double)>& f,
                                          std::uint64_t samples,
                                          std::uint64_t seed);

}  // namespace refbit
