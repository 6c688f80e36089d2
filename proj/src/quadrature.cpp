// Copyright 2026 The refbit Authors
// SPDX-License-Identifier: Apache-2.0

#include "refbit/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>

namespace refbit {

double character(Spin j, double omega) {
  // chi_j = sum_{m=-j}^{j} e^{i m omega}, grouped into cosines.
  const int tj = j.twice();
  double sum = 0.0;
  if (tj % 2 == 0) {
    sum = 1.0;
    for (int m = 1; m <= tj / 2; ++m) sum += 2.0 * std::cos(m * omega);
  } else {
    for (int t = 1; t <= tj; t += 2) sum += 2.0 * std::cos(0.5 * t * omega);
  }
  return sum;
}

namespace {

// 15-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr std::array<double, 8> kNodes = {
    0.0,
    0.2011940939974345,
    0.3941513470775634,
    0.5709721726085388,
    0.7244177313601700,
    0.8482065834104272,
    0.9372733924007059,
    0.9879925180204854};
constexpr std::array<double, 8> kWeights = {
    0.2025782419255613,
    0.1984314853271116,
    0.1861610000155622,
    0.1662692058169939,
    0.1395706779261543,
    0.1071592204671719,
    0.0703660474881081,
    0.0307532419961173};

double gauss15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double sum = kWeights[0] * f(c);
  for (std::size_t i = 1; i < kNodes.size(); ++i) {
    const double dx = h * kNodes[i];
    sum += kWeights[i] * (f(c + dx) + f(c - dx));
  }
  return sum * h;
}

void refine(const std::function<double(double)>& f, double a, double b,
            double whole, double tol, int depth, int max_depth,
            double& value, double& err, bool& converged) {
  const double mid = 0.5 * (a + b);
  const double left = gauss15(f, a, mid);
  const double right = gauss15(f, mid, b);
  const double delta = std::abs(left + right - whole);
  if (delta <= tol || depth >= max_depth) {
    value += left + right;
    err += delta;
    if (delta > tol) converged = false;
    return;
  }
  refine(f, a, mid, left, 0.5 * tol, depth + 1, max_depth, value, err, converged);
  refine(f, mid, b, right, 0.5 * tol, depth + 1, max_depth, value, err, converged);
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol,
                                    int max_depth) {
  QuadratureResult r;
  refine(f, a, b, gauss15(f, a, b), abs_tol, 0, max_depth, r.value,
         r.error_estimate, r.converged);
  return r;
}

QuadratureResult haar_class_quadrature(const std::function<double(double)>& f,
                                       double abs_tol) {
  const auto integrand = [&f](double w) {
    const double s = std::sin(0.5 * w);
    return s * s * f(w) / std::numbers::pi;
  };
  return integrate_adaptive(integrand, -std::numbers::pi, std::numbers::pi,
                            abs_tol);
}

MonteCarloEstimate haar_class_monte_carlo(const std::function<double(double)>& f,
                                          std::uint64_t samples,
                                          std::uint64_t seed) {
  if (samples < 2)
    throw std::invalid_argument("haar_class_monte_carlo: need >= 2 samples");
  // CDF of the class density on [-pi, pi]: F(w) = (w - sin w + pi) / (2 pi).
  const auto sample_omega = [](double u) {
    double lo = -std::numbers::pi, hi = std::numbers::pi;
    const double target = 2.0 * std::numbers::pi * u - std::numbers::pi;
    for (int i = 0; i < 60; ++i) {
      const double mid = 0.5 * (lo + hi);
      (mid - std::sin(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  double sum = 0.0, sum_sq = 0.0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const double v = f(sample_omega(uniform(rng)));
    sum += v;
    sum_sq += v * v;
  }
  MonteCarloEstimate e;
  e.samples = samples;
  e.mean = sum / samples;
  const double var = std::max(0.0, sum_sq / samples - e.mean * e.mean);
  e.std_error = std::sqrt(var / (samples - 1));
  return e;
}

}  // namespace refbit
