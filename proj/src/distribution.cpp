// Copyright 2026 The refbit Authors
// SPDX-License-Identifier: Apache-2.0

#include "refbit/distribution.hpp"

#include <cmath>
#include <numbers>

namespace refbit {

double SectorDistribution::total() const {
  double sum = 0.0;
  for (const auto& [tj, w] : weights) sum += w;
  return sum;
}

SectorDistribution sector_distribution(const MultiplicityTable& table) {
  SectorDistribution d;
  d.copies = table.copies();
  d.base = table.base();
  d.provenance = Provenance::Exact;
  const double log_total = table.copies() * std::log(double(table.base().dim()));
  for (const auto& [tj, count] : table.entries())
    d.weights[tj] = std::exp(std::log(double(tj + 1)) + log_big(count) - log_total);
  return d;
}

SectorDistribution sector_distribution(int n, Spin j) {
  return sector_distribution(MultiplicityTable::tensor_power(n, j));
}

double sector_weight_asymptotic(int n, Spin base, Spin sector) {
  const double s = n * base.casimir();  // N J (J+1)
  if (s <= 0.0)
    throw std::invalid_argument("sector_weight_asymptotic: N J (J+1) must be > 0");
  const double jj = sector.value();
  const double d = sector.dim();
  const double pref = std::sqrt(27.0 * d * d * d * d /
                                (8.0 * std::numbers::pi * s * s * s));
  return pref * std::exp(-1.5 * jj * jj / s);
}

SectorDistribution sector_distribution_asymptotic(int n, Spin j) {
  SectorDistribution d;
  d.copies = n;
  d.base = j;
  d.provenance = Provenance::Asymptotic;
  const int tmax = n * j.twice();
  for (int tj = tmax % 2; tj <= tmax; tj += 2)
    d.weights[tj] = sector_weight_asymptotic(n, j, Spin(tj));
  return d;
}

double half_sector_weight_log(int n, int sector_int) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("half_sector_weight_log: n must be even");
  const int k = sector_int;
  if (k < 0 || k > n / 2) return -std::numeric_limits<double>::infinity();
  // log[ (2k+1)^2 / (2^n (n+1)) * C(n+1, n/2+k+1) ]
  return 2.0 * std::log(double(2 * k + 1)) - n * std::log(2.0) -
         std::log(double(n + 1)) + std::lgamma(double(n + 2)) -
         std::lgamma(double(n / 2 + k + 2)) - std::lgamma(double(n / 2 - k + 1));
}

double qfi(int n, Spin j) { return 4.0 * n * j.casimir() / 3.0; }

double fisher_deviation(const ConversionTask& t) {
  return std::abs(t.n_out * t.spin_out.casimir() - t.n_in * t.spin_in.casimir());
}

double window_mass(const SectorDistribution& d, int twice_window) {
  if (twice_window < 0)
    throw std::invalid_argument("window_mass: window must be non-negative");
  double best = 0.0;
  for (const auto& [tx, unused] : d.weights) {
    double sum = 0.0;
    for (auto it = d.weights.lower_bound(tx);
         it != d.weights.end() && it->first <= tx + twice_window; ++it)
      sum += it->second;
    best = std::max(best, sum);
  }
  return best;
}

}  // namespace refbit
