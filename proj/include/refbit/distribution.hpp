// Copyright 2026 The refbit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>

#include "refbit/multiplicity.hpp"
#include "refbit/spin.hpp"

namespace refbit {

enum class Provenance { Exact, Asymptotic };

/// Normalized weights p_j of the total-angular-momentum sectors in the
/// N-copy Bell state. Exact tables satisfy Sum p_j = 1 to 1e-12.
struct SectorDistribution {
  int copies = 1;
  Spin base;
  Provenance provenance = Provenance::Exact;
  std::map<int, double> weights;  // twice_j -> probability

  double at(Spin sector) const {
    auto it = weights.find(sector.twice());
    return it == weights.end() ? 0.0 : it->second;
  }
  double total() const;
  Spin max_sector() const { return Spin(copies * base.twice()); }
};

/// The conversion |Phi_{g,J}>^{(x)N} -> |Phi_{g,K}>^{(x)M}.
struct ConversionTask {
  int n_in = 1;
  Spin spin_in;
  int n_out = 1;
  Spin spin_out;

  ConversionTask(int n, Spin j, int m, Spin k)
      : n_in(n), spin_in(j), n_out(m), spin_out(k) {
    if (n < 1 || m < 1)
      throw std::invalid_argument("ConversionTask: copy counts must be >= 1");
  }
  int twice_nj() const { return n_in * spin_in.twice(); }
  int twice_mk() const { return n_out * spin_out.twice(); }
  bool parity_match() const { return (twice_nj() - twice_mk()) % 2 == 0; }
};

/// Exact sector weights p_j = dim(j) m_j / dim(J)^N, evaluated in log space
/// so that tables remain finite for large N.
SectorDistribution sector_distribution(int n, Spin j);

/// Same weights computed from an existing multiplicity table.
SectorDistribution sector_distribution(const MultiplicityTable& table);

/// Leading-order Gaussian weight for sector j of n spin-J copies,
/// sqrt(27 (2j+1)^4 / (8 pi N^3 J^3 (J+1)^3)) exp(-3 j^2 / (2 N J (J+1))).
/// No subleading correction factor is applied.
double sector_weight_asymptotic(int n, Spin j, Spin sector);

/// Asymptotic weights over the exact support; provenance = Asymptotic and
/// the weights need not sum to one.
SectorDistribution sector_distribution_asymptotic(int n, Spin j);

/// Log-space sector weight p_k for n spin-1/2 copies from the closed-form
/// binomial expression; valid for even n and integer k, usable for n far
/// beyond the reach of the DP tables.
double half_sector_weight_log(int n, int sector_int);

/// Quantum Fisher information 4 N J (J+1) / 3 of N rotated spin-J Bell pairs.
double qfi(int n, Spin j);

/// |M K(K+1) - N J(J+1)| for a conversion task.
double fisher_deviation(const ConversionTask& t);

/// Largest total weight of any sector window [x, x + window], window given
/// as a twice-value.
double window_mass(const SectorDistribution& d, int twice_window);

}  // namespace refbit
