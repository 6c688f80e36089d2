// Copyright 2026 The refbit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <nlohmann/json_fwd.hpp>

#include "refbit/spin.hpp"

namespace refbit {

using BigInt = boost::multiprecision::cpp_int;

/// Exact multiplicities m_j of the total-angular-momentum sectors in the
/// N-fold tensor power of a spin-J irrep. Sectors with zero multiplicity
/// are omitted; every stored twice_j satisfies 0 <= twice_j <= N*twice(J)
/// and twice_j == N*twice(J) (mod 2).
class MultiplicityTable {
 public:
  /// Dynamic-programming iteration of the triangle coupling rule over
  /// n >= 1 factors. Counts are exact for any n and J.
  static MultiplicityTable tensor_power(int copies, Spin base);

  int copies() const { return copies_; }
  Spin base() const { return base_; }
  const std::map<int, BigInt>& entries() const { return entries_; }

  /// Multiplicity of the given sector; zero when outside the support.
  BigInt count(Spin sector) const;
  bool contains(Spin sector) const { return entries_.count(sector.twice()) > 0; }

  /// Largest sector N*J.
  Spin max_sector() const { return Spin(copies_ * base_.twice()); }

  /// Sum_j dim(j) * m_j; equals dim(J)^N for a valid table.
  BigInt dimension_sum() const;

  nlohmann::json to_json() const;
  static MultiplicityTable from_json(const nlohmann::json& j);

 private:
  MultiplicityTable(int copies, Spin base, std::map<int, BigInt> entries)
      : copies_(copies), base_(base), entries_(std::move(entries)) {}

  int copies_ = 1;
  Spin base_;
  std::map<int, BigInt> entries_;
};

/// Convenience wrapper matching the table constructor.
MultiplicityTable tensor_power_multiplicities(int n, Spin j);

/// m_k for m spin-1/2 factors from the closed-form binomial expression,
/// m_k = (2k+1)/(m+1) * C(m+1, m/2+k+1). Only even m (integer sectors) is
/// accepted; the division is exact and checked.
BigInt multiplicity_half_closed_form(int m, Spin k);

/// Multiplicity of the irrep l inside { U_K^{(x)M} (x) conj(U_j) } computed
/// from the table of U_K^{(x)M}: Sum_k m_k * [k,j couple to l]. Uses the
/// self-conjugacy of SU(2) irreps.
BigInt coupling_multiplicity(const MultiplicityTable& t, Spin l, Spin j);

/// Natural logarithm of a positive big integer, accurate to ~1e-15 relative.
double log_big(const BigInt& value);

}  // namespace refbit
