// Copyright 2026 The refbit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace refbit {

/// Half-integer angular momentum, stored losslessly as its twice-value.
/// Spin(1) is spin-1/2, Spin(2) is spin-1, and so on.
class Spin {
 public:
  constexpr Spin() = default;
  constexpr explicit Spin(int twice_value) : twice_(twice_value) {
    if (twice_value < 0)
      throw std::invalid_argument("Spin: twice-value must be non-negative");
  }

  constexpr int twice() const { return twice_; }
  constexpr int dim() const { return twice_ + 1; }  // 2j+1
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  double value() const { return 0.5 * twice_; }

  /// j(j+1) evaluated exactly from the twice-value.
  double casimir() const { return 0.25 * twice_ * (twice_ + 2); }

  friend constexpr auto operator<=>(Spin, Spin) = default;

  std::string to_string() const;

 private:
  int twice_ = 0;
};

inline constexpr Spin spin_half{1};

constexpr int dim(Spin s) { return s.dim(); }

/// All spins l with |j1-j2| <= l <= j1+j2 in unit steps, ascending.
std::vector<Spin> couple_range(Spin j1, Spin j2);

/// Triangle rule |j1-j2| <= l <= j1+j2 together with the parity constraint
/// that l sits on the coupling grid of j1 and j2.
bool couples(Spin j1, Spin j2, Spin l);

}  // namespace refbit
