// Copyright 2026 The refbit Authors
// SPDX-License-Identifier: Apache-2.0

#include "refbit/spin.hpp"

namespace refbit {

std::string Spin::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

std::vector<Spin> couple_range(Spin j1, Spin j2) {
  const int lo = std::abs(j1.twice() - j2.twice());
  const int hi = j1.twice() + j2.twice();
  std::vector<Spin> out;
  out.reserve((hi - lo) / 2 + 1);
  for (int t = lo; t <= hi; t += 2) out.emplace_back(t);
  return out;
}

bool couples(Spin j1, Spin j2, Spin l) {
  const int t = l.twice();
  if ((j1.twice() + j2.twice() + t) % 2 != 0) return false;
  return std::abs(j1.twice() - j2.twice()) <= t && t <= j1.twice() + j2.twice();
}

}  // namespace refbit
