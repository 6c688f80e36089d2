// Copyright 2026 The refbit Authors
// SPDX-License-Identifier: Apache-2.0

#include "refbit/oracle/cg.hpp"

#include <cmath>

namespace refbit::oracle {

namespace {

// lgamma(n/2 + 1) for an even twice-value argument; the Racah formula only
// ever needs factorials of integers, passed here as twice-values.
double lfact_twice(int twice_n) {
  if (twice_n < 0 || twice_n % 2 != 0)
    throw std::logic_error("cg_coefficient: non-integer factorial argument");
  return std::lgamma(0.5 * twice_n + 1.0);
}

}  // namespace

double cg_coefficient(Spin j1, Spin j2, Spin j, int twice_m1, int twice_m2,
                      int twice_m) {
  const int tj1 = j1.twice(), tj2 = j2.twice(), tj = j.twice();
  if (twice_m != twice_m1 + twice_m2) return 0.0;
  if (!couples(j1, j2, j)) return 0.0;
  if (std::abs(twice_m1) > tj1 || std::abs(twice_m2) > tj2 ||
      std::abs(twice_m) > tj)
    return 0.0;
  if ((tj1 + twice_m1) % 2 != 0 || (tj2 + twice_m2) % 2 != 0 ||
      (tj + twice_m) % 2 != 0)
    return 0.0;

  // Racah's closed form; every factorial argument below is a twice-value.
  const double log_norm =
      std::log(tj + 1.0) + lfact_twice(tj1 + tj2 - tj) +
      lfact_twice(tj1 - tj2 + tj) + lfact_twice(-tj1 + tj2 + tj) -
      lfact_twice(tj1 + tj2 + tj + 2) + lfact_twice(tj + twice_m) +
      lfact_twice(tj - twice_m) + lfact_twice(tj1 - twice_m1) +
      lfact_twice(tj1 + twice_m1) + lfact_twice(tj2 - twice_m2) +
      lfact_twice(tj2 + twice_m2);

  const int z_min =
      std::max({0, tj2 - twice_m1 - tj, tj1 + twice_m2 - tj});
  const int z_max =
      std::min({tj1 + tj2 - tj, tj1 - twice_m1, tj2 + twice_m2});
  double sum = 0.0;
  for (int tz = z_min; tz <= z_max; tz += 2) {
    const double log_den =
        lfact_twice(tz) + lfact_twice(tj1 + tj2 - tj - tz) +
        lfact_twice(tj1 - twice_m1 - tz) + lfact_twice(tj2 + twice_m2 - tz) +
        lfact_twice(tj - tj2 + twice_m1 + tz) +
        lfact_twice(tj - tj1 - twice_m2 + tz);
    const double term = std::exp(0.5 * log_norm - log_den);
    sum += (tz / 2) % 2 == 0 ? term : -term;
  }
  return sum;
}

DenseOperator coupling_unitary(Spin j1, Spin j2) {
  const int rows = j1.dim() * j2.dim();
  DenseOperator w = DenseOperator::Zero(rows, rows);
  int col = 0;
  for (const Spin total : couple_range(j1, j2)) {
    for (int a = 0; a < total.dim(); ++a, ++col) {
      const int tm = total.twice() - 2 * a;
      for (int a1 = 0; a1 < j1.dim(); ++a1) {
        const int tm1 = j1.twice() - 2 * a1;
        const int tm2 = tm - tm1;
        if (std::abs(tm2) > j2.twice() || (j2.twice() + tm2) % 2 != 0) continue;
        const int a2 = (j2.twice() - tm2) / 2;
        w(a1 * j2.dim() + a2, col) =
            cg_coefficient(j1, j2, total, tm1, tm2, tm);
      }
    }
  }
  return w;
}

int coupled_block_offset(Spin j1, Spin j2, Spin total) {
  if (!couples(j1, j2, total))
    throw std::invalid_argument("coupled_block_offset: spin outside range");
  int offset = 0;
  for (const Spin l : couple_range(j1, j2)) {
    if (l == total) return offset;
    offset += l.dim();
  }
  throw std::logic_error("coupled_block_offset: unreachable");
}

}  // namespace refbit::oracle
