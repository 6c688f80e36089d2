// Copyright 2026 The refbit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "refbit/oracle/dense.hpp"
#include "refbit/spin.hpp"

namespace refbit::oracle {

/// Clebsch-Gordan coefficient <j1 m1; j2 m2 | j m> in the Condon-Shortley
/// convention, evaluated with the Racah closed form and log-factorials.
/// Magnetic numbers are twice-values. Zero outside the triangle rule or when
/// m != m1 + m2.
double cg_coefficient(Spin j1, Spin j2, Spin j, int twice_m1, int twice_m2,
                      int twice_m);

/// Unitary change of basis from the product basis of j1 (x) j2 (rows,
/// m1-major, m descending) to the coupled basis (columns, blocks of
/// ascending total spin, m descending within each block).
DenseOperator coupling_unitary(Spin j1, Spin j2);

/// Column offset of the total-spin block inside coupling_unitary's columns.
int coupled_block_offset(Spin j1, Spin j2, Spin total);

}  // namespace refbit::oracle
