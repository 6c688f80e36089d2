// Copyright 2026 The refbit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>

#include "refbit/oracle/wigner.hpp"

namespace refbit::oracle {

/// |Phi_{g,J}>^{(x)n} as a matrix between the n probe halves (rows) and the
/// n reference halves (columns): U_{g,J}^{(x)n} / dim(J)^{n/2}. The state
/// vector is the row-major vectorization.
DenseOperator bell_state_matrix(Spin j, const RotationParam& g, int copies);

/// The same state as a flat vector (probe-major index a * dim^n + b).
StateVector bell_state(Spin j, const RotationParam& g, int copies);

struct SectorWeights {
  std::map<int, double> weights;  // twice_j -> squared projection norm
  double g_deviation = 0.0;       // max spread across the sampled rotations
};

/// Squared norms of the total-angular-momentum sector projections of
/// |Phi_{g,J}>^{(x)n}, built by eigendecomposing the total J^2 of the probe
/// halves. Evaluated at `rotations` Haar-random g (plus the identity) and
/// checked to be g-independent.
SectorWeights sector_weights_numeric(int n, Spin j, std::uint64_t seed = 7,
                                     int rotations = 3);

/// Character-orthogonality multiplicity Int dmu chi_J^n chi_sector, rounded
/// by the caller against the exact tables. Exactly zero when the sector
/// parity is incompatible (the SU(2) multiplicity vanishes there).
double multiplicity_numeric(int n, Spin j, Spin sector);

/// Total-J^2 operator of n spin-j systems, dim(j)^n dimensional.
DenseOperator total_j_squared(int n, Spin j);

}  // namespace refbit::oracle
