// Copyright 2026 The refbit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "refbit/oracle/wigner.hpp"

namespace refbit::oracle {

/// Isometry from the spin-j space into the symmetric (Dicke) subspace of
/// 2j qubits, columns ordered like |j,m> (m descending), Dicke states
/// ordered by excitation number.
DenseOperator dicke_embedding(Spin j);

/// Kraus family of the local converter C_{2J->2K} acting on a spin system:
/// symmetric-subspace cloning for J <= K, qubit discarding for J > K.
/// Operators map dim(J) -> dim(K) and are trace preserving on the spin space.
std::vector<DenseOperator> clone_discard_channel(Spin j, Spin k);

/// Haar-averaged fidelity of applying C_{2J->2K} to both halves of a rotated
/// spin-J Bell state against the spin-K target. The integrand is verified to
/// be g-independent over `rotations` random rotations before averaging.
double clone_discard_bell_fidelity(Spin j, Spin k, std::uint64_t seed = 11,
                                   int rotations = 4);

/// Optimal covariant isometry for two input and two output pairs, mapping
/// the total-spin-j component of |Phi_{g,J}>^{(x)2} onto the matching
/// component of |Phi_{g,K}>^{(x)2}. Requires J <= K. Returned on the
/// two-pair spaces (probe pair major).
DenseOperator build_isometry_n2(Spin j, Spin k);

/// Single-pair-side intertwiner T with build_isometry_n2 = T (x) T.
DenseOperator isometry_n2_half(Spin j, Spin k);

/// Haar-averaged conversion fidelity of the N=2 isometric channel,
/// g-independence checked.
double isometry_bell_fidelity_n2(Spin j, Spin k, std::uint64_t seed = 13,
                                 int rotations = 4);

/// Largest entry of (U_{g,K} (x) U_{h,K})^{(x)2} V - V (U_{g,J} (x) U_{h,J})^{(x)2}
/// over random (g, h) pairs; zero for an exactly covariant isometry.
double isometry_covariance_residual_n2(Spin j, Spin k, std::uint64_t seed = 17,
                                       int pairs = 3);

}  // namespace refbit::oracle
