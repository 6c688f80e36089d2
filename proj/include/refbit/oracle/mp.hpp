// Copyright 2026 The refbit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "refbit/oracle/wigner.hpp"

namespace refbit::oracle {

/// Fidelity of the measure-and-prepare synthesizer from n refbits to one
/// spin-K Bell pair, evaluated from dense matrices. The double Haar integral
/// over the true and estimated rotation reduces to a single class integral;
/// the POVM overlap and the preparation overlap are both computed from
/// explicitly constructed operators (n = 2) or rotation-matrix traces with
/// eigen-decomposed sector data (n > 2).
double mp_channel_fidelity_numeric(int n, Spin k);

/// || Int dg M_g - I || (largest eigenvalue magnitude of the defect) for the
/// covariant estimation POVM on n refbits, the group integral done by exact
/// Euler-angle product quadrature. Only the multiplicity-free case n = 2 is
/// constructed explicitly.
double povm_completeness_residual(int n);

}  // namespace refbit::oracle
