// Copyright 2026 The refbit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "refbit/conversion.hpp"

namespace refbit {

/// Group data for a gate-simulation task U -> V: the irreps of the input
/// representation, the output dimension, the candidate irreps l of
/// V (x) conj(U), and the multiplicities m_l^{(j)} of l in V (x) conj(U_j).
/// Labels are opaque strings.
struct RepData {
  struct InputIrrep {
    std::string label;
    int dim = 1;
    long long mult = 1;
  };
  struct Candidate {
    std::string label;
    int dim = 1;
  };

  std::vector<InputIrrep> input_irreps;
  long long output_dim = 1;
  std::vector<Candidate> candidates;
  std::map<std::pair<std::string, std::string>, long long> coupling;  // (l, j)

  long long coupling_mult(const std::string& l, const std::string& j) const;
  void validate() const;

  nlohmann::json to_json() const;
  static RepData from_json(const nlohmann::json& j);

  /// SU(2) data for simulating a spin-K rotation with one spin-J rotation.
  static RepData su2_pair(Spin j, Spin k);
  /// Data for cloning one use of an unknown d-dimensional gate into two.
  static RepData cloning(int d);
};

/// Deterministic-vs-probabilistic sandwich for gate simulation:
/// lower = upper^2 with upper the probabilistic Bell fidelity.
struct GateBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Probabilistic gate-simulation fidelity for general group data,
/// max_l (1/(d_out d_l)) Sum_j d_j m_l^{(j)}, with the achieving label.
/// Ties break toward the first candidate in listed order.
std::pair<double, std::string> general_prob_fidelity(const RepData& r);

/// Entanglement fidelity of simulating a spin-K rotation with a spin-J
/// rotation; deterministic and probabilistic coincide for irreps.
double su2_gate_fidelity(Spin j, Spin k);

/// (F_prob^2, F_prob) bounds on the deterministic gate fidelity for the
/// Bell-conversion task t.
GateBounds gate_fidelity_bounds(const ConversionTask& t);

/// True when the argmax candidate couples with multiplicity one, so the
/// optimum is reachable by local operations / a memoryless network.
bool optimal_is_memoryless(const RepData& r);

struct CloningFidelities {
  double prob = 0.0;
  double det = 0.0;
};

/// Probabilistic 2/d^2 and deterministic (1 + sqrt(1 - 1/d^2))/d^2 fidelities
/// for cloning one use of an unknown unitary gate.
CloningFidelities unitary_cloning_fidelities(int d);

/// Deterministic fidelity 2/(d(d-1)) for simulating conj(U) from U.
double charge_conjugation_fidelity(int d);

}  // namespace refbit
