// Copyright 2026 The refbit Authors
// SPDX-License-Identifier: Apache-2.0

#include "refbit/gate.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

namespace refbit {

long long RepData::coupling_mult(const std::string& l,
                                 const std::string& j) const {
  auto it = coupling.find({l, j});
  return it == coupling.end() ? 0 : it->second;
}

void RepData::validate() const {
  if (input_irreps.empty())
    throw std::invalid_argument("RepData: no input irreps");
  if (output_dim < 1) throw std::invalid_argument("RepData: output_dim < 1");
  if (candidates.empty())
    throw std::invalid_argument("RepData: empty candidate set");
  for (const auto& irrep : input_irreps)
    if (irrep.dim < 1 || irrep.mult < 1)
      throw std::invalid_argument("RepData: non-positive dim or mult");
  for (const auto& cand : candidates)
    if (cand.dim < 1) throw std::invalid_argument("RepData: candidate dim < 1");
  for (const auto& [key, mult] : coupling) {
    if (mult < 0) throw std::invalid_argument("RepData: negative multiplicity");
    const bool known = std::any_of(candidates.begin(), candidates.end(),
                                   [&](const Candidate& c) {
                                     return c.label == key.first;
                                   });
    if (!known)
      throw std::invalid_argument("RepData: coupling label '" + key.first +
                                  "' missing from candidates");
  }
}

nlohmann::json RepData::to_json() const {
  nlohmann::json irreps = nlohmann::json::array();
  for (const auto& irrep : input_irreps)
    irreps.push_back({{"label", irrep.label},
                      {"dim", irrep.dim},
                      {"mult", irrep.mult}});
  nlohmann::json cands = nlohmann::json::array();
  for (const auto& cand : candidates)
    cands.push_back({{"label", cand.label}, {"dim", cand.dim}});
  nlohmann::json coup = nlohmann::json::object();
  for (const auto& [key, mult] : coupling)
    coup[key.first + "," + key.second] = mult;
  return nlohmann::json{{"input_irreps", irreps},
                        {"output_dim", output_dim},
                        {"candidates", cands},
                        {"coupling", coup}};
}

RepData RepData::from_json(const nlohmann::json& j) {
  RepData r;
  for (const auto& irrep : j.at("input_irreps"))
    r.input_irreps.push_back({irrep.at("label").get<std::string>(),
                              irrep.at("dim").get<int>(),
                              irrep.value("mult", 1LL)});
  r.output_dim = j.at("output_dim").get<long long>();
  for (const auto& cand : j.at("candidates"))
    r.candidates.push_back(
        {cand.at("label").get<std::string>(), cand.at("dim").get<int>()});
  for (const auto& [key, mult] : j.at("coupling").items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("RepData: coupling key must be 'l,j'");
    r.coupling[{key.substr(0, comma), key.substr(comma + 1)}] =
        mult.get<long long>();
  }
  r.validate();
  return r;
}

RepData RepData::su2_pair(Spin j, Spin k) {
  RepData r;
  const std::string jl = "j:" + std::to_string(j.twice());
  r.input_irreps.push_back({jl, j.dim(), 1});
  r.output_dim = k.dim();
  for (const Spin l : couple_range(k, j)) {
    const std::string ll = "l:" + std::to_string(l.twice());
    r.candidates.push_back({ll, l.dim()});
    r.coupling[{ll, jl}] = 1;  // SU(2) coupling is multiplicity-free
  }
  return r;
}

RepData RepData::cloning(int d) {
  if (d < 2) throw std::invalid_argument("cloning: requires d >= 2");
  // U (x) U (x) conj(U) contains U itself with multiplicity 2; the other
  // candidates all have strictly worse d_j m / d_l and are omitted from the
  // worked example data.
  RepData r;
  r.input_irreps.push_back({"u", d, 1});
  r.output_dim = static_cast<long long>(d) * d;
  r.candidates.push_back({"u", d});
  r.coupling[{"u", "u"}] = 2;
  return r;
}

std::pair<double, std::string> general_prob_fidelity(const RepData& r) {
  r.validate();
  double best = -1.0;
  std::string best_label;
  for (const auto& cand : r.candidates) {
    double sum = 0.0;
    for (const auto& irrep : r.input_irreps)
      sum += double(irrep.dim) * double(r.coupling_mult(cand.label, irrep.label));
    const double f = sum / (double(r.output_dim) * double(cand.dim));
    if (f > best + 1e-14) {
      best = f;
      best_label = cand.label;
    }
  }
  if (best < -1e-12 || best > 1.0 + 1e-9)
    throw std::logic_error("general_prob_fidelity: value out of [0,1]");
  return {std::clamp(best, 0.0, 1.0), best_label};
}

double su2_gate_fidelity(Spin j, Spin k) {
  return single_copy_fidelity(j, k).value;
}

GateBounds gate_fidelity_bounds(const ConversionTask& t) {
  const double upper = prob_opt_fidelity(t).value;
  return {upper * upper, upper};
}

bool optimal_is_memoryless(const RepData& r) {
  const auto [value, label] = general_prob_fidelity(r);
  (void)value;
  long long max_mult = 0;
  for (const auto& irrep : r.input_irreps)
    max_mult = std::max(max_mult, r.coupling_mult(label, irrep.label));
  return max_mult == 1;
}

CloningFidelities unitary_cloning_fidelities(int d) {
  if (d < 2)
    throw std::invalid_argument("unitary_cloning_fidelities: requires d >= 2");
  const double dd = double(d) * d;
  CloningFidelities f;
  f.prob = 2.0 / dd;
  f.det = (1.0 + std::sqrt(1.0 - 1.0 / dd)) / dd;
  return f;
}

double charge_conjugation_fidelity(int d) {
  if (d < 2)
    throw std::invalid_argument("charge_conjugation_fidelity: requires d >= 2");
  return 2.0 / (double(d) * (d - 1));
}

}  // namespace refbit
