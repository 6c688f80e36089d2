// Copyright 2026 The refbit Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <nlohmann/json.hpp>

#include "refbit/gate.hpp"

using namespace refbit;

TEST_CASE("su2 gate fidelity") {
  CHECK(su2_gate_fidelity(Spin(1), Spin(3)) == doctest::Approx(1.0 / 6.0));
  CHECK(su2_gate_fidelity(Spin(3), Spin(3)) == doctest::Approx(1.0));
  for (int tj = 0; tj <= 6; ++tj)
    for (int tk = 1; tk <= 6; ++tk) {
      if (tj == tk) continue;
      CHECK(su2_gate_fidelity(Spin(tj), Spin(tk)) <= 0.75 + 1e-12);
    }
}

TEST_CASE("gate fidelity equals the single-copy Bell fidelity") {
  for (int tj = 0; tj <= 6; ++tj)
    for (int tk = 0; tk <= 6; ++tk)
      CHECK(su2_gate_fidelity(Spin(tj), Spin(tk)) ==
            doctest::Approx(single_copy_fidelity(Spin(tj), Spin(tk)).value));
}

TEST_CASE("general formula on SU(2) pair data") {
  const auto [value, label] = general_prob_fidelity(RepData::su2_pair(Spin(2), Spin(1)));
  CHECK(value == doctest::Approx(0.75));
  CHECK(label == "l:1");

  for (int tj = 0; tj <= 4; ++tj)
    for (int tk = 1; tk <= 4; ++tk) {
      const auto [v, l] = general_prob_fidelity(RepData::su2_pair(Spin(tj), Spin(tk)));
      CHECK(v == doctest::Approx(
                     prob_opt_fidelity(ConversionTask(1, Spin(tj), 1, Spin(tk))).value)
                     .epsilon(1e-12));
    }
}

TEST_CASE("identity task reaches unit fidelity through the trivial irrep") {
  RepData identity;
  identity.input_irreps.push_back({"u", 3, 1});
  identity.output_dim = 3;
  identity.candidates.push_back({"triv", 1});
  identity.coupling[{"triv", "u"}] = 1;
  const auto [value, label] = general_prob_fidelity(identity);
  CHECK(value == doctest::Approx(1.0));
  CHECK(label == "triv");
  CHECK(optimal_is_memoryless(identity));
}

TEST_CASE("cloning data") {
  for (const int d : {2, 3, 4}) {
    const auto [value, label] = general_prob_fidelity(RepData::cloning(d));
    CHECK(value == doctest::Approx(2.0 / (d * d)));
    CHECK(unitary_cloning_fidelities(d).prob == doctest::Approx(value));
    CHECK_FALSE(optimal_is_memoryless(RepData::cloning(d)));
  }
  // cross-module identity at d = 2
  CHECK(unitary_cloning_fidelities(2).prob ==
        doctest::Approx(
            prob_opt_fidelity(ConversionTask(1, Spin(1), 2, Spin(1))).value));
}

TEST_CASE("cloning deterministic value and gap scaling") {
  const auto f2 = unitary_cloning_fidelities(2);
  CHECK(f2.prob == doctest::Approx(0.5));
  CHECK(f2.det == doctest::Approx((1.0 + std::sqrt(0.75)) / 4.0));
  CHECK(f2.det <= f2.prob);
  for (const int d : {10, 20, 40}) {
    const auto f = unitary_cloning_fidelities(d);
    const double scaled = std::pow(double(d), 4) * (f.prob - f.det);
    CHECK(scaled > 0.4);
    CHECK(scaled < 0.6);
  }
  CHECK_THROWS_AS(unitary_cloning_fidelities(1), std::invalid_argument);
}

TEST_CASE("charge conjugation") {
  CHECK(charge_conjugation_fidelity(2) == doctest::Approx(1.0));
  CHECK(charge_conjugation_fidelity(3) == doctest::Approx(1.0 / 3.0));
  CHECK(charge_conjugation_fidelity(4) == doctest::Approx(1.0 / 6.0));
  CHECK_THROWS_AS(charge_conjugation_fidelity(1), std::invalid_argument);
}

TEST_CASE("gate bounds sandwich") {
  const auto b = gate_fidelity_bounds(ConversionTask(1, Spin(2), 1, Spin(1)));
  CHECK(b.upper == doctest::Approx(0.75));
  CHECK(b.lower == doctest::Approx(0.5625));

  const auto perfect = gate_fidelity_bounds(ConversionTask(2, Spin(2), 2, Spin(1)));
  CHECK(perfect.upper == doctest::Approx(1.0));
  CHECK(perfect.lower == doctest::Approx(1.0));

  for (int n = 1; n <= 3; ++n)
    for (int tj = 1; tj <= 3; ++tj)
      for (int m = 1; m <= 3; ++m)
        for (int tk = 1; tk <= 3; ++tk) {
          const auto g =
              gate_fidelity_bounds(ConversionTask(n, Spin(tj), m, Spin(tk)));
          CHECK(g.lower == g.upper * g.upper);
          CHECK(g.lower <= g.upper + 1e-15);
        }
}

TEST_CASE("two rotated copies deterministically drive many refbits") {
  // N = 2, J = 10 -> 100 refbits: the probabilistic value is already close
  // to one, so the deterministic lower bound follows it up.
  const auto b = gate_fidelity_bounds(ConversionTask(2, Spin(20), 100, Spin(1)));
  CHECK(b.upper > 0.999);
  CHECK(b.lower > 0.998);
}

TEST_CASE("memoryless predicate on su2 data") {
  CHECK(optimal_is_memoryless(RepData::su2_pair(Spin(2), Spin(1))));
  CHECK(optimal_is_memoryless(RepData::su2_pair(Spin(3), Spin(2))));
}

TEST_CASE("RepData JSON round trip and validation") {
  const RepData rep = RepData::su2_pair(Spin(2), Spin(1));
  const RepData back = RepData::from_json(rep.to_json());
  CHECK(back.output_dim == rep.output_dim);
  CHECK(back.coupling == rep.coupling);
  CHECK(general_prob_fidelity(back).first ==
        doctest::Approx(general_prob_fidelity(rep).first));

  RepData bad;
  bad.input_irreps.push_back({"u", 2, 1});
  bad.output_dim = 2;
  CHECK_THROWS_AS(general_prob_fidelity(bad), std::invalid_argument);

  bad.candidates.push_back({"l", 1});
  bad.coupling[{"unknown", "u"}] = 1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  nlohmann::json doc = rep.to_json();
  doc["coupling"] = {{"missing-comma", 1}};
  CHECK_THROWS_AS(RepData::from_json(doc), std::invalid_argument);
}
