// Copyright 2026 The refbit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

namespace refbit {

/// One analytic-vs-numeric check. `tolerance` may be adjusted by the case
/// itself (Monte-Carlo cases report a 3-sigma band).
struct VerifyOutcome {
  double analytic = 0.0;
  double numeric = 0.0;
  double tolerance = 1e-8;
};

struct VerifyCase {
  std::string name;
  double default_tolerance = 1e-8;
  std::function<VerifyOutcome(std::uint64_t seed)> run;
};

struct VerifyRecord {
  std::string name;
  double analytic = 0.0;
  double numeric = 0.0;
  double abs_err = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

nlohmann::json to_json(const VerifyRecord& r);

/// Every registered oracle cross-check.
const std::vector<VerifyCase>& verify_cases();

VerifyRecord run_verify_case(const VerifyCase& c, std::uint64_t seed,
                             std::optional<double> tolerance_override);

/// Runs the cases whose names contain `filter` (all when empty) across a
/// pool of `jobs` workers; records come back in registry order.
std::vector<VerifyRecord> run_verification(
    const std::string& filter, std::uint64_t seed,
    std::optional<double> tolerance_override, int jobs);

}  // namespace refbit
