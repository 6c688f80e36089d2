// Copyright 2026 The refbit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <nlohmann/json.hpp>
#include <string>

namespace refbit {

inline constexpr const char* kVersion = "0.1.0";

/// Round to 12 significant digits so serialized output is reproducible
/// byte for byte.
double round12(double x);

/// Recursively rounds every number in the document.
nlohmann::json round12(nlohmann::json j);

/// Envelope written by every CLI command: command echo, twice-spin
/// parameters, per-operation results, and run metadata.
struct OutputRecord {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  nlohmann::json metadata = nlohmann::json::object();

  std::string to_json_string() const;
};

std::string csv_escape(const std::string& field);

}  // namespace refbit
