// Copyright 2026 The refbit Authors
// SPDX-License-Identifier: Apache-2.0

#include "refbit/output.hpp"

#include <cstdio>

namespace refbit {

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

nlohmann::json round12(nlohmann::json j) {
  if (j.is_number_float()) return round12(j.get<double>());
  if (j.is_object())
    for (auto& [key, value] : j.items()) value = round12(value);
  if (j.is_array())
    for (auto& value : j) value = round12(value);
  return j;
}

std::string OutputRecord::to_json_string() const {
  nlohmann::json doc{{"command", command},
                     {"parameters", parameters},
                     {"results", results},
                     {"metadata", metadata}};
  doc["metadata"]["version"] = kVersion;
  return round12(doc).dump(2) + "\n";
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace refbit
