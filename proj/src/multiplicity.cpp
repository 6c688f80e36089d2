// Copyright 2026 The refbit Authors
// SPDX-License-Identifier: Apache-2.0

#include "refbit/multiplicity.hpp"

#include <cmath>
#include <nlohmann/json.hpp>
#include <sstream>

namespace refbit {

MultiplicityTable MultiplicityTable::tensor_power(int copies, Spin base) {
  if (copies < 1)
    throw std::invalid_argument("tensor_power: need at least one copy");
  std::map<int, BigInt> cur{{base.twice(), BigInt(1)}};
  for (int step = 1; step < copies; ++step) {
    std::map<int, BigInt> next;
    for (const auto& [tj, count] : cur) {
      const int lo = std::abs(tj - base.twice());
      const int hi = tj + base.twice();
      for (int tl = lo; tl <= hi; tl += 2) next[tl] += count;
    }
    cur = std::move(next);
  }
  return MultiplicityTable(copies, base, std::move(cur));
}

BigInt MultiplicityTable::count(Spin sector) const {
  auto it = entries_.find(sector.twice());
  return it == entries_.end() ? BigInt(0) : it->second;
}

BigInt MultiplicityTable::dimension_sum() const {
  BigInt sum = 0;
  for (const auto& [tj, count] : entries_) sum += BigInt(tj + 1) * count;
  return sum;
}

nlohmann::json MultiplicityTable::to_json() const {
  nlohmann::json entries = nlohmann::json::object();
  for (const auto& [tj, count] : entries_)
    entries[std::to_string(tj)] = count.str();
  return nlohmann::json{{"copies", copies_},
                        {"twice_base", base_.twice()},
                        {"entries", entries}};
}

MultiplicityTable MultiplicityTable::from_json(const nlohmann::json& j) {
  std::map<int, BigInt> entries;
  for (const auto& [key, value] : j.at("entries").items())
    entries[std::stoi(key)] = BigInt(value.get<std::string>());
  return MultiplicityTable(j.at("copies").get<int>(),
                           Spin(j.at("twice_base").get<int>()),
                           std::move(entries));
}

MultiplicityTable tensor_power_multiplicities(int n, Spin j) {
  return MultiplicityTable::tensor_power(n, j);
}

namespace {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace

BigInt multiplicity_half_closed_form(int m, Spin k) {
  if (m < 2 || m % 2 != 0)
    throw std::invalid_argument(
        "multiplicity_half_closed_form: the closed form assumes an even "
        "number of factors (integer sectors)");
  if (!k.is_integer())
    throw std::invalid_argument(
        "multiplicity_half_closed_form: sector must be an integer spin");
  const int ik = k.twice() / 2;
  if (ik > m / 2) return 0;
  BigInt num = BigInt(2 * ik + 1) * binomial(m + 1, m / 2 + ik + 1);
  if (num % (m + 1) != 0)
    throw std::logic_error("multiplicity_half_closed_form: inexact division");
  return num / (m + 1);
}

BigInt coupling_multiplicity(const MultiplicityTable& t, Spin l, Spin j) {
  BigInt sum = 0;
  for (const auto& [tk, count] : t.entries())
    if (couples(Spin(tk), j, l)) sum += count;
  return sum;
}

double log_big(const BigInt& value) {
  if (value <= 0) throw std::domain_error("log_big: value must be positive");
  const auto bits = boost::multiprecision::msb(value);
  if (bits <= 960) return std::log(value.convert_to<double>());
  const unsigned shift = static_cast<unsigned>(bits) - 52;
  const BigInt top = value >> shift;
  return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}

}  // namespace refbit
