// Copyright 2026 The refbit Authors
// SPDX-License-Identifier: Apache-2.0

#include "refbit/conversion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "refbit/quadrature.hpp"

namespace refbit {

namespace {

constexpr double kUnitSlack = 1e-9;

double checked_unit(double value, const char* what) {
  if (value < -kUnitSlack || value > 1.0 + kUnitSlack)
    throw std::logic_error(std::string(what) + ": fidelity out of [0,1]");
  return std::clamp(value, 0.0, 1.0);
}

struct FilterOutcome {
  double fidelity = 0.0;
  double success = 0.0;
};

// Sector-filter machine between equal-parity ensembles: the fidelity is the
// output mass reachable from the input support, the success probability is
// min_k(p_in/p_out) times that mass.
FilterOutcome filter_same_parity(int n_in, Spin j, int n_out, Spin k) {
  const auto pin = sector_distribution(n_in, j);
  const auto pout = sector_distribution(n_out, k);
  double mass = 0.0;
  double c = std::numeric_limits<double>::infinity();
  for (const auto& [tj, w_in] : pin.weights) {
    auto it = pout.weights.find(tj);
    if (it == pout.weights.end()) continue;
    mass += it->second;
    c = std::min(c, w_in / it->second);
  }
  if (!std::isfinite(c)) return {0.0, 0.0};  // disjoint supports
  return {checked_unit(mass, "prob_filter_fidelity"),
          checked_unit(c * mass, "prob_filter success")};
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::SingleCopy: return "single-copy";
    case Method::DetIsometric: return "det-iso";
    case Method::ProbOptimal: return "prob-opt";
    case Method::ProbFilter: return "prob-filter";
    case Method::DetUpperAsym: return "det-upper";
    case Method::DetAsym: return "det-asym";
    case Method::ProbUpperWindow: return "prob-window";
    case Method::MPExact: return "mp-exact";
    case Method::MPAsym: return "mp-asym";
    case Method::AnalyzerBound: return "analyzer-bound";
    case Method::FilterBound: return "filter-bound";
  }
  return "unknown";
}

FidelityResult single_copy_fidelity(Spin j, Spin k) {
  FidelityResult r;
  r.method = Method::SingleCopy;
  r.value = double(j.dim()) /
            (double(k.dim()) * double(std::abs(j.twice() - k.twice()) + 1));
  r.value = checked_unit(r.value, "single_copy_fidelity");
  return r;
}

FidelityResult det_iso_fidelity(const ConversionTask& t) {
  if (!t.parity_match())
    throw ParityError(
        "det_iso_fidelity: NJ and MK have different parity, the covariant "
        "isometry is undefined");
  if (t.twice_nj() > t.twice_mk())
    throw ConversionError("det_iso_fidelity: requires NJ <= MK");
  const auto pin = sector_distribution(t.n_in, t.spin_in);
  const auto pout = sector_distribution(t.n_out, t.spin_out);
  double overlap = 0.0;
  for (const auto& [tj, w_in] : pin.weights) {
    auto it = pout.weights.find(tj);
    if (it != pout.weights.end()) overlap += std::sqrt(w_in * it->second);
  }
  FidelityResult r;
  r.method = Method::DetIsometric;
  r.value = checked_unit(overlap * overlap, "det_iso_fidelity");
  return r;
}

FidelityResult prob_opt_fidelity(const ConversionTask& t) {
  const auto table_in = MultiplicityTable::tensor_power(t.n_in, t.spin_in);
  const auto pout = sector_distribution(t.n_out, t.spin_out);
  const int tnj = t.twice_nj();
  const int tl_max = tnj + t.twice_mk();
  const int tl_parity = tl_max % 2;

  double best = -1.0;
  int best_tl = 0;
  for (int tl = tl_parity; tl <= tl_max; tl += 2) {
    double f = 0.0;
    for (const auto& [tk, pk] : pout.weights) {
      const int lo = std::abs(tk - tl);
      const int hi = std::min(tnj, tk + tl);
      long long dim_sum = 0;
      for (int tj = lo; tj <= hi; tj += 2)
        if (table_in.contains(Spin(tj))) dim_sum += tj + 1;
      f += pk * double(dim_sum) / (double(tk + 1) * double(tl + 1));
    }
    if (f > best + 1e-14) {
      best = f;
      best_tl = tl;
    }
  }
  FidelityResult r;
  r.method = Method::ProbOptimal;
  r.value = checked_unit(best, "prob_opt_fidelity");
  r.twice_argmax_l = best_tl;
  return r;
}

FidelityResult prob_filter_fidelity(const ConversionTask& t) {
  if (t.n_in <= 1)
    throw ConversionError("prob_filter_fidelity: requires N > 1");
  FidelityResult r;
  r.method = Method::ProbFilter;
  if (t.parity_match()) {
    const auto out = filter_same_parity(t.n_in, t.spin_in, t.n_out, t.spin_out);
    r.value = out.fidelity;
    r.success_probability = out.success;
    return r;
  }
  // Refbit route: analyze to 2NJ refbits, discard one, synthesize.
  const int refbits = t.twice_nj();
  const auto stage1 = filter_same_parity(t.n_in, t.spin_in, refbits, spin_half);
  const auto stage3 =
      filter_same_parity(refbits - 1, spin_half, t.n_out, t.spin_out);
  r.value = stage3.fidelity;
  r.success_probability = stage1.success * stage3.success;
  r.via_refbit_protocol = true;
  return r;
}

bool exact_probabilistic_feasible(const ConversionTask& t) {
  if (t.n_in <= 1)
    throw ConversionError("exact_probabilistic_feasible: requires N > 1");
  return t.twice_nj() >= t.twice_mk();
}

FidelityResult det_upper_bound(const ConversionTask& t) {
  const double out_fisher = t.n_out * t.spin_out.casimir();
  if (out_fisher <= 0.0)
    throw ConversionError("det_upper_bound: requires M K (K+1) > 0");
  const double ratio = t.n_in * t.spin_in.casimir() / out_fisher;
  const double raw = std::pow(ratio, 1.5);
  FidelityResult r;
  r.method = Method::DetUpperAsym;
  r.clamped = raw > 1.0;
  r.value = std::min(1.0, raw);
  return r;
}

FidelityResult det_asymptotic_fidelity(const ConversionTask& t) {
  const double s = t.n_in * t.spin_in.casimir();
  if (s <= 0.0)
    throw ConversionError("det_asymptotic_fidelity: requires N J (J+1) > 0");
  const double delta = fisher_deviation(t);
  const double raw = 1.0 - 3.0 * delta * delta / (8.0 * s * s);
  FidelityResult r;
  r.method = Method::DetAsym;
  r.clamped = raw < 0.0;
  r.value = std::max(0.0, raw);
  r.outside_validity = delta >= s;
  return r;
}

FidelityResult prob_upper_bound_window(const ConversionTask& t) {
  if (t.twice_mk() < t.twice_nj())
    throw ConversionError("prob_upper_bound_window: requires MK >= NJ");
  const auto pout = sector_distribution(t.n_out, t.spin_out);
  const double p = window_mass(pout, t.twice_nj());
  FidelityResult r;
  r.method = Method::ProbUpperWindow;
  r.value = checked_unit(0.5 * (1.0 + p), "prob_upper_bound_window");
  return r;
}

double success_probability_bound(int n, Spin j, Spin k, double ratio) {
  if (k.twice() == 0)
    throw std::invalid_argument("success_probability_bound: K must be > 0");
  const double rate_star = j.casimir() / k.casimir();
  if (ratio < rate_star * (1.0 - 1e-12))
    throw std::invalid_argument(
        "success_probability_bound: requires R >= R* = J(J+1)/K(K+1)");
  const double nj = n * j.value();
  const double raw = std::pow(ratio / rate_star, 1.5) *
                     std::exp(-1.5 * nj / (j.value() + 1.0) *
                              (1.0 - rate_star / ratio));
  return std::min(1.0, raw);
}

double unbreakable_bound(Spin j) {
  if (j.twice() < 1)
    throw std::invalid_argument("unbreakable_bound: requires J >= 1/2");
  return 0.5 * (1.0 + 1.0 / double(j.twice()));
}

double analyzer_filter_lower_bound(int n, Spin j, int m) {
  const double nj = n * j.value();
  return std::max(0.0, 1.0 - (m + 1) * std::exp(-2.0 * nj * nj / (m + 1)));
}

std::vector<TwoCopyScanPoint> two_copy_analyzer_scan(
    Spin j, std::span<const double> alphas) {
  if (j.twice() < 1)
    throw std::invalid_argument("two_copy_analyzer_scan: requires J >= 1/2");
  const int tj = j.twice();
  const double log_din = 2.0 * std::log(double(tj + 1));
  std::vector<TwoCopyScanPoint> points;
  points.reserve(alphas.size());
  for (const double alpha : alphas) {
    long long m = static_cast<long long>(std::floor(alpha * tj * tj / 4.0));
    m -= m % 2;  // integer output sectors must align with the input's
    if (m < 1)
      throw std::invalid_argument(
          "two_copy_analyzer_scan: alpha J^2 below one output copy");
    const long long k_max = std::min<long long>(tj, m / 2);
    double overlap = 0.0;
    for (long long k = 0; k <= k_max; ++k) {
      const double log_in = std::log(double(2 * k + 1)) - log_din;
      const double log_out =
          half_sector_weight_log(static_cast<int>(m), static_cast<int>(k));
      overlap += std::exp(0.5 * (log_in + log_out));
    }
    points.push_back({alpha, m, checked_unit(overlap * overlap,
                                             "two_copy_analyzer_scan")});
  }
  return points;
}

double lower_incomplete_gamma(double s, double x) {
  if (s <= 0.0 || x < 0.0)
    throw std::invalid_argument("lower_incomplete_gamma: need s > 0, x >= 0");
  if (x == 0.0) return 0.0;
  if (x < s + 1.0) {
    // series gamma(s,x) = x^s e^-x sum_n x^n / (s (s+1) ... (s+n))
    double term = 1.0 / s;
    double sum = term;
    for (int n = 1; n < 500; ++n) {
      term *= x / (s + n);
      sum += term;
      if (std::abs(term) < 1e-16 * std::abs(sum)) break;
    }
    return sum * std::exp(s * std::log(x) - x);
  }
  // continued fraction for the upper incomplete Gamma(s,x)
  double b = x + 1.0 - s;
  double c = 1.0 / 1e-300;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < 1e-300) d = 1e-300;
    c = b + an / c;
    if (std::abs(c) < 1e-300) c = 1e-300;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  const double upper = std::exp(s * std::log(x) - x) * h;
  return std::tgamma(s) - upper;
}

double two_copy_fidelity_asymptotic(double alpha) {
  if (alpha <= 0.0)
    throw std::invalid_argument("two_copy_fidelity_asymptotic: alpha > 0");
  const double g = lower_incomplete_gamma(1.25, 4.0 / alpha);
  return std::sqrt(2.0 * alpha * alpha / std::numbers::pi) * g * g;
}

FidelityResult mp_fidelity_exact(int n, Spin k) {
  if (n < 1) throw std::invalid_argument("mp_fidelity_exact: requires n >= 1");
  const auto norm = haar_class_quadrature([](double) { return 1.0; }, 1e-12);
  if (!norm.converged || std::abs(norm.value - 1.0) > 1e-12)
    throw QuadratureError("mp_fidelity_exact: class measure not normalized",
                          std::abs(norm.value - 1.0));

  const auto pin = sector_distribution(n, spin_half);
  std::vector<std::pair<Spin, double>> amplitudes;
  amplitudes.reserve(pin.weights.size());
  for (const auto& [tj, w] : pin.weights)
    amplitudes.emplace_back(Spin(tj), std::sqrt(w));

  const double dk = k.dim();
  const auto integrand = [&](double w) {
    double a = 0.0;
    for (const auto& [sector, amp] : amplitudes)
      a += amp * character(sector, w);
    const double sk = std::sin(0.5 * dk * w);
    return a * a * sk * sk / (dk * dk);
  };
  // The sin^2 of chi_K cancels the class-measure weight, so integrate the
  // plain 1/pi form directly; it is identical but better conditioned at 0.
  const auto quad = integrate_adaptive(
      [&](double w) { return integrand(w) / std::numbers::pi; },
      -std::numbers::pi, std::numbers::pi, 1e-10);
  if (!quad.converged)
    throw QuadratureError("mp_fidelity_exact: quadrature did not converge",
                          quad.error_estimate);
  FidelityResult r;
  r.method = Method::MPExact;
  r.value = checked_unit(quad.value, "mp_fidelity_exact");
  r.quadrature_error = quad.error_estimate;
  return r;
}

FidelityResult mp_fidelity_asymptotic(int n, Spin k) {
  if (n < 1)
    throw std::invalid_argument("mp_fidelity_asymptotic: requires n >= 1");
  const double dk = k.dim();
  const double raw = 1.0 - dk * dk / (4.0 * n);
  FidelityResult r;
  r.method = Method::MPAsym;
  r.clamped = raw < 0.0;
  r.value = std::max(0.0, raw);
  return r;
}

}  // namespace refbit
