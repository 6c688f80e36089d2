// Copyright 2026 The refbit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "refbit/distribution.hpp"

namespace refbit {

enum class Method {
  SingleCopy,
  DetIsometric,
  ProbOptimal,
  ProbFilter,
  DetUpperAsym,
  DetAsym,
  ProbUpperWindow,
  MPExact,
  MPAsym,
  AnalyzerBound,
  FilterBound,
};

std::string to_string(Method m);

/// A conversion fidelity or bound. `clamped` marks values that an asymptotic
/// formula pushed outside [0,1] before clamping; `via_refbit_protocol` marks
/// filter results obtained through the three-stage refbit route used for
/// parity-mismatched tasks.
struct FidelityResult {
  double value = 0.0;
  Method method = Method::SingleCopy;
  std::optional<double> success_probability;
  bool clamped = false;
  std::optional<int> twice_argmax_l;
  bool via_refbit_protocol = false;
  bool outside_validity = false;
  std::optional<double> quadrature_error;
};

class ConversionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParityError : public ConversionError {
 public:
  using ConversionError::ConversionError;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_error(achieved) {}
  double achieved_error;
};

/// Optimal single-pair fidelity (2J+1) / ((2K+1)(2|J-K|+1)); deterministic
/// and probabilistic machines coincide for one input copy.
FidelityResult single_copy_fidelity(Spin j, Spin k);

/// Fidelity of the optimal covariant isometric channel,
/// (Sum_j sqrt(p_j^in p_j^out))^2 over the shared sector support.
/// Requires NJ <= MK and matching parity; otherwise the defining isometry
/// does not exist and a ConversionError / ParityError is thrown.
FidelityResult det_iso_fidelity(const ConversionTask& t);

/// Optimal probabilistic fidelity max_l Sum_k p_k^out f_k^(l) with
/// f_k^(l) = (1/(d_k d_l)) Sum_j d_j, the j-sum running over the input
/// sector support within the (k,l) triangle and capped at NJ. The achieving
/// l is reported; ties break toward smaller l.
FidelityResult prob_opt_fidelity(const ConversionTask& t);

/// Fidelity and total success probability of the sector-filter machine.
/// Requires more than one input copy. Parity-mismatched tasks route through
/// analyze-to-refbits / discard-one / synthesize and report the composed
/// success probability.
FidelityResult prob_filter_fidelity(const ConversionTask& t);

/// Exact probabilistic convertibility for N > 1: true iff NJ >= MK.
bool exact_probabilistic_feasible(const ConversionTask& t);

/// Asymptotic deterministic upper bound min(1, [NJ(J+1)/(MK(K+1))]^{3/2}).
FidelityResult det_upper_bound(const ConversionTask& t);

/// Asymptotic isometric fidelity 1 - 3 Delta^2 / (8 S^2), S = N J (J+1).
/// Flagged outside_validity when Delta >= S.
FidelityResult det_asymptotic_fidelity(const ConversionTask& t);

/// Probabilistic upper bound (1 + P)/2 where P is the largest mass of a
/// sector window of length NJ in the output distribution. Requires MK >= NJ.
FidelityResult prob_upper_bound_window(const ConversionTask& t);

/// Success-probability bound min(1, (R/R*)^{3/2} exp(-3NJ/(2(J+1)) (1 - R*/R)))
/// for output rate R = M/N at or above the Fisher rate R* = J(J+1)/K(K+1).
double success_probability_bound(int n, Spin j, Spin k, double ratio);

/// No analyzer can break a single spin-J Bell state into refbits with
/// fidelity above (1/2)(1 + 1/(2J)).
double unbreakable_bound(Spin j);

/// Hoeffding lower bound max(0, 1 - (M+1) exp(-2 N^2 J^2 / (M+1))) on the
/// filter analyzer producing M refbits.
double analyzer_filter_lower_bound(int n, Spin j, int m);

struct TwoCopyScanPoint {
  double alpha = 0.0;
  long long m_refbits = 0;
  double fidelity = 0.0;
};

/// Reversible two-copy analyzer: for each alpha produce M = floor(alpha J^2)
/// refbits (decremented to even so integer sectors align) and evaluate the
/// isometric overlap with p_j^{(2,J)} = (2j+1)/(2J+1)^2 and the closed-form
/// spin-1/2 output weights. Throws when M < 1.
std::vector<TwoCopyScanPoint> two_copy_analyzer_scan(Spin j,
                                                     std::span<const double> alphas);

/// Large-J limit of the two-copy analyzer fidelity,
/// sqrt(2 alpha^2 / pi) * gamma(5/4, 4/alpha)^2 with the lower incomplete
/// gamma function.
double two_copy_fidelity_asymptotic(double alpha);

/// Measure-and-prepare fidelity of synthesizing one spin-K Bell state from
/// n refbits, evaluated by adaptive class quadrature of
/// (1/pi) Int d omega [sin((2K+1)w/2)^2/(2K+1)^2] |Sum_k sqrt(p_k) chi_k(w)|^2.
/// The class-measure normalization is validated before use.
FidelityResult mp_fidelity_exact(int n, Spin k);

/// Asymptotic measure-and-prepare fidelity max(0, 1 - (2K+1)^2 / (4N)).
FidelityResult mp_fidelity_asymptotic(int n, Spin k);

/// Lower incomplete gamma function gamma(s, x) for s, x > 0.
double lower_incomplete_gamma(double s, double x);

}  // namespace refbit
