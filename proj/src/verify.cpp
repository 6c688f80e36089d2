// Copyright 2026 The refbit Authors
// SPDX-License-Identifier: Apache-2.0

#include "refbit/verify.hpp"

#include <atomic>
#include <cmath>
#include <nlohmann/json.hpp>
#include <thread>

#include "refbit/conversion.hpp"
#include "refbit/oracle/bell.hpp"
#include "refbit/oracle/channels.hpp"
#include "refbit/oracle/cg.hpp"
#include "refbit/oracle/mp.hpp"
#include "refbit/quadrature.hpp"

namespace refbit {

namespace {

using oracle::RotationParam;

VerifyOutcome residual_case(double residual, double tol) {
  return {0.0, residual, tol};
}

// Largest |p_exact - p_numeric| between the analytic sector distribution and
// the eigenprojector weights.
double sector_weight_residual(int n, Spin j, std::uint64_t seed) {
  const auto exact = sector_distribution(n, j);
  const auto numeric = oracle::sector_weights_numeric(n, j, seed);
  double worst = numeric.g_deviation;
  for (const auto& [tj, w] : exact.weights)
    worst = std::max(worst, std::abs(w - (numeric.weights.count(tj)
                                              ? numeric.weights.at(tj)
                                              : 0.0)));
  for (const auto& [tj, w] : numeric.weights)
    worst = std::max(worst, std::abs(w - exact.at(Spin(tj))));
  return worst;
}

double character_multiplicity_residual(int n, Spin j) {
  const auto table = MultiplicityTable::tensor_power(n, j);
  double worst = 0.0;
  const int tmax = n * j.twice();
  for (int tj = tmax % 2; tj <= tmax; tj += 2) {
    const double numeric = oracle::multiplicity_numeric(n, j, Spin(tj));
    const double exact = table.count(Spin(tj)).convert_to<double>();
    worst = std::max(worst, std::abs(numeric - exact));
  }
  return worst;
}

double closed_form_residual(int m) {
  const auto table = MultiplicityTable::tensor_power(m, spin_half);
  double worst = 0.0;
  for (int tk = 0; tk <= m; tk += 2) {
    const BigInt diff =
        table.count(Spin(tk)) - multiplicity_half_closed_form(m, Spin(tk));
    worst = std::max(worst, std::abs(diff.convert_to<double>()));
  }
  return worst;
}

double kraus_tp_residual(Spin j, Spin k) {
  const auto kraus = oracle::clone_discard_channel(j, k);
  oracle::DenseOperator sum =
      oracle::DenseOperator::Zero(j.dim(), j.dim());
  for (const auto& a : kraus) sum += a.adjoint() * a;
  return (sum - oracle::DenseOperator::Identity(j.dim(), j.dim()))
      .cwiseAbs()
      .maxCoeff();
}

std::vector<VerifyCase> build_cases() {
  std::vector<VerifyCase> cases;
  const auto add = [&cases](std::string name, double tol,
                            std::function<VerifyOutcome(std::uint64_t)> fn) {
    cases.push_back({std::move(name), tol, std::move(fn)});
  };

  // Single-copy conversion against the clone/discard pipeline.
  const std::pair<int, int> jk_pairs[] = {{2, 1}, {1, 2}, {3, 1}, {1, 3}};
  for (const auto& [tj, tk] : jk_pairs) {
    add("single-copy/clone-discard/2J=" + std::to_string(tj) +
            ",2K=" + std::to_string(tk),
        1e-8, [tj, tk](std::uint64_t seed) -> VerifyOutcome {
          const double analytic =
              single_copy_fidelity(Spin(tj), Spin(tk)).value;
          const double numeric =
              oracle::clone_discard_bell_fidelity(Spin(tj), Spin(tk), seed);
          return {analytic, numeric, 1e-8};
        });
  }

  // Sector distributions against the projector oracle (grid under the cap).
  for (int tj = 1; tj <= 3; ++tj)
    for (int n = 1; n <= 4; ++n) {
      const double amplitudes = std::pow(double(tj + 1), 2 * n);
      if (amplitudes > double(oracle::dim_cap())) continue;
      add("sector-weights/N=" + std::to_string(n) + ",2J=" + std::to_string(tj),
          1e-10, [n, tj](std::uint64_t seed) {
            return residual_case(sector_weight_residual(n, Spin(tj), seed),
                                 1e-10);
          });
    }

  // Multiplicity triple agreement.
  for (int m = 2; m <= 20; m += 2)
    add("multiplicity/closed-form/M=" + std::to_string(m), 1e-9,
        [m](std::uint64_t) { return residual_case(closed_form_residual(m), 1e-9); });
  for (int tj = 1; tj <= 3; ++tj)
    for (int n = 2; n <= 6; ++n)
      add("multiplicity/character/N=" + std::to_string(n) +
              ",2J=" + std::to_string(tj),
          1e-6, [n, tj](std::uint64_t) {
            return residual_case(character_multiplicity_residual(n, Spin(tj)),
                                 1e-6);
          });

  // Wigner rotations.
  add("wigner/unitarity", 1e-10, [](std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int tj = 0; tj <= 4; ++tj)
      for (int i = 0; i < 3; ++i)
        worst = std::max(worst, oracle::unitarity_defect(oracle::wigner_d(
                                    Spin(tj), RotationParam::random(rng))));
    return residual_case(worst, 1e-10);
  });
  add("wigner/character", 1e-9, [](std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    std::normal_distribution<double> gauss;
    double worst = 0.0;
    for (int tj = 0; tj <= 5; ++tj)
      for (int i = 0; i < 3; ++i) {
        Eigen::Vector3d axis(gauss(rng), gauss(rng), gauss(rng));
        axis.normalize();
        const double w = angle(rng);
        const auto u =
            oracle::wigner_d(Spin(tj), RotationParam::axis_angle(axis, w));
        worst = std::max(worst,
                         std::abs(u.trace().real() - character(Spin(tj), w)) +
                             std::abs(u.trace().imag()));
      }
    return residual_case(worst, 1e-9);
  });

  // Clebsch-Gordan coupling bases.
  add("cg/coupling-orthonormality", 1e-10, [](std::uint64_t) {
    double worst = 0.0;
    const std::pair<int, int> pairs[] = {{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}};
    for (const auto& [ta, tb] : pairs)
      worst = std::max(worst, oracle::unitarity_defect(
                                  oracle::coupling_unitary(Spin(ta), Spin(tb))));
    return residual_case(worst, 1e-10);
  });

  // Bell states.
  add("bell/reduced-maximally-mixed", 1e-10, [](std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int tj = 1; tj <= 3; ++tj) {
      const auto psi = oracle::bell_state_matrix(
          Spin(tj), RotationParam::random(rng), 1);
      const oracle::DenseOperator reduced = psi * psi.adjoint();
      worst = std::max(
          worst, (reduced - oracle::DenseOperator::Identity(tj + 1, tj + 1) /
                                double(tj + 1))
                     .cwiseAbs()
                     .maxCoeff());
    }
    return residual_case(worst, 1e-10);
  });

  // Clone/discard channel structure.
  for (const auto& [tj, tk] : jk_pairs)
    add("clone-discard/trace-preserving/2J=" + std::to_string(tj) +
            ",2K=" + std::to_string(tk),
        1e-10, [tj, tk](std::uint64_t) {
          return residual_case(kraus_tp_residual(Spin(tj), Spin(tk)), 1e-10);
        });

  // Two-pair covariant isometry.
  add("isometry-n2/fidelity/J=1/2,K=1", 1e-8, [](std::uint64_t seed) -> VerifyOutcome {
    const double analytic =
        det_iso_fidelity(ConversionTask(2, spin_half, 2, Spin(2))).value;
    return {analytic, oracle::isometry_bell_fidelity_n2(spin_half, Spin(2), seed),
            1e-8};
  });
  add("isometry-n2/isometry-defect/J=1/2,K=1", 1e-10, [](std::uint64_t) {
    return residual_case(
        oracle::isometry_defect(oracle::build_isometry_n2(spin_half, Spin(2))),
        1e-10);
  });
  add("isometry-n2/covariance/J=1/2,K=1", 1e-9, [](std::uint64_t seed) {
    return residual_case(
        oracle::isometry_covariance_residual_n2(spin_half, Spin(2), seed), 1e-9);
  });
  add("isometry-n2/identity/J=1/2,K=1/2", 1e-10, [](std::uint64_t) {
    const auto v = oracle::build_isometry_n2(spin_half, spin_half);
    return residual_case(
        (v - oracle::DenseOperator::Identity(v.rows(), v.cols()))
            .cwiseAbs()
            .maxCoeff(),
        1e-10);
  });

  // Measure-and-prepare machinery.
  add("mp/channel-vs-quadrature/n=2,K=1/2", 1e-6, [](std::uint64_t) -> VerifyOutcome {
    return {mp_fidelity_exact(2, spin_half).value,
            oracle::mp_channel_fidelity_numeric(2, spin_half), 1e-6};
  });
  add("mp/povm-completeness/n=2", 1e-8, [](std::uint64_t) {
    return residual_case(oracle::povm_completeness_residual(2), 1e-8);
  });

  // Class quadrature.
  add("quadrature/normalization", 1e-12, [](std::uint64_t) -> VerifyOutcome {
    return {1.0, haar_class_quadrature([](double) { return 1.0; }, 1e-13).value,
            1e-12};
  });
  add("quadrature/character-orthogonality", 1e-9, [](std::uint64_t) {
    double worst = 0.0;
    for (int ta = 0; ta <= 4; ++ta)
      for (int tb = ta % 2; tb <= 4; tb += 2) {
        const auto q = haar_class_quadrature(
            [ta, tb](double w) {
              return character(Spin(ta), w) * character(Spin(tb), w);
            },
            1e-11);
        worst = std::max(worst, std::abs(q.value - (ta == tb ? 1.0 : 0.0)));
      }
    return residual_case(worst, 1e-9);
  });
  add("quadrature/half-power-multiplicity", 1e-9, [](std::uint64_t) -> VerifyOutcome {
    const auto q = haar_class_quadrature(
        [](double w) {
          const double c = character(spin_half, w);
          return c * c * c * character(spin_half, w);
        },
        1e-11);
    return {2.0, q.value, 1e-9};
  });

  // Seeded Monte-Carlo path against quadrature, 3-sigma band.
  add("monte-carlo/multiplicity/N=6,2J=1,sector=0", 0.0,
      [](std::uint64_t seed) -> VerifyOutcome {
        const auto mc = haar_class_monte_carlo(
            [](double w) { return std::pow(character(spin_half, w), 6); },
            1'000'000, seed);
        return {5.0, mc.mean, 3.0 * mc.std_error};
      });

  return cases;
}

}  // namespace

const std::vector<VerifyCase>& verify_cases() {
  static const std::vector<VerifyCase> cases = build_cases();
  return cases;
}

VerifyRecord run_verify_case(const VerifyCase& c, std::uint64_t seed,
                             std::optional<double> tolerance_override) {
  const VerifyOutcome out = c.run(seed);
  VerifyRecord r;
  r.name = c.name;
  r.analytic = out.analytic;
  r.numeric = out.numeric;
  r.abs_err = std::abs(out.analytic - out.numeric);
  r.tolerance = tolerance_override.value_or(out.tolerance);
  r.pass = r.abs_err <= r.tolerance;
  return r;
}

std::vector<VerifyRecord> run_verification(
    const std::string& filter, std::uint64_t seed,
    std::optional<double> tolerance_override, int jobs) {
  std::vector<const VerifyCase*> selected;
  for (const auto& c : verify_cases())
    if (filter.empty() || c.name.find(filter) != std::string::npos)
      selected.push_back(&c);

  std::vector<VerifyRecord> records(selected.size());
  const int workers = std::max(1, jobs);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < selected.size();
         i = next.fetch_add(1))
      records[i] = run_verify_case(*selected[i], seed, tolerance_override);
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return records;
}

nlohmann::json to_json(const VerifyRecord& r) {
  return nlohmann::json{{"case", r.name},     {"analytic", r.analytic},
                        {"numeric", r.numeric}, {"abs_err", r.abs_err},
                        {"tolerance", r.tolerance}, {"pass", r.pass}};
}

}  // namespace refbit
