// Copyright 2026 The refbit Authors
// SPDX-License-Identifier: Apache-2.0

#include "refbit/cli.hpp"

#include <CLI11.hpp>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "refbit/conversion.hpp"
#include "refbit/gate.hpp"
#include "refbit/output.hpp"
#include "refbit/verify.hpp"

namespace refbit {

namespace {

nlohmann::json fidelity_result_json(const FidelityResult& r) {
  nlohmann::json j{{"value", r.value},
                   {"method", to_string(r.method)},
                   {"clamped", r.clamped}};
  if (r.success_probability) j["success_probability"] = *r.success_probability;
  if (r.twice_argmax_l) j["argmax_l"] = *r.twice_argmax_l;
  if (r.via_refbit_protocol) j["via_refbit_protocol"] = true;
  if (r.outside_validity) j["outside_validity"] = true;
  if (r.quadrature_error) j["quadrature_error"] = *r.quadrature_error;
  return j;
}

struct Sink {
  std::string format = "json";
  std::string out_path;

  void write(const std::string& text) const {
    if (out_path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open --out file: " + out_path);
    out << text;
  }
};

std::string csv_number(double v) {
  std::ostringstream os;
  os.precision(12);
  os << round12(v);
  return os.str();
}

std::string csv_table(const std::string& header,
                      const std::vector<std::vector<std::string>>& rows) {
  std::string text = header + "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) text += ',';
      text += csv_escape(row[i]);
    }
    text += '\n';
  }
  return text;
}

// Flattens a result object into one CSV row, keys as the header.
std::string csv_single_row(const nlohmann::json& results) {
  std::string header, row;
  for (const auto& [key, value] : results.items()) {
    if (!header.empty()) {
      header += ',';
      row += ',';
    }
    header += key;
    if (value.is_number_float())
      row += csv_number(value.get<double>());
    else if (value.is_string())
      row += csv_escape(value.get<std::string>());
    else
      row += value.dump();
  }
  return header + "\n" + row + "\n";
}

struct TaskArgs {
  int n = 1;
  int twice_j = 1;
  int m = 1;
  int twice_k = 1;
  ConversionTask task() const {
    return ConversionTask(n, Spin(twice_j), m, Spin(twice_k));
  }
};

void add_task_options(CLI::App* cmd, TaskArgs& args) {
  cmd->add_option("--n", args.n, "input copies N")->check(CLI::PositiveNumber);
  cmd->add_option("--twice-j", args.twice_j, "input spin as twice-value (2J)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--m", args.m, "output copies M")->check(CLI::PositiveNumber);
  cmd->add_option("--twice-k", args.twice_k, "output spin as twice-value (2K)")
      ->check(CLI::NonNegativeNumber);
}

int emit(const Sink& sink, OutputRecord record, const std::string& csv) {
  if (sink.format == "csv")
    sink.write(csv);
  else
    sink.write(record.to_json_string());
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{
      "refbit: Bell-state conversion fidelities, bounds and distributions "
      "for SO(3)/SU(2) spin systems, with a dense-matrix verification "
      "oracle.\n"
      "Spins are always passed as twice-values (--twice-j 3 is spin 3/2).\n"
      "REFBIT_DIM_CAP overrides the oracle's amplitude cap (default 4096)."};
  app.require_subcommand(1);
  app.fallthrough();

  Sink sink;
  app.add_option("--format", sink.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", sink.out_path, "write output to a file");
  int jobs = 1;
  app.add_option("--jobs", jobs, "worker threads for scan/verify")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // multiplicity
  auto* mult_cmd = app.add_subcommand(
      "multiplicity", "exact sector multiplicities of N spin-J copies "
                      "(csv columns: twice_j,count)");
  TaskArgs mult_args;
  mult_cmd->add_option("--n", mult_args.n, "copies")->required();
  mult_cmd->add_option("--twice-j", mult_args.twice_j, "2J")->required();

  // distribution
  auto* dist_cmd = app.add_subcommand(
      "distribution", "sector probability distribution p_j "
                      "(csv columns: twice_j,weight)");
  TaskArgs dist_args;
  bool asymptotic = false;
  dist_cmd->add_option("--n", dist_args.n, "copies")->required();
  dist_cmd->add_option("--twice-j", dist_args.twice_j, "2J")->required();
  dist_cmd->add_flag("--asymptotic", asymptotic,
                     "use the Gaussian asymptotic weights");

  // fidelity
  auto* fid_cmd = app.add_subcommand(
      "fidelity", "conversion fidelities (csv: flattened result fields)");
  std::string fid_method;
  fid_cmd->add_option("method", fid_method, "calculation")
      ->required()
      ->check(CLI::IsMember({"single-copy", "det-iso", "prob-opt",
                             "prob-filter", "det-upper", "det-asym",
                             "prob-window", "mp-exact", "mp-asym"}));
  TaskArgs fid_args;
  add_task_options(fid_cmd, fid_args);

  // bounds
  auto* bounds_cmd = app.add_subcommand(
      "bounds", "gate sandwich, analyzer and success-probability bounds");
  bounds_cmd->require_subcommand(1);
  auto* bounds_gate = bounds_cmd->add_subcommand(
      "gate", "(F_prob^2, F_prob) sandwich (csv columns: lower,upper)");
  TaskArgs gate_bound_args;
  add_task_options(bounds_gate, gate_bound_args);
  auto* bounds_an = bounds_cmd->add_subcommand(
      "analyzer", "unbreakability bound and the Hoeffding filter bound "
                  "(csv columns: filter_lower,unbreakable)");
  TaskArgs an_args;
  bounds_an->add_option("--n", an_args.n, "copies")->required();
  bounds_an->add_option("--twice-j", an_args.twice_j, "2J")->required();
  bounds_an->add_option("--m", an_args.m, "output refbits")->required();
  auto* bounds_sp = bounds_cmd->add_subcommand(
      "success-prob", "success-probability bound at rate R "
                      "(csv columns: ratio_star,value)");
  TaskArgs sp_args;
  double sp_ratio = 1.0;
  bounds_sp->add_option("--n", sp_args.n, "copies")->required();
  bounds_sp->add_option("--twice-j", sp_args.twice_j, "2J")->required();
  bounds_sp->add_option("--twice-k", sp_args.twice_k, "2K")->required();
  bounds_sp->add_option("--ratio", sp_ratio, "output rate R = M/N")->required();

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "parameter scans");
  scan_cmd->require_subcommand(1);
  auto* scan_two = scan_cmd->add_subcommand(
      "two-copy", "two-copy analyzer over alpha, M = floor(alpha J^2) "
                  "(csv columns: alpha,m_refbits,fidelity)");
  int scan_tj = 2;
  double alpha_min = 1.8, alpha_max = 2.8;
  int steps = 101;
  scan_two->add_option("--twice-j", scan_tj, "2J")->required();
  scan_two->add_option("--alpha-min", alpha_min, "first alpha")->required();
  scan_two->add_option("--alpha-max", alpha_max, "last alpha")->required();
  scan_two->add_option("--steps", steps, "grid points")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // gate
  auto* gate_cmd = app.add_subcommand("gate", "gate-simulation fidelities");
  gate_cmd->require_subcommand(1);
  auto* gate_su2 = gate_cmd->add_subcommand(
      "su2", "spin-J rotation simulating a spin-K rotation (csv: value)");
  TaskArgs gate_su2_args;
  gate_su2->add_option("--twice-j", gate_su2_args.twice_j, "2J")->required();
  gate_su2->add_option("--twice-k", gate_su2_args.twice_k, "2K")->required();
  auto* gate_general = gate_cmd->add_subcommand(
      "general", "general group data from a RepData JSON file "
                 "(csv columns: argmax_label,memoryless,value)");
  std::string rep_file;
  gate_general->add_option("--file", rep_file, "RepData JSON path")
      ->required()
      ->check(CLI::ExistingFile);
  auto* gate_cloning = gate_cmd->add_subcommand(
      "cloning", "one gate use into two (csv columns: det,prob)");
  int gate_dim = 2;
  gate_cloning->add_option("--dim", gate_dim, "gate dimension d")->required();
  auto* gate_cc = gate_cmd->add_subcommand(
      "charge-conj", "simulate the conjugate gate (csv: value)");
  int cc_dim = 2;
  gate_cc->add_option("--dim", cc_dim, "gate dimension d")->required();

  // verify
  auto* verify_cmd = app.add_subcommand(
      "verify", "run the dense-matrix oracle cross-checks "
                "(csv columns: case,analytic,numeric,abs_err,pass)");
  std::string case_filter;
  double tolerance = -1.0;
  std::uint64_t seed = 12345;
  verify_cmd->add_option("--case", case_filter,
                         "run only cases whose name contains this string");
  verify_cmd->add_option("--tolerance", tolerance,
                         "override every per-case tolerance");
  verify_cmd->add_option("--seed", seed, "seed for randomized checks")
      ->capture_default_str();
  bool list_cases = false;
  verify_cmd->add_flag("--list", list_cases, "list case names and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*mult_cmd) {
      const auto table = MultiplicityTable::tensor_power(
          mult_args.n, Spin(mult_args.twice_j));
      OutputRecord rec;
      rec.command = "multiplicity";
      rec.parameters = {{"n", mult_args.n}, {"twice_j", mult_args.twice_j}};
      rec.results = table.to_json();
      std::vector<std::vector<std::string>> rows;
      for (const auto& [tj, count] : table.entries())
        rows.push_back({std::to_string(tj), count.str()});
      return emit(sink, rec, csv_table("twice_j,count", rows));
    }

    if (*dist_cmd) {
      const Spin j(dist_args.twice_j);
      const SectorDistribution d =
          asymptotic ? sector_distribution_asymptotic(dist_args.n, j)
                     : sector_distribution(dist_args.n, j);
      OutputRecord rec;
      rec.command = "distribution";
      rec.parameters = {{"n", dist_args.n},
                        {"twice_j", dist_args.twice_j},
                        {"asymptotic", asymptotic}};
      nlohmann::json weights = nlohmann::json::object();
      std::vector<std::vector<std::string>> rows;
      for (const auto& [tj, w] : d.weights) {
        weights[std::to_string(tj)] = w;
        rows.push_back({std::to_string(tj), csv_number(w)});
      }
      rec.results = {{"weights", weights},
                     {"provenance", d.provenance == Provenance::Exact
                                        ? "exact"
                                        : "asymptotic"}};
      return emit(sink, rec, csv_table("twice_j,weight", rows));
    }

    if (*fid_cmd) {
      const Spin j(fid_args.twice_j), k(fid_args.twice_k);
      FidelityResult r;
      if (fid_method == "single-copy")
        r = single_copy_fidelity(j, k);
      else if (fid_method == "det-iso")
        r = det_iso_fidelity(fid_args.task());
      else if (fid_method == "prob-opt")
        r = prob_opt_fidelity(fid_args.task());
      else if (fid_method == "prob-filter")
        r = prob_filter_fidelity(fid_args.task());
      else if (fid_method == "det-upper")
        r = det_upper_bound(fid_args.task());
      else if (fid_method == "det-asym")
        r = det_asymptotic_fidelity(fid_args.task());
      else if (fid_method == "prob-window")
        r = prob_upper_bound_window(fid_args.task());
      else if (fid_method == "mp-exact")
        r = mp_fidelity_exact(fid_args.n, k);
      else
        r = mp_fidelity_asymptotic(fid_args.n, k);
      OutputRecord rec;
      rec.command = "fidelity " + fid_method;
      rec.parameters = {{"n", fid_args.n},
                        {"twice_j", fid_args.twice_j},
                        {"m", fid_args.m},
                        {"twice_k", fid_args.twice_k}};
      rec.results = fidelity_result_json(r);
      return emit(sink, rec, csv_single_row(round12(rec.results)));
    }

    if (*bounds_gate) {
      const GateBounds b = gate_fidelity_bounds(gate_bound_args.task());
      OutputRecord rec;
      rec.command = "bounds gate";
      rec.parameters = {{"n", gate_bound_args.n},
                        {"twice_j", gate_bound_args.twice_j},
                        {"m", gate_bound_args.m},
                        {"twice_k", gate_bound_args.twice_k}};
      rec.results = {{"lower", b.lower}, {"upper", b.upper}};
      return emit(sink, rec, csv_single_row(round12(rec.results)));
    }

    if (*bounds_an) {
      OutputRecord rec;
      rec.command = "bounds analyzer";
      rec.parameters = {{"n", an_args.n},
                        {"twice_j", an_args.twice_j},
                        {"m", an_args.m}};
      rec.results = {
          {"unbreakable", unbreakable_bound(Spin(an_args.twice_j))},
          {"filter_lower", analyzer_filter_lower_bound(
                               an_args.n, Spin(an_args.twice_j), an_args.m)}};
      return emit(sink, rec, csv_single_row(round12(rec.results)));
    }

    if (*bounds_sp) {
      const Spin j(sp_args.twice_j), k(sp_args.twice_k);
      OutputRecord rec;
      rec.command = "bounds success-prob";
      rec.parameters = {{"n", sp_args.n},
                        {"twice_j", sp_args.twice_j},
                        {"twice_k", sp_args.twice_k},
                        {"ratio", sp_ratio}};
      rec.results = {{"value", success_probability_bound(sp_args.n, j, k, sp_ratio)},
                     {"ratio_star", j.casimir() / k.casimir()}};
      return emit(sink, rec, csv_single_row(round12(rec.results)));
    }

    if (*scan_two) {
      std::vector<double> alphas(steps);
      for (int i = 0; i < steps; ++i)
        alphas[i] = steps == 1 ? alpha_min
                               : alpha_min + (alpha_max - alpha_min) * i /
                                                 (steps - 1);
      std::vector<TwoCopyScanPoint> points(alphas.size());
      std::atomic<std::size_t> next{0};
      const auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < alphas.size();
             i = next.fetch_add(1))
          points[i] = two_copy_analyzer_scan(
              Spin(scan_tj), std::span<const double>(&alphas[i], 1))[0];
      };
      if (jobs <= 1) {
        worker();
      } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
      }
      const auto best = std::max_element(
          points.begin(), points.end(),
          [](const auto& a, const auto& b) { return a.fidelity < b.fidelity; });
      OutputRecord rec;
      rec.command = "scan two-copy";
      rec.parameters = {{"twice_j", scan_tj},
                        {"alpha_min", alpha_min},
                        {"alpha_max", alpha_max},
                        {"steps", steps}};
      nlohmann::json arr = nlohmann::json::array();
      std::vector<std::vector<std::string>> rows;
      for (const auto& p : points) {
        arr.push_back({{"alpha", p.alpha},
                       {"m_refbits", p.m_refbits},
                       {"fidelity", p.fidelity}});
        rows.push_back({csv_number(p.alpha), std::to_string(p.m_refbits),
                        csv_number(p.fidelity)});
      }
      rec.results = {{"points", arr},
                     {"argmax_alpha", best->alpha},
                     {"max_fidelity", best->fidelity},
                     {"closed_form_at_argmax",
                      two_copy_fidelity_asymptotic(best->alpha)}};
      return emit(sink, rec, csv_table("alpha,m_refbits,fidelity", rows));
    }

    if (*gate_su2) {
      OutputRecord rec;
      rec.command = "gate su2";
      rec.parameters = {{"twice_j", gate_su2_args.twice_j},
                        {"twice_k", gate_su2_args.twice_k}};
      rec.results = {{"value", su2_gate_fidelity(Spin(gate_su2_args.twice_j),
                                                 Spin(gate_su2_args.twice_k))}};
      return emit(sink, rec, csv_single_row(round12(rec.results)));
    }

    if (*gate_general) {
      std::ifstream in(rep_file);
      nlohmann::json doc;
      in >> doc;
      const RepData rep = RepData::from_json(doc);
      const auto [value, label] = general_prob_fidelity(rep);
      OutputRecord rec;
      rec.command = "gate general";
      rec.parameters = {{"file", rep_file}};
      rec.results = {{"value", value},
                     {"argmax_label", label},
                     {"memoryless", optimal_is_memoryless(rep)}};
      return emit(sink, rec, csv_single_row(round12(rec.results)));
    }

    if (*gate_cloning) {
      const auto f = unitary_cloning_fidelities(gate_dim);
      OutputRecord rec;
      rec.command = "gate cloning";
      rec.parameters = {{"dim", gate_dim}};
      rec.results = {{"prob", f.prob}, {"det", f.det}};
      return emit(sink, rec, csv_single_row(round12(rec.results)));
    }

    if (*gate_cc) {
      OutputRecord rec;
      rec.command = "gate charge-conj";
      rec.parameters = {{"dim", cc_dim}};
      rec.results = {{"value", charge_conjugation_fidelity(cc_dim)}};
      return emit(sink, rec, csv_single_row(round12(rec.results)));
    }

    if (*verify_cmd) {
      if (list_cases) {
        std::string text;
        for (const auto& c : verify_cases()) text += c.name + "\n";
        sink.write(text);
        return 0;
      }
      const std::optional<double> tol =
          tolerance > 0 ? std::optional<double>(tolerance) : std::nullopt;
      const auto records = run_verification(case_filter, seed, tol, jobs);
      if (records.empty())
        throw std::invalid_argument("verify: no case matches '" + case_filter +
                                    "'");
      OutputRecord rec;
      rec.command = "verify";
      rec.parameters = {{"case", case_filter}, {"jobs", jobs}};
      rec.metadata = {{"seed", seed}};
      if (tol) rec.metadata["tolerances"] = {{"override", *tol}};
      nlohmann::json arr = nlohmann::json::array();
      std::vector<std::vector<std::string>> rows;
      int failures = 0;
      for (const auto& r : records) {
        arr.push_back(to_json(r));
        rows.push_back({r.name, csv_number(r.analytic), csv_number(r.numeric),
                        csv_number(r.abs_err), r.pass ? "true" : "false"});
        if (!r.pass) ++failures;
      }
      rec.results = {{"cases", arr},
                     {"total", records.size()},
                     {"failures", failures}};
      emit(sink, rec, csv_table("case,analytic,numeric,abs_err,pass", rows));
      if (failures > 0) {
        std::cerr << "verification failed (" << failures << "/"
                  << records.size() << "):\n";
        for (const auto& r : records)
          if (!r.pass)
            std::cerr << "  " << r.name << " abs_err=" << r.abs_err
                      << " tolerance=" << r.tolerance << "\n";
        return 1;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace refbit
