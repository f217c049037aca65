#include "semiwell/cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>

namespace semiwell::cli {

namespace {

const SphereSymbol& require_sphere(const ExperimentConfig& cfg, const std::string& command) {
  if (!cfg.sphere_symbol) throw InputError("command '" + command + "' needs a sphere_symbol");
  return *cfg.sphere_symbol;
}

const FlatSymbol& require_flat(const ExperimentConfig& cfg, const std::string& command) {
  if (!cfg.flat_symbol) throw InputError("command '" + command + "' needs a flat_symbol");
  return *cfg.flat_symbol;
}

std::vector<int> n_values(const ExperimentConfig& cfg, const std::vector<int>& fallback) {
  if (!cfg.n_list.empty()) return cfg.n_list;
  if (cfg.big_n) return {*cfg.big_n};
  return fallback;
}

WellSet validated_wells(const ExperimentConfig& cfg, const SphereSymbol& h, const std::string& command) {
  if (cfg.wells.empty()) throw InputError("command '" + command + "' needs a non-empty 'wells' list");
  return find_wells(h, cfg.wells);
}

Json point_json(const SpherePoint& p) { return Json{{"x", p.x()}, {"y", p.y()}, {"z", p.z()}}; }

Json matrix_json(const RMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(row);
  }
  return rows;
}

Json records_json(const std::vector<SweepRecord>& records) {
  Json out = Json::array();
  for (const auto& r : records) out.push_back(Json{{"N", r.big_n}, {"eigenvalues", r.eigenvalues}});
  return out;
}

int flat_default_cutoff(int n) { return n == 1 ? 60 : (n == 2 ? 20 : 12); }

// Splits a flat symbol into homogeneous parts of degree 2, 3 and 4.
std::array<FlatSymbol, 3> split_by_degree(const FlatSymbol& h) {
  std::array<FlatSymbol, 3> parts{FlatSymbol(h.n()), FlatSymbol(h.n()), FlatSymbol(h.n())};
  for (const auto& [key, c] : h.terms()) {
    if (c == Complex{}) continue;
    const int d = total_degree(key.first) + total_degree(key.second);
    if (d < 2 || d > 4) {
      throw InputError("perturb expects Taylor data q + r3 + r4 (degrees 2..4); found a degree " +
                       std::to_string(d) + " term");
    }
    parts[static_cast<std::size_t>(d - 2)].add_term(key.first, key.second, c);
  }
  return parts;
}

Report run_mu(const ExperimentConfig& cfg) {
  const SphereSymbol& h = require_sphere(cfg, "mu");
  const WellSet wells = validated_wells(cfg, h, "mu");
  Report r;
  r.verdict = Verdict::Computed;
  Json rows = Json::array();
  std::ostringstream csv;
  csv << "x,y,z,mu\n";
  csv.precision(17);
  for (std::size_t i = 0; i < wells.wells.size(); ++i) {
    const Well& w = wells.wells[i];
    const bool minimal =
        std::find(wells.minimal.begin(), wells.minimal.end(), static_cast<int>(i)) != wells.minimal.end();
    rows.push_back(Json{{"point", point_json(w.point)},
                        {"hessian", matrix_json(w.hessian.matrix())},
                        {"mu", w.mu},
                        {"minimal", minimal}});
    csv << w.point.x() << "," << w.point.y() << "," << w.point.z() << "," << w.mu << "\n";
  }
  r.data = Json{{"wells", rows}, {"resonant", wells.resonant}};
  r.thresholds = Json{{"resonance", kResonanceTol}};
  r.csv = csv.str();
  return r;
}

Report run_flat_spectrum(const ExperimentConfig& cfg) {
  const FlatSymbol& h = require_flat(cfg, "flat-spectrum");
  const int cutoff = cfg.cutoff.value_or(default_cutoff(h, h.n() == 1 ? 200 : 40));
  const FockBasis basis(h.n(), cutoff);
  const EigenDecomposition eig = eig_hermitian(toeplitz_flat(h, basis), true);
  const int k = std::min<int>(cfg.count.value_or(5), static_cast<int>(eig.values.size()));

  Report r;
  r.verdict = Verdict::Computed;
  SweepRecord rec;
  rec.big_n = 1;
  rec.eigenvalues.assign(eig.values.begin(), eig.values.begin() + k);
  const double tail = tail_mass(eig.vectors->col(0), basis);
  r.data = Json{{"cutoff", cutoff}, {"eigenvalues", rec.eigenvalues}, {"ground_tail_mass", tail}};
  Json warnings = Json::array();
  if (tail >= 1e-12) warnings.push_back("ground-state tail mass >= 1e-12; increase the cutoff");

  bool quadratic = h.degree() == 2;
  for (const auto& [key, c] : h.terms()) {
    if (total_degree(key.first) + total_degree(key.second) != 2 && c != Complex{}) quadratic = false;
  }
  if (quadratic) {
    const QuadraticForm q = quadratic_form_of(h);
    if (q.is_positive_definite()) {
      const std::vector<double> model = model_spectrum(q, k);
      double dev = 0.0;
      for (int i = 0; i < k; ++i) dev = std::max(dev, std::abs(model[static_cast<std::size_t>(i)] - rec.eigenvalues[static_cast<std::size_t>(i)]));
      r.data["mu"] = mu_toeplitz(q);
      r.data["symplectic_spectrum"] = symplectic_spectrum(q);
      r.data["model_spectrum"] = model;
      r.data["max_model_deviation"] = dev;
    }
  }
  r.data["warnings"] = warnings;
  r.thresholds = Json{{"tail_mass", 1e-12}};
  r.csv = spectrum_csv({rec});
  return r;
}

Report run_sphere_spectrum(const ExperimentConfig& cfg, int threads) {
  const SphereSymbol& h = require_sphere(cfg, "sphere-spectrum");
  const std::vector<int> ns = n_values(cfg, default_n_list());
  const int k = cfg.count.value_or(std::min(5, ns.front() + 1));
  const std::vector<SweepRecord> records = sweep(h, ns, {.count = k, .keep_ground = false, .threads = threads});
  Report r;
  r.verdict = Verdict::Computed;
  r.data = Json{{"records", records_json(records)}};
  r.csv = spectrum_csv(records);
  return r;
}

Report run_perturb(const ExperimentConfig& cfg) {
  const FlatSymbol& h = require_flat(cfg, "perturb");
  const auto [q, r3, r4] = split_by_degree(h);
  const QuadraticForm form = quadratic_form_of(q);
  if (!form.is_positive_definite()) throw NotPositiveDefiniteError(form.min_eigenvalue());
  const std::vector<int> ns = n_values(cfg, {16, 32, 64, 128, 256});
  const int cutoff = cfg.cutoff.value_or(flat_default_cutoff(h.n()));
  const CrosscheckReport cc = perturbation_crosscheck(q, r3, r4, ns, cutoff);

  Report r;
  r.verdict = cc.verdict;
  Json rows = Json::array();
  for (const auto& row : cc.rows) {
    rows.push_back(Json{{"N", row.big_n},
                        {"scaled_bottom", row.scaled_bottom},
                        {"predicted", row.predicted},
                        {"residual", row.residual},
                        {"lambda2_estimate", row.lambda2_estimate}});
  }
  r.data = Json{{"cutoff", cutoff},
                {"lambda0", cc.expansion.lambda0},
                {"lambda1", cc.expansion.lambda1},
                {"lambda2", cc.expansion.lambda2},
                {"mu", mu_toeplitz(form)},
                {"rows", rows},
                {"log_ratios", cc.log_ratios},
                {"warnings", cc.warnings},
                {"reason", cc.reason}};
  r.thresholds = Json{{"required_order", cc.required_order}, {"round_off_floor", cc.round_off_floor}};
  return r;
}

Report run_selection(const ExperimentConfig& cfg, int threads) {
  const SphereSymbol& h = require_sphere(cfg, "selection");
  const WellSet wells = validated_wells(cfg, h, "selection");
  SelectionOptions opts;
  opts.cap_radius = cfg.cap_radius.value_or(std::numbers::pi / 4.0);
  opts.threshold = cfg.tolerances.selection_threshold;
  opts.min_selected_mass = cfg.tolerances.selection_min_mass;
  opts.threads = threads;
  const SelectionReport sel = selection_verdict(h, wells, n_values(cfg, {32, 64, 128}), opts);

  Report r;
  r.verdict = sel.verdict;
  Json ws = Json::array();
  for (const auto& w : sel.wells) {
    ws.push_back(Json{{"point", point_json(w.point)}, {"mu", w.mu}, {"minimal", w.minimal}, {"mass", w.mass}});
  }
  r.data = Json{{"N_list", sel.n_list}, {"gaps", sel.gaps}, {"wells", ws}, {"reason", sel.reason}};
  r.thresholds = Json{{"cap_radius", opts.cap_radius},
                      {"non_minimal_mass", opts.threshold},
                      {"selected_mass", opts.min_selected_mass},
                      {"degenerate_gap", 1e-12}};
  return r;
}

Report run_theorem_b(const ExperimentConfig& cfg) {
  const SphereSymbol& h = require_sphere(cfg, "theorem-b");
  const WellSet wells = validated_wells(cfg, h, "theorem-b");
  if (!cfg.window) throw InputError("command 'theorem-b' needs the window 'C'");
  const int big_n = cfg.big_n.value_or(256);
  const TheoremBReport tb = theorem_b_verdict(h, wells, *cfg.window, big_n, cfg.tolerances.theorem_b);

  Report r;
  r.verdict = tb.verdict;
  Json matches = Json::array();
  for (const auto& m : tb.matches) {
    matches.push_back(Json{{"scaled_eigenvalue", m.eigenvalue},
                           {"model", m.model},
                           {"relative_deviation", m.relative_deviation},
                           {"tie", m.tie}});
  }
  r.data = Json{{"N", tb.big_n},
                {"C", tb.window},
                {"C_model", tb.model_window},
                {"scaled_eigenvalues", tb.scaled_eigenvalues},
                {"model_values", tb.model_values},
                {"matches", matches},
                {"reason", tb.reason}};
  r.thresholds = Json{{"C", tb.window}, {"C_model", tb.model_window}};
  return r;
}

Report run_gap(const ExperimentConfig& cfg, int threads) {
  const SphereSymbol& h = require_sphere(cfg, "gap");
  double predicted = 0.0;
  int multiplicity = cfg.bottom_multiplicity.value_or(1);
  if (cfg.predicted_gap) {
    predicted = *cfg.predicted_gap;
  } else {
    // Derive from the union of the quadratic model spectra of the wells.
    const WellSet wells = validated_wells(cfg, h, "gap");
    std::vector<double> levels;
    for (const Well& w : wells.wells) {
      const std::vector<double> s = model_spectrum(w.hessian, 4);
      levels.insert(levels.end(), s.begin(), s.end());
    }
    std::sort(levels.begin(), levels.end());
    if (!cfg.bottom_multiplicity) {
      multiplicity = static_cast<int>(std::count_if(levels.begin(), levels.end(), [&](double v) {
        return v - levels.front() <= kResonanceTol;
      }));
    }
    predicted = levels[static_cast<std::size_t>(multiplicity)] - levels.front();
  }
  const std::vector<SweepRecord> records =
      sweep(h, n_values(cfg, default_n_list()), {.count = multiplicity + 1, .keep_ground = false, .threads = threads});
  const GapReport gap = gap_verdict(records, predicted, multiplicity, cfg.tolerances.gap);

  Report r;
  r.verdict = gap.verdict;
  r.data = Json{{"N_list", gap.n_list},
                {"bottom_multiplicity", multiplicity},
                {"predicted_gap", gap.predicted_gap},
                {"scaled_gap", gap.scaled_gap},
                {"scaled_spread", gap.scaled_spread},
                {"reason", gap.reason}};
  r.thresholds = Json{{"predicted_gap", predicted}};
  r.csv = spectrum_csv(records);
  return r;
}

Report run_concentration(const ExperimentConfig& cfg, int threads) {
  const SphereSymbol& h = require_sphere(cfg, "concentration");
  const WellSet wells = validated_wells(cfg, h, "concentration");
  if (cfg.deltas.empty()) throw InputError("command 'concentration' needs 'deltas'");
  const Well& well = wells.wells[static_cast<std::size_t>(wells.minimal.front())];
  const std::vector<SweepRecord> records =
      sweep(h, n_values(cfg, {64, 128, 256}), {.count = 1, .keep_ground = true, .threads = threads});

  Report r;
  r.verdict = Verdict::Computed;
  Json rows = Json::array();
  for (const auto& rec : records) {
    for (const auto& row : concentration_profile(*rec.ground, well, rec.big_n, cfg.deltas)) {
      rows.push_back(Json{{"N", rec.big_n}, {"delta", row.delta}, {"radius", row.radius}, {"outside_mass", row.outside_mass}});
    }
  }
  r.data = Json{{"well", point_json(well.point)}, {"mu", well.mu}, {"rows", rows}};
  return r;
}

Report run_weyl_compare(const ExperimentConfig& cfg) {
  const FlatSymbol& h = require_flat(cfg, "weyl-compare");
  const QuadraticForm q = quadratic_form_of(h);
  const int cutoff = cfg.cutoff.value_or(60);
  const WeylComparison wc = weyl_compare(q, cutoff, cfg.tolerances.weyl);
  Report r;
  r.verdict = wc.passed ? Verdict::Pass : Verdict::Fail;
  r.data = Json{{"cutoff", cutoff},
                {"scaling", wc.scaling},
                {"shift", wc.shift},
                {"deviation", wc.deviation},
                {"worst_entry", Json{wc.worst_row, wc.worst_col}}};
  r.thresholds = Json{{"deviation", cfg.tolerances.weyl}};
  return r;
}

Json tolerances_json(const Tolerances& t) {
  return Json{{"gap", t.gap},
              {"theorem_b", t.theorem_b},
              {"selection_threshold", t.selection_threshold},
              {"selection_min_mass", t.selection_min_mass},
              {"weyl", t.weyl},
              {"hermitian", kHermitianTol},
              {"eigen_residual", kResidualTol}};
}

}  // namespace

Report execute(const std::string& command, const ExperimentConfig& cfg, int threads) {
  const std::map<std::string, std::function<Report()>> table{
      {"mu", [&] { return run_mu(cfg); }},
      {"flat-spectrum", [&] { return run_flat_spectrum(cfg); }},
      {"sphere-spectrum", [&] { return run_sphere_spectrum(cfg, threads); }},
      {"perturb", [&] { return run_perturb(cfg); }},
      {"selection", [&] { return run_selection(cfg, threads); }},
      {"theorem-b", [&] { return run_theorem_b(cfg); }},
      {"gap", [&] { return run_gap(cfg, threads); }},
      {"concentration", [&] { return run_concentration(cfg, threads); }},
      {"weyl-compare", [&] { return run_weyl_compare(cfg); }},
  };
  auto it = table.find(command);
  if (it == table.end()) throw InputError("unknown command '" + command + "'");
  Report r = it->second();
  r.command = command;
  r.tolerances = tolerances_json(cfg.tolerances);
  return r;
}

int run(const std::string& command, const std::filesystem::path& config_path,
        const std::filesystem::path& out_dir, int threads) {
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), command) == names.end()) {
    std::cerr << "error: unknown command '" << command << "'\n";
    return kInputError;
  }
  Report report;
  try {
    const ExperimentConfig cfg = parse_config(config_path);
    report = execute(command, cfg, threads);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: rejected input: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  try {
    emit_report(report, out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  std::cout << command << ": " << to_string(report.verdict) << "\n";
  return exit_code_for(report.verdict);
}

}  // namespace semiwell::cli
