#include "semiwell/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace semiwell {

SelectionReport selection_verdict(const SphereSymbol& h, const WellSet& wells,
                                  const std::vector<int>& n_list, const SelectionOptions& options) {
  SelectionReport report;
  report.n_list = n_list;
  report.threshold = options.threshold;
  report.min_selected_mass = options.min_selected_mass;
  if (wells.wells.empty()) throw std::invalid_argument("selection needs at least one well");

  const std::vector<SweepRecord> records =
      sweep(h, n_list, {.count = 2, .keep_ground = true, .threads = options.threads});

  for (std::size_t w = 0; w < wells.wells.size(); ++w) {
    const Well& well = wells.wells[w];
    WellMass wm;
    wm.point = well.point;
    wm.mu = well.mu;
    wm.minimal = std::find(wells.minimal.begin(), wells.minimal.end(), static_cast<int>(w)) !=
                 wells.minimal.end();
    for (const SweepRecord& rec : records) wm.mass.push_back(cap_mass(*rec.ground, well.point, options.cap_radius));
    report.wells.push_back(std::move(wm));
  }
  for (const SweepRecord& rec : records) report.gaps.push_back(rec.eigenvalues[1] - rec.eigenvalues[0]);

  for (std::size_t i = 0; i < records.size(); ++i) {
    if (report.gaps[i] < 1e-12) {
      std::ostringstream os;
      os << "ground pair is degenerate at N = " << records[i].big_n << " (gap " << report.gaps[i]
         << "); the ground state is not determined";
      report.verdict = Verdict::Undecided;
      report.reason = os.str();
      return report;
    }
  }

  std::ostringstream reasons;
  bool ok = true;
  std::size_t minimal_count = 0;
  for (const WellMass& wm : report.wells) minimal_count += wm.minimal ? 1 : 0;

  for (const WellMass& wm : report.wells) {
    const double last = wm.mass.back();
    if (!wm.minimal) {
      if (!(last < options.threshold)) {
        ok = false;
        reasons << "non-minimal well mass " << last << " >= " << options.threshold << "; ";
      }
      for (std::size_t i = 1; i < wm.mass.size(); ++i) {
        if (!(wm.mass[i] < wm.mass[i - 1])) {
          ok = false;
          reasons << "non-minimal well mass not decreasing at N = " << n_list[i] << "; ";
        }
      }
    } else if (minimal_count == 1) {
      if (!(last > options.min_selected_mass)) {
        ok = false;
        reasons << "selected well mass " << last << " <= " << options.min_selected_mass << "; ";
      }
    } else {
      const double share = 1.0 / static_cast<double>(minimal_count);
      if (std::abs(last - share) > 0.2) {
        ok = false;
        reasons << "resonant well mass " << last << " not within 0.2 of " << share << "; ";
      }
    }
  }
  report.verdict = ok ? Verdict::Pass : Verdict::Fail;
  report.reason = ok ? "ground state concentrates on the minimal-mu wells" : reasons.str();
  return report;
}

GapReport gap_verdict(const std::vector<SweepRecord>& records, double predicted_gap,
                      int bottom_multiplicity, double tolerance) {
  if (records.empty()) throw std::invalid_argument("gap verdict needs records");
  if (bottom_multiplicity < 1) throw std::invalid_argument("bottom multiplicity must be >= 1");
  GapReport report;
  report.predicted_gap = predicted_gap;
  report.tolerance = tolerance;
  const auto m = static_cast<std::size_t>(bottom_multiplicity);
  for (const SweepRecord& rec : records) {
    if (rec.eigenvalues.size() < m + 1) {
      throw std::invalid_argument("records need at least bottom_multiplicity + 1 eigenvalues");
    }
    const double n = rec.big_n;
    report.n_list.push_back(rec.big_n);
    report.scaled_gap.push_back(n * (rec.eigenvalues[m] - rec.eigenvalues[0]));
    report.scaled_spread.push_back(n * (rec.eigenvalues[m - 1] - rec.eigenvalues[0]));
  }

  auto deviation = [&](double g) {
    return predicted_gap > 0.0 ? std::abs(g - predicted_gap) / predicted_gap : std::abs(g);
  };
  const std::size_t last = records.size() - 1;
  const double dev_last = deviation(report.scaled_gap[last]);
  const double spread_scale = predicted_gap > 0.0 ? predicted_gap : 1.0;
  const double spread_last = report.scaled_spread[last] / spread_scale;
  const bool stabilizing = last == 0 || dev_last <= deviation(report.scaled_gap[last - 1]) + 1e-12;

  std::ostringstream os;
  os << "N gap " << report.scaled_gap[last] << " vs predicted " << predicted_gap
     << " (relative deviation " << dev_last << ")";
  if (bottom_multiplicity > 1) os << ", cluster spread " << report.scaled_spread[last];
  if (!stabilizing) os << ", deviation grew at the largest N";
  report.reason = os.str();
  report.verdict = dev_last <= tolerance && spread_last <= tolerance && stabilizing ? Verdict::Pass
                                                                                      : Verdict::Fail;
  return report;
}

TheoremBReport theorem_b_match(const std::vector<double>& scaled_eigenvalues,
                               const std::vector<double>& model_values, double window,
                               double model_window, double tolerance) {
  TheoremBReport report;
  report.window = window;
  report.model_window = model_window;
  report.tolerance = tolerance;
  report.scaled_eigenvalues = scaled_eigenvalues;
  std::sort(report.scaled_eigenvalues.begin(), report.scaled_eigenvalues.end());
  for (double v : model_values) {
    if (v <= model_window) report.model_values.push_back(v);
  }
  std::sort(report.model_values.begin(), report.model_values.end());

  std::vector<bool> used(report.model_values.size(), false);
  bool ok = true;
  std::ostringstream reasons;
  for (double e : report.scaled_eigenvalues) {
    std::size_t best = report.model_values.size();
    double best_dist = INFINITY;
    bool tie = false;
    for (std::size_t j = 0; j < report.model_values.size(); ++j) {
      if (used[j]) continue;
      const double dist = std::abs(report.model_values[j] - e);
      if (dist < best_dist - 1e-12) {
        best = j;
        best_dist = dist;
        tie = false;
      } else if (std::abs(dist - best_dist) <= 1e-12 &&
                 std::abs(report.model_values[j] - report.model_values[best]) > 1e-12) {
        tie = true;
      }
    }
    if (best == report.model_values.size()) {
      ok = false;
      reasons << "eigenvalue " << e << " has no model partner; ";
      continue;
    }
    used[best] = true;
    const double model = report.model_values[best];
    const double rel = model > 0.0 ? std::abs(e - model) / model : std::abs(e - model);
    report.matches.push_back({e, model, rel, tie});
    if (rel > tolerance) {
      ok = false;
      reasons << "eigenvalue " << e << " deviates from model " << model << " by " << rel << "; ";
    }
  }
  for (std::size_t j = 0; j < report.model_values.size(); ++j) {
    if (!used[j] && report.model_values[j] <= window * (1.0 - tolerance)) {
      ok = false;
      reasons << "model value " << report.model_values[j] << " has no eigenvalue; ";
    }
  }
  report.verdict = ok ? Verdict::Pass : Verdict::Fail;
  if (ok) {
    std::ostringstream os;
    os << report.scaled_eigenvalues.size() << " eigenvalues matched";
    report.reason = os.str();
  } else {
    report.reason = reasons.str();
  }
  return report;
}

TheoremBReport theorem_b_verdict(const SphereSymbol& h, const WellSet& wells, double window,
                                 int big_n, double tolerance) {
  if (!(window >= 0.0)) throw std::invalid_argument("window C must be nonnegative");
  const EigenDecomposition eig = eig_hermitian(toeplitz_sphere(h, big_n), false);
  std::vector<double> scaled;
  for (double v : eig.values) {
    if (big_n * v <= window) scaled.push_back(big_n * v);
  }
  const double model_window = window * (1.0 + tolerance) + 1e-12;
  std::vector<double> models;
  for (const Well& well : wells.wells) {
    int count = 4;
    std::vector<double> levels = model_spectrum(well.hessian, count);
    while (levels.back() <= model_window) {
      count *= 2;
      levels = model_spectrum(well.hessian, count);
    }
    for (double v : levels) {
      if (v <= model_window) models.push_back(v);
    }
  }
  TheoremBReport report = theorem_b_match(scaled, models, window, model_window, tolerance);
  report.big_n = big_n;
  return report;
}

std::vector<ConcentrationRow> concentration_profile(const QuantumState& state, const Well& well,
                                                    int big_n, const std::vector<double>& deltas) {
  if (big_n < 1) throw std::invalid_argument("N must be positive");
  std::vector<ConcentrationRow> rows;
  for (double delta : deltas) {
    if (!(delta >= 0.0 && delta < 0.5)) {
      std::ostringstream os;
      os << "delta " << delta << " outside [0, 1/2)";
      throw std::invalid_argument(os.str());
    }
    const double radius = std::pow(static_cast<double>(big_n), -delta);
    rows.push_back({delta, radius, 1.0 - cap_mass(state, well.point, radius)});
  }
  return rows;
}

}  // namespace semiwell
