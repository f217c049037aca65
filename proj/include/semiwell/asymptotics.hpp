// N-sweeps over the sphere model and the pass/fail verdicts built on them.
#pragma once

#include "semiwell/flat_model.hpp"
#include "semiwell/sphere_model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace semiwell {

enum class Verdict { Pass, Fail, Undecided, Computed };
std::string to_string(Verdict v);

struct SweepRecord {
  int big_n = 0;
  std::vector<double> eigenvalues;    // first k, ascending
  std::optional<QuantumState> ground;
  double seconds = 0.0;
};

struct SweepOptions {
  int count = 1;            // eigenvalues kept per record
  bool keep_ground = false;
  int threads = 1;
};

/// Spectra of T_N(h) for ascending N. Records are independent, so they are
/// computed on up to `threads` workers; results do not depend on the count.
std::vector<SweepRecord> sweep(const SphereSymbol& h, const std::vector<int>& n_list,
                               const SweepOptions& options);

inline const std::vector<int>& default_n_list() {
  static const std::vector<int> list{32, 64, 128, 256};
  return list;
}

/// N lambda(N) = a0 + a_half N^{-1/2} + a1 N^{-1}.
struct FitResult {
  double a0 = 0.0;
  double a_half = 0.0;
  double a1 = 0.0;
  double residual = 0.0;
  double condition = 0.0;
  int offset = 0;  // fitted in the variable N + offset
};

/// Least squares on (1, M^{-1/2}, M^{-1}) with M = N + offset.
FitResult fit_bottom(const std::vector<SweepRecord>& records, int offset = 0);

/// Fits in N and in N + 2 and says which leaves the smaller residual.
struct FitComparison {
  FitResult in_n;
  FitResult in_n_plus_2;
  bool n_plus_2_better = false;
};
FitComparison compare_fits(const std::vector<SweepRecord>& records);

struct WellMass {
  SpherePoint point;
  double mu = 0.0;
  bool minimal = false;
  std::vector<double> mass;  // one per N
};

struct SelectionReport {
  Verdict verdict = Verdict::Fail;
  std::vector<int> n_list;
  std::vector<double> gaps;  // lambda_2 - lambda_1 per N
  std::vector<WellMass> wells;
  double threshold = 1e-6;
  double min_selected_mass = 0.9;
  std::string reason;
};

struct SelectionOptions {
  double cap_radius = 0.7853981633974483;  // pi / 4
  double threshold = 1e-6;         // non-minimal wells at the largest N
  double min_selected_mass = 0.9;  // a single minimal well at the largest N
  int threads = 1;
};

SelectionReport selection_verdict(const SphereSymbol& h, const WellSet& wells,
                                  const std::vector<int>& n_list, const SelectionOptions& options);

struct GapReport {
  Verdict verdict = Verdict::Fail;
  std::vector<int> n_list;
  std::vector<double> scaled_gap;     // N (lambda_{m+1} - lambda_1)
  std::vector<double> scaled_spread;  // N (lambda_m - lambda_1), zero when m = 1
  double predicted_gap = 0.0;
  double tolerance = 0.15;
  std::string reason;
};

/// `bottom_multiplicity` m groups the lowest m eigenvalues as one cluster
/// (tunnelling pair for m = 2): the gap is measured to the (m+1)-th level and
/// the cluster spread must vanish in the same relative tolerance.
GapReport gap_verdict(const std::vector<SweepRecord>& records, double predicted_gap,
                      int bottom_multiplicity = 1, double tolerance = 0.15);

struct WindowMatch {
  double eigenvalue = 0.0;  // N lambda
  double model = 0.0;
  double relative_deviation = 0.0;
  bool tie = false;
};

struct TheoremBReport {
  Verdict verdict = Verdict::Fail;
  int big_n = 0;
  double window = 0.0;                // C
  double model_window = 0.0;          // C'
  std::vector<double> scaled_eigenvalues;  // N lambda in [0, C]
  std::vector<double> model_values;        // union of well spectra in [0, C']
  std::vector<WindowMatch> matches;
  double tolerance = 0.05;
  std::string reason;
};

/// Greedy proximity matching of the eigenvalues in [0, C/N] against the union
/// of the quadratic model spectra of the wells.
TheoremBReport theorem_b_match(const std::vector<double>& scaled_eigenvalues,
                               const std::vector<double>& model_values, double window,
                               double model_window, double tolerance);

TheoremBReport theorem_b_verdict(const SphereSymbol& h, const WellSet& wells, double window,
                                 int big_n, double tolerance = 0.05);

struct ConcentrationRow {
  double delta = 0.0;
  double radius = 0.0;
  double outside_mass = 0.0;
};

/// 1 - cap_mass(well, N^{-delta}) for each delta in [0, 1/2).
std::vector<ConcentrationRow> concentration_profile(const QuantumState& state, const Well& well,
                                                    int big_n, const std::vector<double>& deltas);

struct CrosscheckRow {
  int big_n = 0;
  double scaled_bottom = 0.0;  // N lambda_min of the truncated operator
  double predicted = 0.0;      // lambda0 + lambda2 / N
  double residual = 0.0;
  double lambda2_estimate = 0.0;  // N (N lambda_min - lambda0)
};

struct CrosscheckReport {
  Verdict verdict = Verdict::Fail;
  PerturbationResult expansion;
  std::vector<CrosscheckRow> rows;
  std::vector<double> log_ratios;  // log(res_i / res_{i+1}) / log(N_{i+1} / N_i)
  double required_order = 1.5;
  double round_off_floor = 1e-11;
  std::vector<std::string> warnings;
  std::string reason;
};

/// Compares the bottom of T(q) + N^{-1/2} T(r3) + N^{-1} T(r4) on the
/// truncation with the perturbative prediction lambda0 + lambda2 / N.
CrosscheckReport perturbation_crosscheck(const FlatSymbol& q, const FlatSymbol& r3,
                                         const FlatSymbol& r4, const std::vector<int>& n_list,
                                         int cutoff);

}  // namespace semiwell
