// Experiment configs, report emission and command dispatch for the CLI.
#pragma once

#include "semiwell/asymptotics.hpp"

#include "json.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace semiwell::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kSuccess = 0, kVerdictFail = 1, kInputError = 2 };

/// Malformed config, schema violation or module rejection of the input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Tolerances {
  double gap = 0.15;
  double theorem_b = 0.05;
  double selection_threshold = 1e-6;
  double selection_min_mass = 0.9;
  double weyl = 1e-8;
};

struct ExperimentConfig {
  std::optional<FlatSymbol> flat_symbol;
  std::optional<SphereSymbol> sphere_symbol;
  std::vector<SpherePoint> wells;
  std::vector<int> n_list;
  std::optional<int> big_n;
  std::optional<int> cutoff;
  std::optional<int> count;
  std::optional<double> window;          // "C"
  std::optional<double> cap_radius;
  std::optional<double> predicted_gap;
  std::optional<int> bottom_multiplicity;
  std::vector<double> deltas;
  Tolerances tolerances;
};

const std::vector<std::string>& command_names();

/// Parses JSON text (strict: unknown or duplicate keys are errors).
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config(const std::filesystem::path& path);

/// Inverse of parse_config_text on semantic content.
Json config_to_json(const ExperimentConfig& config);

FlatSymbol flat_symbol_from_json(const Json& j);
Json flat_symbol_to_json(const FlatSymbol& h);
SphereSymbol sphere_symbol_from_json(const Json& j);
Json sphere_symbol_to_json(const SphereSymbol& h);

/// Symmetric matrix of a real homogeneous quadratic flat symbol.
QuadraticForm quadratic_form_of(const FlatSymbol& h);

/// JSON text with insertion-ordered keys, two-space indent and doubles
/// printed with 17 significant digits.
std::string dump_json(const Json& j);

/// "N,lambda_1,...,lambda_k" followed by one row per record.
std::string spectrum_csv(const std::vector<SweepRecord>& records);

struct Report {
  std::string command;
  Verdict verdict = Verdict::Computed;
  Json data = Json::object();
  Json thresholds = Json::object();
  Json tolerances = Json::object();
  std::optional<std::string> csv;
};

Json report_document(const Report& report);

/// Writes <out>/<command>.json and, when present, <out>/<command>.csv.
/// Throws std::runtime_error on I/O failure.
void emit_report(const Report& report, const std::filesystem::path& out_dir);

/// Runs one command against a parsed config.
Report execute(const std::string& command, const ExperimentConfig& config, int threads);

int exit_code_for(Verdict v);

/// Full CLI entry: parse, execute, emit. Returns the process exit status and
/// writes diagnostics to stderr.
int run(const std::string& command, const std::filesystem::path& config_path,
        const std::filesystem::path& out_dir, int threads);

}  // namespace semiwell::cli
