#include "semiwell/cli.hpp"

#include "CLI11.hpp"

#include <string>

int main(int argc, char** argv) {
  CLI::App app{"Toeplitz operators on Bargmann space and the sphere: spectra, wells and verdicts"};
  app.require_subcommand(1, 1);

  std::string config;
  std::string out = ".";
  int threads = 1;
  int seed = 0;
  for (const std::string& name : semiwell::cli::command_names()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config, "experiment config (JSON)")->required();
    sub->add_option("--out", out, "output directory for JSON/CSV reports");
    sub->add_option("--threads", threads, "worker threads for N sweeps")->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed, "reserved; all computations are deterministic");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : semiwell::cli::kInputError;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  return semiwell::cli::run(command, config, out, threads);
}
