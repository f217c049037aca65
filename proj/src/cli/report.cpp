#include "semiwell/cli.hpp"

#include <fstream>

namespace semiwell::cli {

Json report_document(const Report& report) {
  return Json{{"command", report.command},
              {"verdict", to_string(report.verdict)},
              {"data", report.data},
              {"thresholds", report.thresholds},
              {"tolerances", report.tolerances}};
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace

void emit_report(const Report& report, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + out_dir.string() + ": " + ec.message());
  write_file(out_dir / (report.command + ".json"), dump_json(report_document(report)));
  if (report.csv) write_file(out_dir / (report.command + ".csv"), *report.csv);
}

int exit_code_for(Verdict v) { return v == Verdict::Fail ? kVerdictFail : kSuccess; }

}  // namespace semiwell::cli
