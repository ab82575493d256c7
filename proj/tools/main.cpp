// Command-line front end. Talks to the harness exclusively through the
// shared-library C API.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "c2j.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // verification or translation failure
constexpr int kExitConfig = 2;
constexpr int kExitInfra = 3;

int exit_code_for(c2j_status status) {
  switch (status) {
    case C2J_OK: return kExitOk;
    case C2J_E_PARSE:
    case C2J_E_TRANSLATE: return kExitFailure;
    case C2J_E_CONFIG: return kExitConfig;
    case C2J_E_BACKEND:
    case C2J_E_INFRA:
    case C2J_E_INTERNAL: return kExitInfra;
  }
  return kExitInfra;
}

struct Session {
  c2j_session* handle = nullptr;
  Session() : handle(c2j_session_new()) {}
  ~Session() { c2j_session_free(handle); }
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;
};

struct OwnedString {
  char* text = nullptr;
  ~OwnedString() { c2j_string_free(text); }
  const char* get() const { return text ? text : ""; }
};

int report_error(const Session& session, c2j_status status) {
  std::fprintf(stderr, "error: %s\n", c2j_last_error(session.handle));
  return exit_code_for(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"C-to-Java translation and differential verification harness"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("-c,--config", config_path, "run configuration file (json)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "decompose a C file");
  std::string analyze_file;
  bool analyze_json = false;
  analyze->add_option("file", analyze_file, "C source file")->required();
  analyze->add_flag("--json", analyze_json, "machine-readable output");

  // translate
  auto* translate = app.add_subcommand("translate", "translate a C file");
  std::string translate_file, translate_backend = "rule_engine",
              translate_out;
  translate->add_option("file", translate_file, "C source file")->required();
  translate->add_option("--backend", translate_backend, "backend name")
      ->required();
  translate->add_option("--out", translate_out, "output directory");

  // verify
  auto* verify = app.add_subcommand(
      "verify", "differentially verify a C file against a Java file");
  std::string verify_c, verify_java;
  verify->add_option("c_file", verify_c, "C source file")->required();
  verify->add_option("java_file", verify_java, "Java source file")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "run the backend x corpus matrix");
  std::string bench_config;
  std::vector<std::string> bench_backends;
  bench->add_option("--config", bench_config, "run configuration file (json)");
  bench->add_option("--backend", bench_backends,
                    "backend names to run (default: all configured)");

  // report
  auto* report = app.add_subcommand("report", "render a saved result matrix");
  std::string report_matrix, report_format;
  report->add_option("matrix", report_matrix, "matrix.json path")->required();
  report->add_option("--format", report_format, "csv, json or markdown")
      ->required();

  CLI11_PARSE(app, argc, argv);

  Session session;
  if (!session.handle) {
    std::fprintf(stderr, "error: cannot create session\n");
    return kExitInfra;
  }

  if (bench->parsed() && !bench_config.empty()) config_path = bench_config;
  c2j_status status = c2j_load_config(
      session.handle, config_path.empty() ? nullptr : config_path.c_str());
  if (status != C2J_OK) return report_error(session, status);

  if (analyze->parsed()) {
    OwnedString text;
    status = c2j_analyze_file(session.handle, analyze_file.c_str(),
                              analyze_json ? 1 : 0, &text.text);
    if (status != C2J_OK) return report_error(session, status);
    std::fputs(text.get(), stdout);
    return kExitOk;
  }

  if (translate->parsed()) {
    OwnedString path, reports;
    status = c2j_translate_file(session.handle, translate_file.c_str(),
                                translate_backend.c_str(),
                                translate_out.empty() ? nullptr
                                                      : translate_out.c_str(),
                                &path.text, &reports.text);
    if (status != C2J_OK) return report_error(session, status);
    std::printf("wrote %s\n", path.get());
    if (reports.text && std::string(reports.get()) != "[]\n")
      std::fputs(reports.get(), stdout);
    return kExitOk;
  }

  if (verify->parsed()) {
    OwnedString verdict;
    int pass = 0;
    status = c2j_verify_files(session.handle, verify_c.c_str(),
                              verify_java.c_str(), &verdict.text, &pass);
    if (status != C2J_OK) return report_error(session, status);
    std::fputs(verdict.get(), stdout);
    return pass ? kExitOk : kExitFailure;
  }

  if (bench->parsed()) {
    std::string csv;
    for (const auto& b : bench_backends) {
      if (!csv.empty()) csv += ",";
      csv += b;
    }
    OwnedString matrix;
    int infra_clean = 0;
    status = c2j_bench(session.handle, csv.empty() ? nullptr : csv.c_str(),
                       &matrix.text, &infra_clean);
    if (status != C2J_OK) return report_error(session, status);
    OwnedString md;
    status = c2j_render_report(session.handle, matrix.get(), "markdown",
                               &md.text);
    if (status != C2J_OK) return report_error(session, status);
    std::fputs(md.get(), stdout);
    return infra_clean ? kExitOk : kExitInfra;
  }

  if (report->parsed()) {
    std::ifstream in(report_matrix, std::ios::binary);
    if (!in) {
      std::fprintf(stderr, "error: cannot open %s\n", report_matrix.c_str());
      return kExitConfig;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string matrix_json = buf.str();
    OwnedString text;
    status = c2j_render_report(session.handle, matrix_json.c_str(),
                               report_format.c_str(), &text.text);
    if (status != C2J_OK) return report_error(session, status);
    std::fputs(text.get(), stdout);
    return kExitOk;
  }

  return kExitConfig;
}
