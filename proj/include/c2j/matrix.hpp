#pragma once

#include <optional>
#include <string>
#include <vector>

#include "c2j/backend.hpp"
#include "c2j/corpus.hpp"
#include "c2j/sanitize.hpp"
#include "c2j/verify.hpp"

namespace c2j {

struct RunConfig;  // config.hpp

struct ResultCell {
  std::string backend;
  std::string test;
  Verdict verdict;
};

struct ResultMatrix {
  std::vector<std::string> backends;  // ordered
  std::vector<std::string> tests;     // T1..T20
  std::vector<ResultCell> cells;      // backend-major, test order
  // metadata
  std::string timestamp;
  std::string c_compiler_version;
  std::string java_runtime_version;
  std::string gen_params_note;

  const ResultCell* cell(const std::string& backend,
                         const std::string& test) const;
  int total_passes(const std::string& backend) const;
};

// Tier bands: 0 passes -> 3, 1..10 -> 2, 11 and up -> 1.
int tier(int pass_count);

// Integer percent, rounded half up: 2/19 -> 11, 3/19 -> 16.
int pass_rate_percent(int passes, int backend_count);

enum class ReportFormat { Csv, Json, Markdown };
std::optional<ReportFormat> report_format_from_name(const std::string& name);

// Deterministic serialization. Markdown reproduces the backend-by-test grid
// with totals and the per-test pass-count/pass-rate table; csv columns are
// backend, test id, outcome, category, duration.
std::string report(const ResultMatrix& matrix, ReportFormat format);

// Round-trip for the json format.
ResultMatrix matrix_from_json(const std::string& json_text);

// One backend translating one test case, end to end:
// decompose -> translate each part -> sanitize (skipped for the rule engine)
// -> assemble -> verify against the cached C baseline.
struct CellOutcome {
  Verdict verdict;
  std::optional<JavaCompilationUnit> unit;  // whatever was assembled
  std::vector<std::pair<std::string, SanitizeReport>> reports;  // per part
};
CellOutcome run_cell(const BackendSpec& backend, const TestCase& test,
                     const ToolchainConfig& toolchain, BaselineCache& cache,
                     const std::string& workdir);

// The full backend x test grid. Cells never abort the matrix; infrastructure
// trouble lands in the affected cells as InfraError.
ResultMatrix run_matrix(const std::vector<BackendSpec>& backends,
                        const std::vector<TestCase>& corpus,
                        const RunConfig& config);

// Translation without verification, shared with the CLI translate command.
struct TranslationResult {
  JavaCompilationUnit unit;
  std::vector<std::pair<std::string, SanitizeReport>> reports;
};
TranslationResult translate_with_backend(const BackendSpec& backend,
                                         const CSourceFile& source);

}  // namespace c2j
