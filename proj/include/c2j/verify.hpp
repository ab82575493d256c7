#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "c2j/assemble.hpp"
#include "c2j/exec.hpp"
#include "c2j/source.hpp"

namespace c2j {

// Commands and limits for the two toolchains. Paths are commands resolved via
// PATH; the environment variables C2J_CC, C2J_JAVAC and C2J_JAVA override
// them.
struct ToolchainConfig {
  std::string c_compiler = "gcc";
  std::vector<std::string> c_flags;
  std::string java_compiler = "javac";
  std::string java_runtime = "java";
  double compile_timeout_s = 30.0;
  double run_timeout_s = 10.0;

  static ToolchainConfig with_env_overrides(ToolchainConfig base);
};

struct ToolchainStatus {
  bool c_ok = false;
  bool java_compiler_ok = false;
  bool java_runtime_ok = false;
  std::string c_version;
  std::string java_version;

  bool c_side() const { return c_ok; }
  bool java_side() const { return java_compiler_ok && java_runtime_ok; }
  bool all() const { return c_side() && java_side(); }
};

// Probed once at startup; cheap existence checks plus version strings.
ToolchainStatus probe_toolchain(const ToolchainConfig& cfg);

enum class Phase { Compile, Run };

struct RunResult {
  Phase phase = Phase::Compile;
  int exit_code = -1;
  bool timed_out = false;
  bool signaled = false;
  bool infra_failed = false;
  std::string infra_message;
  std::string stdout_bytes;  // unmodified
  std::string stderr_text;
  double duration_s = 0.0;

  bool ok() const {
    return !timed_out && !signaled && !infra_failed && exit_code == 0;
  }
};

struct RunPair {
  RunResult compile;
  std::optional<RunResult> run;  // absent when compilation failed
};

enum class Outcome {
  Pass,
  CCompileFail,
  CRuntimeFail,
  JavaCompileFail,
  JavaRuntimeFail,
  OutputMismatch,
  Timeout,
  InfraError,
};

enum class FailureCategory {
  BoilerplateSyntax,
  LiteralCTranslation,
  SemanticLogic,
  AdvancedConcept,
};

const char* outcome_name(Outcome o);
const char* failure_category_name(FailureCategory c);
std::optional<Outcome> outcome_from_name(const std::string& name);
std::optional<FailureCategory> failure_category_from_name(
    const std::string& name);

struct Verdict {
  Outcome outcome = Outcome::InfraError;
  std::optional<FailureCategory> category;
  std::string evidence;            // diagnostic excerpt or exit-code notes
  long long divergence_offset = -1;  // first differing byte for mismatches
  double duration_s = 0.0;

  bool pass() const { return outcome == Outcome::Pass; }
};

// Compiles and runs one C file in a fresh subdirectory of workdir.
RunPair run_c(const CSourceFile& source, const ToolchainConfig& cfg,
              const std::string& workdir);

// Compiles and launches one assembled unit, symmetric to run_c.
RunPair run_java(const JavaCompilationUnit& unit, const ToolchainConfig& cfg,
                 const std::string& workdir);

// Strict byte comparison: equality is a Pass, anything else an
// OutputMismatch carrying the first divergence offset.
Verdict compare_outputs(const std::string& c_out, const std::string& java_out);

// Assigns the failure category for a Java-side failure. Total: always
// returns a label. `test_id` feeds the advanced-concept bucket and may be
// empty.
FailureCategory classify(const Verdict& verdict, const std::string& java_stderr,
                         const std::string& unit_text,
                         const std::string& test_id = "");

// Full differential verification of a C source against an assembled unit.
// `c_baseline` may carry a cached C stdout to skip recompiling the C side.
Verdict verify_translation(const CSourceFile& c_source,
                           const JavaCompilationUnit& unit,
                           const ToolchainConfig& cfg,
                           const std::string& workdir,
                           const std::string& test_id = "",
                           const std::string* c_baseline = nullptr);

// Content-addressed cache of C baseline outputs, shared across backends so
// one bench run compiles each C file once.
class BaselineCache {
 public:
  explicit BaselineCache(std::string dir) : dir_(std::move(dir)) {}

  struct Entry {
    bool ok = false;
    std::string stdout_bytes;
    Verdict failure;  // meaningful when !ok
  };

  const Entry& get(const CSourceFile& source, const ToolchainConfig& cfg,
                   const std::string& workdir);

 private:
  std::string dir_;
  std::mutex mu_;
  std::map<uint64_t, Entry> entries_;
};

uint64_t fnv1a64(const std::string& data);

}  // namespace c2j
