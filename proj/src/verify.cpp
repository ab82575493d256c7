#include "c2j/verify.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace c2j {

namespace {

namespace fs = std::filesystem;

std::atomic<uint64_t> g_dir_counter{0};

std::string fresh_subdir(const std::string& root, const std::string& hint) {
  uint64_t n = g_dir_counter.fetch_add(1);
  std::string dir = root + "/" + hint + "-" + std::to_string(n);
  fs::create_directories(dir);
  return dir;
}

RunResult from_exec(const ExecResult& er, Phase phase) {
  RunResult r;
  r.phase = phase;
  r.exit_code = er.exit_code;
  r.timed_out = er.timed_out;
  r.signaled = er.signaled;
  r.infra_failed = er.spawn_failed;
  r.infra_message = er.spawn_error;
  r.stdout_bytes = er.stdout_bytes;
  r.stderr_text = er.stderr_text;
  r.duration_s = er.duration_s;
  return r;
}

std::string first_line(const std::string& text) {
  size_t nl = text.find('\n');
  return nl == std::string::npos ? text : text.substr(0, nl);
}

std::string excerpt(const std::string& text, size_t limit = 400) {
  if (text.size() <= limit) return text;
  return text.substr(0, limit) + "...";
}

bool contains(const std::string& haystack, const char* needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

uint64_t fnv1a64(const std::string& data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

ToolchainConfig ToolchainConfig::with_env_overrides(ToolchainConfig base) {
  if (const char* cc = std::getenv("C2J_CC")) base.c_compiler = cc;
  if (const char* javac = std::getenv("C2J_JAVAC")) base.java_compiler = javac;
  if (const char* java = std::getenv("C2J_JAVA")) base.java_runtime = java;
  return base;
}

ToolchainStatus probe_toolchain(const ToolchainConfig& cfg) {
  ToolchainStatus st;
  st.c_ok = command_exists(cfg.c_compiler);
  st.java_compiler_ok = command_exists(cfg.java_compiler);
  st.java_runtime_ok = command_exists(cfg.java_runtime);
  if (st.c_ok) {
    ExecResult er = run_process({cfg.c_compiler, "--version"}, "", 10);
    st.c_version = first_line(er.stdout_bytes);
  }
  if (st.java_runtime_ok) {
    ExecResult er = run_process({cfg.java_runtime, "-version"}, "", 10);
    st.java_version = first_line(er.stderr_text.empty() ? er.stdout_bytes
                                                        : er.stderr_text);
  }
  return st;
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "Pass";
    case Outcome::CCompileFail: return "CCompileFail";
    case Outcome::CRuntimeFail: return "CRuntimeFail";
    case Outcome::JavaCompileFail: return "JavaCompileFail";
    case Outcome::JavaRuntimeFail: return "JavaRuntimeFail";
    case Outcome::OutputMismatch: return "OutputMismatch";
    case Outcome::Timeout: return "Timeout";
    case Outcome::InfraError: return "InfraError";
  }
  return "?";
}

const char* failure_category_name(FailureCategory c) {
  switch (c) {
    case FailureCategory::BoilerplateSyntax: return "boilerplate_syntax";
    case FailureCategory::LiteralCTranslation: return "literal_c_translation";
    case FailureCategory::SemanticLogic: return "semantic_logic";
    case FailureCategory::AdvancedConcept: return "advanced_concept";
  }
  return "?";
}

std::optional<Outcome> outcome_from_name(const std::string& name) {
  for (Outcome o : {Outcome::Pass, Outcome::CCompileFail, Outcome::CRuntimeFail,
                    Outcome::JavaCompileFail, Outcome::JavaRuntimeFail,
                    Outcome::OutputMismatch, Outcome::Timeout,
                    Outcome::InfraError})
    if (name == outcome_name(o)) return o;
  return std::nullopt;
}

std::optional<FailureCategory> failure_category_from_name(
    const std::string& name) {
  for (FailureCategory c :
       {FailureCategory::BoilerplateSyntax, FailureCategory::LiteralCTranslation,
        FailureCategory::SemanticLogic, FailureCategory::AdvancedConcept})
    if (name == failure_category_name(c)) return c;
  return std::nullopt;
}

RunPair run_c(const CSourceFile& source, const ToolchainConfig& cfg,
              const std::string& workdir) {
  RunPair pair;
  std::string dir = fresh_subdir(workdir, "c");
  std::string src_path = dir + "/" + source.stem() + ".c";
  {
    std::ofstream out(src_path, std::ios::binary);
    out << source.text();
  }
  std::vector<std::string> compile_argv = {cfg.c_compiler};
  for (const auto& f : cfg.c_flags) compile_argv.push_back(f);
  compile_argv.push_back(source.stem() + ".c");
  compile_argv.push_back("-o");
  compile_argv.push_back("prog");

  pair.compile =
      from_exec(run_process(compile_argv, dir, cfg.compile_timeout_s),
                Phase::Compile);
  if (!pair.compile.ok()) return pair;

  pair.run = from_exec(run_process({dir + "/prog"}, dir, cfg.run_timeout_s),
                       Phase::Run);
  return pair;
}

RunPair run_java(const JavaCompilationUnit& unit, const ToolchainConfig& cfg,
                 const std::string& workdir) {
  RunPair pair;
  std::string dir = fresh_subdir(workdir, "java");
  write_unit(unit, dir);

  pair.compile = from_exec(
      run_process({cfg.java_compiler, unit.file_name()}, dir,
                  cfg.compile_timeout_s),
      Phase::Compile);
  if (!pair.compile.ok()) return pair;

  pair.run = from_exec(
      run_process({cfg.java_runtime, "-cp", ".", unit.class_name}, dir,
                  cfg.run_timeout_s),
      Phase::Run);
  return pair;
}

Verdict compare_outputs(const std::string& c_out, const std::string& java_out) {
  Verdict v;
  if (c_out == java_out) {
    v.outcome = Outcome::Pass;
    return v;
  }
  v.outcome = Outcome::OutputMismatch;
  size_t limit = std::min(c_out.size(), java_out.size());
  size_t offset = limit;
  for (size_t i = 0; i < limit; ++i) {
    if (c_out[i] != java_out[i]) {
      offset = i;
      break;
    }
  }
  v.divergence_offset = static_cast<long long>(offset);
  std::ostringstream ev;
  ev << "first divergence at byte " << offset << " (c=" << c_out.size()
     << " bytes, java=" << java_out.size() << " bytes)";
  v.evidence = ev.str();
  return v;
}

FailureCategory classify(const Verdict& verdict, const std::string& java_stderr,
                         const std::string& unit_text,
                         const std::string& test_id) {
  static const char* kBoilerplate[] = {
      "Main method not found",
      "Main method must return",
      "ClassNotFoundException",
      "Could not find or load main class",
      "class, interface, or enum expected",
      "class, interface, enum, or record expected",
      "is public, should be declared in a file named",
      "reached end of file while parsing",
      "illegal start of type",
      "NoSuchMethodError: main",
  };
  for (const char* p : kBoilerplate)
    if (contains(java_stderr, p)) return FailureCategory::BoilerplateSyntax;

  static const char* kCIsmsSymbols[] = {"malloc", "free", "strcpy", "strcat",
                                        "strlen", "printf", "scanf"};
  if (contains(java_stderr, "cannot find symbol")) {
    for (const char* sym : kCIsmsSymbols)
      if (contains(java_stderr, sym)) return FailureCategory::LiteralCTranslation;
  }
  if (contains(java_stderr, "UnknownFormatConversionException") ||
      contains(java_stderr, "IllegalFormatException") ||
      contains(java_stderr, "FormatFlagsConversionMismatchException"))
    return FailureCategory::LiteralCTranslation;
  for (const char* sym : {"malloc(", "free(", "strcpy(", "strcat("})
    if (contains(unit_text, sym)) return FailureCategory::LiteralCTranslation;
  // address-of in prefix position left in the Java text
  for (const char* pat : {"= &", ", &", "(&", "return &"})
    if (contains(unit_text, pat) && !contains(unit_text, "&&"))
      return FailureCategory::LiteralCTranslation;

  if (verdict.outcome == Outcome::OutputMismatch)
    return FailureCategory::SemanticLogic;

  static const char* kAdvanced[] = {"T7", "T10", "T12", "T18", "T19"};
  for (const char* t : kAdvanced)
    if (test_id == t) return FailureCategory::AdvancedConcept;

  return FailureCategory::BoilerplateSyntax;
}

Verdict verify_translation(const CSourceFile& c_source,
                           const JavaCompilationUnit& unit,
                           const ToolchainConfig& cfg,
                           const std::string& workdir,
                           const std::string& test_id,
                           const std::string* c_baseline) {
  Verdict v;
  double total = 0;
  std::string c_out;

  if (c_baseline) {
    c_out = *c_baseline;
  } else {
    RunPair c_pair = run_c(c_source, cfg, workdir);
    total += c_pair.compile.duration_s;
    if (c_pair.compile.infra_failed) {
      v.outcome = Outcome::InfraError;
      v.evidence = c_pair.compile.infra_message;
      v.duration_s = total;
      return v;
    }
    if (c_pair.compile.timed_out) {
      v.outcome = Outcome::Timeout;
      v.evidence = "C compilation timed out";
      v.duration_s = total;
      return v;
    }
    if (!c_pair.compile.ok()) {
      v.outcome = Outcome::CCompileFail;
      v.evidence = excerpt(c_pair.compile.stderr_text);
      v.duration_s = total;
      return v;
    }
    total += c_pair.run->duration_s;
    if (c_pair.run->timed_out) {
      v.outcome = Outcome::Timeout;
      v.evidence = "C execution timed out";
      v.duration_s = total;
      return v;
    }
    if (c_pair.run->signaled) {
      v.outcome = Outcome::CRuntimeFail;
      v.evidence = "C program terminated by signal " +
                   std::to_string(c_pair.run->exit_code - 128);
      v.duration_s = total;
      return v;
    }
    c_out = c_pair.run->stdout_bytes;
    if (c_pair.run->exit_code != 0)
      v.evidence = "c exit code " + std::to_string(c_pair.run->exit_code);
  }

  RunPair j_pair = run_java(unit, cfg, workdir);
  total += j_pair.compile.duration_s;
  if (j_pair.compile.infra_failed) {
    v.outcome = Outcome::InfraError;
    v.evidence = j_pair.compile.infra_message;
    v.duration_s = total;
    return v;
  }
  if (j_pair.compile.timed_out) {
    v.outcome = Outcome::Timeout;
    v.evidence = "Java compilation timed out";
    v.duration_s = total;
    return v;
  }
  if (!j_pair.compile.ok()) {
    v.outcome = Outcome::JavaCompileFail;
    v.evidence = excerpt(j_pair.compile.stderr_text);
    v.category = classify(Verdict{Outcome::JavaCompileFail, {}, v.evidence, -1,
                                  total},
                          j_pair.compile.stderr_text, unit.text, test_id);
    v.duration_s = total;
    return v;
  }
  total += j_pair.run->duration_s;
  if (j_pair.run->timed_out) {
    v.outcome = Outcome::Timeout;
    v.evidence = "Java execution timed out";
    v.duration_s = total;
    return v;
  }

  const std::string& j_out = j_pair.run->stdout_bytes;
  const std::string& j_err = j_pair.run->stderr_text;

  if (c_out == j_out && !j_pair.run->signaled) {
    v.outcome = Outcome::Pass;
    if (j_pair.run->exit_code != 0) {
      if (!v.evidence.empty()) v.evidence += "; ";
      v.evidence += "java exit code " + std::to_string(j_pair.run->exit_code);
    }
    v.duration_s = total;
    return v;
  }

  if (j_pair.run->signaled || j_pair.run->exit_code != 0) {
    v.outcome = Outcome::JavaRuntimeFail;
    v.evidence = excerpt(j_err.empty() ? "java exit code " +
                                             std::to_string(j_pair.run->exit_code)
                                       : j_err);
  } else {
    Verdict cmp = compare_outputs(c_out, j_out);
    v.outcome = cmp.outcome;
    v.evidence = cmp.evidence;
    v.divergence_offset = cmp.divergence_offset;
  }
  v.category = classify(v, j_err, unit.text, test_id);
  v.duration_s = total;
  return v;
}

const BaselineCache::Entry& BaselineCache::get(const CSourceFile& source,
                                               const ToolchainConfig& cfg,
                                               const std::string& workdir) {
  std::string key_material = source.text() + "\x1f" + cfg.c_compiler;
  for (const auto& f : cfg.c_flags) key_material += "\x1f" + f;
  uint64_t key = fnv1a64(key_material);

  std::lock_guard<std::mutex> lock(mu_);
  auto it = entries_.find(key);
  if (it != entries_.end()) return it->second;

  Entry entry;
  std::ostringstream name;
  name << std::hex << key;
  std::string cache_path = dir_ + "/" + name.str() + ".out";
  if (std::filesystem::exists(cache_path)) {
    std::ifstream in(cache_path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    entry.ok = true;
    entry.stdout_bytes = buf.str();
    return entries_[key] = std::move(entry);
  }

  RunPair pair = run_c(source, cfg, workdir);
  if (pair.compile.infra_failed || pair.compile.timed_out ||
      !pair.compile.ok()) {
    entry.ok = false;
    entry.failure.outcome = pair.compile.infra_failed ? Outcome::InfraError
                            : pair.compile.timed_out  ? Outcome::Timeout
                                                      : Outcome::CCompileFail;
    entry.failure.evidence = pair.compile.infra_failed
                                 ? pair.compile.infra_message
                                 : excerpt(pair.compile.stderr_text);
    return entries_[key] = std::move(entry);
  }
  if (pair.run->timed_out || pair.run->signaled) {
    entry.ok = false;
    entry.failure.outcome =
        pair.run->timed_out ? Outcome::Timeout : Outcome::CRuntimeFail;
    entry.failure.evidence = pair.run->timed_out
                                 ? "C execution timed out"
                                 : "terminated by signal";
    return entries_[key] = std::move(entry);
  }
  entry.ok = true;
  entry.stdout_bytes = pair.run->stdout_bytes;
  std::filesystem::create_directories(dir_);
  {
    std::ofstream out(cache_path, std::ios::binary);
    out << entry.stdout_bytes;
  }
  return entries_[key] = std::move(entry);
}

}  // namespace c2j
