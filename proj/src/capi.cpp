#include "c2j.h"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "c2j/config.hpp"
#include "c2j/decompose.hpp"
#include "c2j/matrix.hpp"
#include "c2j/rule_engine.hpp"

using namespace c2j;
using nlohmann::json;

struct c2j_session {
  RunConfig config = RunConfig::defaults();
  std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

c2j_status status_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Syntax:
    case ErrorKind::Unsupported:
    case ErrorKind::Unresolved:
      return C2J_E_PARSE;
    case ErrorKind::Sanitize:
    case ErrorKind::Assemble:
      return C2J_E_TRANSLATE;
    case ErrorKind::Config:
      return C2J_E_CONFIG;
    case ErrorKind::Backend:
      return C2J_E_BACKEND;
    case ErrorKind::Infra:
      return C2J_E_INFRA;
    case ErrorKind::Internal:
      return C2J_E_INTERNAL;
  }
  return C2J_E_INTERNAL;
}

template <typename Fn>
c2j_status guarded(c2j_session* session, Fn&& fn) {
  if (!session) return C2J_E_CONFIG;
  session->last_error.clear();
  try {
    return fn();
  } catch (const Error& e) {
    session->last_error = e.what();
    return status_for(e);
  } catch (const std::exception& e) {
    session->last_error = e.what();
    return C2J_E_INTERNAL;
  }
}

json analyze_to_json(const AnalyzedFile& analyzed,
                     const TranslationContext& ctx) {
  const CDecomposition& parts = analyzed.parts;
  json j;
  j["file"] = analyzed.source.path();
  j["class"] = ctx.class_name;
  json macros = json::array();
  for (const auto& m : parts.macros)
    macros.push_back({{"name", m.name},
                      {"function_like", m.function_like()},
                      {"multiline", m.multiline}});
  j["macros"] = std::move(macros);
  json globals = json::array();
  for (const auto& g : parts.globals)
    globals.push_back({{"name", g.decl->name},
                       {"type", g.decl->type.describe()},
                       {"text", g.verbatim}});
  j["globals"] = std::move(globals);
  json records = json::array();
  for (const auto& r : parts.records)
    records.push_back(
        {{"name", r.decl->name}, {"kind", record_kind_name(r.kind)}});
  j["records"] = std::move(records);
  j["prototypes"] = parts.prototypes.size();
  json functions = json::array();
  for (const auto& f : parts.functions) {
    json fn;
    fn["name"] = f.name;
    json rules = json::array();
    for (RuleId id : applicable_rules(*f.decl, ctx)) rules.push_back(rule_name(id));
    fn["rules"] = std::move(rules);
    functions.push_back(std::move(fn));
  }
  j["functions"] = std::move(functions);
  json all_rules = json::array();
  for (RuleId id : applicable_rules(parts, ctx)) all_rules.push_back(rule_name(id));
  j["rules"] = std::move(all_rules);
  return j;
}

std::string analyze_to_text(const json& j) {
  std::ostringstream out;
  out << "file: " << j["file"].get<std::string>() << "\n";
  out << "class: " << j["class"].get<std::string>() << "\n";
  out << "macros: " << j["macros"].size();
  for (const auto& m : j["macros"])
    out << " " << m["name"].get<std::string>()
        << (m["function_like"].get<bool>() ? "(...)" : "");
  out << "\n";
  out << "globals: " << j["globals"].size();
  for (const auto& g : j["globals"]) out << " " << g["name"].get<std::string>();
  out << "\n";
  out << "records: " << j["records"].size();
  for (const auto& r : j["records"])
    out << " " << r["kind"].get<std::string>() << ":"
        << r["name"].get<std::string>();
  out << "\n";
  out << "prototypes: " << j["prototypes"].get<size_t>() << "\n";
  out << "functions: " << j["functions"].size();
  for (const auto& f : j["functions"]) out << " " << f["name"].get<std::string>();
  out << "\n";
  out << "rules:";
  for (const auto& r : j["rules"]) out << " " << r.get<std::string>();
  out << "\n";
  return out.str();
}

json verdict_to_json(const Verdict& v) {
  json j;
  j["outcome"] = outcome_name(v.outcome);
  if (v.category)
    j["category"] = failure_category_name(*v.category);
  else
    j["category"] = nullptr;
  j["evidence"] = v.evidence;
  if (v.divergence_offset >= 0) j["divergence_offset"] = v.divergence_offset;
  j["duration_s"] = v.duration_s;
  return j;
}

std::vector<TestCase> corpus_for(const RunConfig& config) {
  if (config.corpus == "builtin") return load_corpus();
  return load_corpus_from_dir(config.corpus);
}

}  // namespace

extern "C" {

c2j_session* c2j_session_new(void) {
  try {
    return new c2j_session();
  } catch (...) {
    return nullptr;
  }
}

void c2j_session_free(c2j_session* session) { delete session; }

const char* c2j_last_error(const c2j_session* session) {
  return session ? session->last_error.c_str() : "null session";
}

c2j_status c2j_load_config(c2j_session* session, const char* path_or_null) {
  return guarded(session, [&]() {
    session->config =
        path_or_null ? RunConfig::load(path_or_null) : RunConfig::defaults();
    return C2J_OK;
  });
}

c2j_status c2j_config_to_json(c2j_session* session, char** out_json) {
  return guarded(session, [&]() {
    if (!out_json) fail(ErrorKind::Config, "out_json must not be null");
    *out_json = dup_string(session->config.to_json());
    return C2J_OK;
  });
}

c2j_status c2j_analyze_file(c2j_session* session, const char* c_path,
                            int as_json, char** out_text) {
  return guarded(session, [&]() {
    if (!c_path || !out_text)
      fail(ErrorKind::Config, "c_path and out_text must not be null");
    AnalyzedFile analyzed = analyze(CSourceFile::from_file(c_path));
    TranslationContext ctx = TranslationContext::build(analyzed.parts);
    json j = analyze_to_json(analyzed, ctx);
    *out_text = dup_string(as_json ? j.dump(2) + "\n" : analyze_to_text(j));
    return C2J_OK;
  });
}

c2j_status c2j_translate_file(c2j_session* session, const char* c_path,
                              const char* backend_name, const char* out_dir,
                              char** out_java_path, char** out_reports_json) {
  return guarded(session, [&]() {
    if (!c_path || !backend_name)
      fail(ErrorKind::Config, "c_path and backend_name must not be null");
    const BackendSpec* backend = session->config.find_backend(backend_name);
    if (!backend)
      fail(ErrorKind::Config,
           "backend '" + std::string(backend_name) + "' is not configured");
    CSourceFile source = CSourceFile::from_file(c_path);
    TranslationResult result = translate_with_backend(*backend, source);
    std::string dir = out_dir && *out_dir ? out_dir : session->config.output_dir;
    std::string path = write_unit(result.unit, dir);
    if (out_java_path) *out_java_path = dup_string(path);
    if (out_reports_json) {
      json reports = json::array();
      for (const auto& [part, report] : result.reports) {
        json entry;
        entry["part"] = part;
        entry["input_bytes"] = report.input_bytes;
        entry["output_bytes"] = report.output_bytes;
        json actions = json::array();
        for (auto a : report.actions) actions.push_back(sanitize_action_name(a));
        entry["actions"] = std::move(actions);
        entry["extracted"] = !report.failed();
        reports.push_back(std::move(entry));
      }
      *out_reports_json = dup_string(reports.dump(2) + "\n");
    }
    return C2J_OK;
  });
}

c2j_status c2j_verify_files(c2j_session* session, const char* c_path,
                            const char* java_path, char** out_verdict_json,
                            int* out_pass) {
  return guarded(session, [&]() {
    if (!c_path || !java_path)
      fail(ErrorKind::Config, "c_path and java_path must not be null");
    ToolchainStatus status = probe_toolchain(session->config.toolchain);
    if (!status.c_side())
      fail(ErrorKind::Infra, "C compiler '" +
                                 session->config.toolchain.c_compiler +
                                 "' not found");
    if (!status.java_side())
      fail(ErrorKind::Infra, "Java toolchain not found (javac/java)");

    CSourceFile c_source = CSourceFile::from_file(c_path);
    std::ifstream in(java_path, std::ios::binary);
    if (!in) fail(ErrorKind::Config, std::string("cannot open ") + java_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    JavaCompilationUnit unit;
    unit.class_name = CSourceFile(java_path, "").stem();
    unit.text = buf.str();

    std::string workdir = session->config.output_dir + "/verify";
    std::filesystem::create_directories(workdir);
    Verdict v = verify_translation(c_source, unit, session->config.toolchain,
                                   workdir);
    if (out_verdict_json)
      *out_verdict_json = dup_string(verdict_to_json(v).dump(2) + "\n");
    if (out_pass) *out_pass = v.pass() ? 1 : 0;
    return C2J_OK;
  });
}

c2j_status c2j_bench(c2j_session* session, const char* backends_csv,
                     char** out_matrix_json, int* out_infra_clean) {
  return guarded(session, [&]() {
    std::vector<BackendSpec> backends;
    if (backends_csv && *backends_csv) {
      std::string csv(backends_csv);
      size_t begin = 0;
      while (begin <= csv.size()) {
        size_t end = csv.find(',', begin);
        if (end == std::string::npos) end = csv.size();
        std::string name = csv.substr(begin, end - begin);
        if (!name.empty()) {
          const BackendSpec* b = session->config.find_backend(name);
          if (!b)
            fail(ErrorKind::Config,
                 "backend '" + name + "' is not configured");
          backends.push_back(*b);
        }
        begin = end + 1;
      }
    } else {
      backends = session->config.backends;
    }
    if (backends.empty())
      fail(ErrorKind::Config, "no backends selected for bench");

    std::vector<TestCase> corpus = corpus_for(session->config);
    ResultMatrix matrix = run_matrix(backends, corpus, session->config);

    std::string matrix_json = report(matrix, ReportFormat::Json);
    std::filesystem::create_directories(session->config.output_dir);
    {
      std::ofstream out(session->config.output_dir + "/matrix.json",
                        std::ios::binary);
      out << matrix_json;
    }
    for (const auto& fmt_name : session->config.report_formats) {
      auto fmt = report_format_from_name(fmt_name);
      if (!fmt) continue;
      std::string ext = fmt_name == "markdown" ? "md" : fmt_name;
      std::ofstream out(session->config.output_dir + "/report." + ext,
                        std::ios::binary);
      out << report(matrix, *fmt);
    }

    bool infra_clean = true;
    for (const auto& c : matrix.cells)
      if (c.verdict.outcome == Outcome::InfraError) infra_clean = false;
    if (out_matrix_json) *out_matrix_json = dup_string(matrix_json);
    if (out_infra_clean) *out_infra_clean = infra_clean ? 1 : 0;
    return C2J_OK;
  });
}

c2j_status c2j_render_report(c2j_session* session, const char* matrix_json,
                             const char* format, char** out_text) {
  return guarded(session, [&]() {
    if (!matrix_json || !format || !out_text)
      fail(ErrorKind::Config, "matrix_json, format and out_text must not be null");
    auto fmt = report_format_from_name(format);
    if (!fmt)
      fail(ErrorKind::Config, "unknown report format '" + std::string(format) +
                                  "' (want csv, json or markdown)");
    ResultMatrix matrix = matrix_from_json(matrix_json);
    *out_text = dup_string(report(matrix, *fmt));
    return C2J_OK;
  });
}

void c2j_string_free(char* text) { std::free(text); }

}  // extern "C"
