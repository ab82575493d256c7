#include "c2j/matrix.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "c2j/config.hpp"
#include "c2j/decompose.hpp"
#include "c2j/rule_engine.hpp"

namespace c2j {

namespace {

using nlohmann::json;

std::string utc_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

DefinitionKind definition_kind_for(SnippetKind kind) {
  switch (kind) {
    case SnippetKind::StaticField: return DefinitionKind::Field;
    case SnippetKind::NestedClass: return DefinitionKind::Class;
    case SnippetKind::Method: return DefinitionKind::Method;
  }
  return DefinitionKind::Method;
}

struct PartPlan {
  PromptKind prompt_kind;
  SnippetKind snippet_kind;
  std::string name;
  std::string payload;
  bool is_union = false;
};

std::vector<PartPlan> plan_parts(const CDecomposition& parts) {
  std::vector<PartPlan> plan;
  for (const auto& g : parts.globals)
    plan.push_back({PromptKind::Global, SnippetKind::StaticField,
                    g.decl->name, g.verbatim, false});
  for (const auto& r : parts.records)
    plan.push_back({PromptKind::Record, SnippetKind::NestedClass,
                    r.decl->name, r.verbatim, r.kind == RecordKind::Union});
  for (const auto& f : parts.functions)
    plan.push_back({PromptKind::Function, SnippetKind::Method, f.name,
                    f.verbatim, false});
  return plan;
}

// Model-backed translation of every part of one file. Extraction failures on
// non-union parts surface as a sanitize failure in the report list; the
// caller decides the verdict.
struct ModelTranslation {
  std::vector<JavaSnippet> snippets;
  std::vector<std::pair<std::string, SanitizeReport>> reports;
  std::optional<std::string> failed_part;
};

ModelTranslation translate_via_model(const BackendSpec& backend,
                                     const CDecomposition& parts,
                                     const TranslationContext& ctx) {
  ModelTranslation out;
  for (const auto& part : plan_parts(parts)) {
    RenderedPrompt prompt =
        render_prompt(part.prompt_kind, part.payload, part.name, ctx);
    RawCompletion completion = complete(backend, prompt);
    SanitizeReport report = sanitize_completion(
        completion.text, part.name, definition_kind_for(part.snippet_kind));
    if (report.failed()) {
      if (part.is_union) {
        // a union is supposed to produce nothing
        out.snippets.push_back({part.snippet_kind, part.name, ""});
        out.reports.emplace_back(part.name, std::move(report));
        continue;
      }
      out.reports.emplace_back(part.name, std::move(report));
      if (!out.failed_part) out.failed_part = part.name;
      continue;
    }
    out.snippets.push_back({part.snippet_kind, part.name, *report.result});
    out.reports.emplace_back(part.name, std::move(report));
  }
  return out;
}

std::vector<JavaSnippet> flatten(const TranslatedUnit& unit) {
  std::vector<JavaSnippet> all;
  for (const auto& s : unit.fields) all.push_back(s);
  for (const auto& s : unit.classes) all.push_back(s);
  for (const auto& s : unit.methods) all.push_back(s);
  return all;
}

}  // namespace

const ResultCell* ResultMatrix::cell(const std::string& backend,
                                     const std::string& test) const {
  for (const auto& c : cells)
    if (c.backend == backend && c.test == test) return &c;
  return nullptr;
}

int ResultMatrix::total_passes(const std::string& backend) const {
  int n = 0;
  for (const auto& c : cells)
    if (c.backend == backend && c.verdict.pass()) ++n;
  return n;
}

int tier(int pass_count) {
  if (pass_count <= 0) return 3;
  if (pass_count <= 10) return 2;
  return 1;
}

int pass_rate_percent(int passes, int backend_count) {
  if (backend_count <= 0) return 0;
  return static_cast<int>(
      std::lround(100.0 * passes / static_cast<double>(backend_count)));
}

std::optional<ReportFormat> report_format_from_name(const std::string& name) {
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  if (name == "markdown") return ReportFormat::Markdown;
  return std::nullopt;
}

TranslationResult translate_with_backend(const BackendSpec& backend,
                                         const CSourceFile& source) {
  AnalyzedFile analyzed = analyze(source);
  TranslationContext ctx = TranslationContext::build(analyzed.parts);

  if (backend.kind == BackendKind::RuleEngine) {
    TranslatedUnit tu = translate_parts(analyzed.parts, ctx);
    TranslationResult result;
    result.unit = assemble(ctx.class_name, flatten(tu));
    return result;
  }

  ModelTranslation mt = translate_via_model(backend, analyzed.parts, ctx);
  if (mt.failed_part)
    fail(ErrorKind::Sanitize,
         "no usable definition extracted for part '" + *mt.failed_part + "'");
  TranslationResult result;
  result.unit = assemble(ctx.class_name, mt.snippets);
  result.reports = std::move(mt.reports);
  return result;
}

CellOutcome run_cell(const BackendSpec& backend, const TestCase& test,
                     const ToolchainConfig& toolchain, BaselineCache& cache,
                     const std::string& workdir) {
  CellOutcome out;
  CSourceFile source = test.source();

  const BaselineCache::Entry& baseline =
      cache.get(source, toolchain, workdir);
  if (!baseline.ok) {
    out.verdict = baseline.failure;
    return out;
  }

  std::optional<JavaCompilationUnit> unit;
  try {
    if (backend.kind == BackendKind::RuleEngine) {
      AnalyzedFile analyzed = analyze(source);
      TranslationContext ctx = TranslationContext::build(analyzed.parts);
      TranslatedUnit tu = translate_parts(analyzed.parts, ctx);
      unit = assemble(ctx.class_name, flatten(tu));
    } else {
      AnalyzedFile analyzed = analyze(source);
      TranslationContext ctx = TranslationContext::build(analyzed.parts);
      ModelTranslation mt = translate_via_model(backend, analyzed.parts, ctx);
      out.reports = std::move(mt.reports);
      if (mt.failed_part) {
        out.verdict.outcome = Outcome::JavaCompileFail;
        out.verdict.evidence =
            "sanitizer could not extract a definition for '" +
            *mt.failed_part + "'";
        out.verdict.category = FailureCategory::BoilerplateSyntax;
        return out;
      }
      unit = assemble(ctx.class_name, mt.snippets);
    }
  } catch (const BackendError& e) {
    out.verdict.outcome = Outcome::InfraError;
    out.verdict.evidence = e.what();
    return out;
  } catch (const Error& e) {
    out.verdict.outcome = Outcome::JavaCompileFail;
    out.verdict.evidence = e.what();
    out.verdict.category = classify(out.verdict, "", "", test.id);
    return out;
  }

  out.unit = unit;
  try {
    write_unit(*unit, workdir);
  } catch (const Error&) {
    // artifact only; verification writes its own copy
  }
  out.verdict = verify_translation(source, *unit, toolchain, workdir, test.id,
                                   &baseline.stdout_bytes);
  return out;
}

ResultMatrix run_matrix(const std::vector<BackendSpec>& backends,
                        const std::vector<TestCase>& corpus,
                        const RunConfig& config) {
  if (backends.empty())
    fail(ErrorKind::Config, "run_matrix needs at least one backend");
  ToolchainStatus status = probe_toolchain(config.toolchain);
  if (!status.c_side())
    fail(ErrorKind::Infra,
         "C compiler '" + config.toolchain.c_compiler + "' not found");
  if (!status.java_side())
    fail(ErrorKind::Infra, "Java toolchain ('" + config.toolchain.java_compiler +
                               "', '" + config.toolchain.java_runtime +
                               "') not found");

  ResultMatrix matrix;
  matrix.timestamp = utc_timestamp();
  matrix.c_compiler_version = status.c_version;
  matrix.java_runtime_version = status.java_version;
  {
    std::ostringstream note;
    for (const auto& b : backends) {
      if (b.kind != BackendKind::RemoteModel) continue;
      note << b.name << ": temperature=" << b.gen_params.temperature
           << " seed=" << b.gen_params.seed
           << " max_tokens=" << b.gen_params.max_tokens << "; ";
    }
    matrix.gen_params_note = note.str();
  }
  for (const auto& b : backends) matrix.backends.push_back(b.name);
  for (const auto& t : corpus) matrix.tests.push_back(t.id);

  BaselineCache cache(config.output_dir + "/c_baseline_cache");
  std::string cache_workdir = config.output_dir + "/c_baseline_cache/work";

  matrix.cells.resize(backends.size() * corpus.size());
  for (const auto& backend : backends) {
    size_t backend_index = &backend - backends.data();
    std::atomic<size_t> next{0};
    size_t budget = std::min<size_t>(
        std::max(1, config.parallelism), corpus.size());
    // requests to one remote backend serialize anyway; keep one worker then
    if (backend.kind == BackendKind::RemoteModel) budget = 1;

    auto worker = [&]() {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= corpus.size()) return;
        const TestCase& test = corpus[i];
        std::string workdir =
            config.output_dir + "/" + backend.name + "/" + test.id;
        std::filesystem::create_directories(workdir);
        ResultCell cell;
        cell.backend = backend.name;
        cell.test = test.id;
        try {
          CellOutcome outcome =
              run_cell(backend, test, config.toolchain, cache, workdir);
          cell.verdict = outcome.verdict;
        } catch (const std::exception& e) {
          cell.verdict.outcome = Outcome::InfraError;
          cell.verdict.evidence = e.what();
        }
        matrix.cells[backend_index * corpus.size() + i] = std::move(cell);
      }
    };
    std::vector<std::thread> pool;
    for (size_t w = 0; w < budget; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return matrix;
}

std::string report(const ResultMatrix& matrix, ReportFormat format) {
  if (matrix.backends.empty())
    fail(ErrorKind::Config, "cannot report on an empty backend list");

  if (format == ReportFormat::Csv) {
    std::ostringstream out;
    out << "backend,test,outcome,category,duration_s\n";
    for (const auto& c : matrix.cells) {
      out << c.backend << "," << c.test << "," << outcome_name(c.verdict.outcome)
          << ","
          << (c.verdict.category ? failure_category_name(*c.verdict.category)
                                 : "")
          << "," << c.verdict.duration_s << "\n";
    }
    return out.str();
  }

  if (format == ReportFormat::Json) {
    json j;
    j["schema_version"] = 1;
    j["metadata"] = {
        {"timestamp", matrix.timestamp},
        {"c_compiler", matrix.c_compiler_version},
        {"java_runtime", matrix.java_runtime_version},
        {"gen_params", matrix.gen_params_note},
    };
    j["backends"] = matrix.backends;
    j["tests"] = matrix.tests;
    json cells = json::array();
    for (const auto& c : matrix.cells) {
      json cell = {
          {"backend", c.backend},
          {"test", c.test},
          {"outcome", outcome_name(c.verdict.outcome)},
          {"evidence", c.verdict.evidence},
          {"duration_s", c.verdict.duration_s},
      };
      if (c.verdict.category)
        cell["category"] = failure_category_name(*c.verdict.category);
      else
        cell["category"] = nullptr;
      if (c.verdict.divergence_offset >= 0)
        cell["divergence_offset"] = c.verdict.divergence_offset;
      cells.push_back(std::move(cell));
    }
    j["cells"] = std::move(cells);
    json totals;
    for (const auto& b : matrix.backends) {
      int passes = matrix.total_passes(b);
      totals[b] = {{"passes", passes}, {"tier", tier(passes)}};
    }
    j["totals"] = std::move(totals);
    return j.dump(2) + "\n";
  }

  // markdown
  std::ostringstream out;
  out << "# Translation results\n\n";
  out << "| Backend | Total |";
  for (const auto& t : matrix.tests) out << " " << t << " |";
  out << "\n|---|---|";
  for (size_t i = 0; i < matrix.tests.size(); ++i) out << "---|";
  out << "\n";
  for (const auto& b : matrix.backends) {
    out << "| " << b << " | " << matrix.total_passes(b) << " |";
    for (const auto& t : matrix.tests) {
      const ResultCell* c = matrix.cell(b, t);
      out << " " << (c && c->verdict.pass() ? "P" : "F") << " |";
    }
    out << "\n";
  }
  out << "\n## Backend tiers\n\n| Backend | Passes | Tier |\n|---|---|---|\n";
  for (const auto& b : matrix.backends) {
    int passes = matrix.total_passes(b);
    out << "| " << b << " | " << passes << "/" << matrix.tests.size() << " | "
        << tier(passes) << " |\n";
  }
  out << "\n## Per-test results\n\n| Test | Passes | Pass rate |\n|---|---|---|\n";
  for (const auto& t : matrix.tests) {
    int passes = 0;
    for (const auto& b : matrix.backends) {
      const ResultCell* c = matrix.cell(b, t);
      if (c && c->verdict.pass()) ++passes;
    }
    out << "| " << t << " | " << passes << " | "
        << pass_rate_percent(passes, static_cast<int>(matrix.backends.size()))
        << "% |\n";
  }
  return out.str();
}

ResultMatrix matrix_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    fail(ErrorKind::Config, std::string("matrix json is malformed: ") + e.what());
  }
  ResultMatrix m;
  try {
    m.backends = j.at("backends").get<std::vector<std::string>>();
    m.tests = j.at("tests").get<std::vector<std::string>>();
    const json& meta = j.at("metadata");
    m.timestamp = meta.value("timestamp", "");
    m.c_compiler_version = meta.value("c_compiler", "");
    m.java_runtime_version = meta.value("java_runtime", "");
    m.gen_params_note = meta.value("gen_params", "");
    for (const auto& cell : j.at("cells")) {
      ResultCell c;
      c.backend = cell.at("backend").get<std::string>();
      c.test = cell.at("test").get<std::string>();
      auto outcome = outcome_from_name(cell.at("outcome").get<std::string>());
      if (!outcome)
        fail(ErrorKind::Config,
             "unknown outcome '" + cell.at("outcome").get<std::string>() + "'");
      c.verdict.outcome = *outcome;
      if (cell.contains("category") && !cell["category"].is_null()) {
        auto cat =
            failure_category_from_name(cell["category"].get<std::string>());
        if (!cat) fail(ErrorKind::Config, "unknown failure category");
        c.verdict.category = *cat;
      }
      c.verdict.evidence = cell.value("evidence", "");
      c.verdict.duration_s = cell.value("duration_s", 0.0);
      if (cell.contains("divergence_offset"))
        c.verdict.divergence_offset = cell["divergence_offset"].get<long long>();
      m.cells.push_back(std::move(c));
    }
  } catch (const json::exception& e) {
    fail(ErrorKind::Config, std::string("matrix json is incomplete: ") + e.what());
  }
  return m;
}

}  // namespace c2j
