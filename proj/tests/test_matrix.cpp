#include "doctest.h"

#include <filesystem>
#include <set>

#include "c2j/config.hpp"
#include "c2j/matrix.hpp"

using namespace c2j;

#include "reference_grid.hpp"

namespace {

c2j::ResultMatrix fixture_matrix(const std::vector<std::string>& subset = {}) {
  return fixture::grid_as_matrix(subset);
}

int fixture_passes(const ResultMatrix& m, const std::string& test) {
  int n = 0;
  for (const auto& b : m.backends) {
    const ResultCell* c = m.cell(b, test);
    if (c && c->verdict.pass()) ++n;
  }
  return n;
}

}  // namespace

TEST_SUITE("matrix") {

TEST_CASE("fixture totals reproduce the reference per-backend counts") {
  ResultMatrix m = fixture_matrix();
  CHECK(m.total_passes("codeqwen") == 11);
  CHECK(m.total_passes("mistral-nemo") == 8);
  CHECK(m.total_passes("mistral") == 6);
  CHECK(m.total_passes("deepseek-coder-v2") == 13);
  CHECK(m.total_passes("phi4") == 11);
  CHECK(m.total_passes("codegemma:7b") == 0);
  CHECK(m.total_passes("starcoder2:15b") == 0);
}

TEST_CASE("tier thresholds: 0 is tier 3, up to 10 is tier 2, 11 up is tier 1") {
  CHECK(tier(0) == 3);
  CHECK(tier(1) == 2);
  CHECK(tier(8) == 2);
  CHECK(tier(10) == 2);
  CHECK(tier(11) == 1);
  CHECK(tier(13) == 1);
  CHECK(tier(20) == 1);
}

TEST_CASE("tier is monotone in the pass count") {
  for (int a = 0; a < 20; ++a)
    CHECK(tier(a + 1) <= tier(a));
}

TEST_CASE("fixture tiers land as expected") {
  ResultMatrix m = fixture_matrix();
  CHECK(tier(m.total_passes("codeqwen")) == 1);
  CHECK(tier(m.total_passes("mistral-nemo")) == 2);
  CHECK(tier(m.total_passes("mistral")) == 2);
  CHECK(tier(m.total_passes("deepseek-coder-v2")) == 1);
  CHECK(tier(m.total_passes("phi4")) == 1);
  CHECK(tier(m.total_passes("yi-coder:9b")) == 3);
}

TEST_CASE("percent rendering over nineteen backends hits the reference bands") {
  CHECK(pass_rate_percent(0, 19) == 0);
  CHECK(pass_rate_percent(1, 19) == 5);
  CHECK(pass_rate_percent(2, 19) == 11);
  CHECK(pass_rate_percent(3, 19) == 16);
  CHECK(pass_rate_percent(4, 19) == 21);
  CHECK(pass_rate_percent(5, 19) == 26);
}

TEST_CASE("per-test rates over the full roster stay inside the bands") {
  ResultMatrix m = fixture_matrix();
  REQUIRE(m.backends.size() == 19);
  std::set<int> seen;
  for (const auto& t : m.tests) {
    int rate = pass_rate_percent(fixture_passes(m, t),
                                 static_cast<int>(m.backends.size()));
    seen.insert(rate);
  }
  CHECK(seen == std::set<int>{0, 5, 11, 16, 21, 26});
  // anchors pinned by the reference evaluation
  CHECK(fixture_passes(m, "T3") == 1);
  CHECK(fixture_passes(m, "T8") == 1);
  CHECK(fixture_passes(m, "T6") == 2);
  CHECK(fixture_passes(m, "T15") == 2);
  CHECK(fixture_passes(m, "T5") == 3);
  CHECK(fixture_passes(m, "T14") == 4);
  CHECK(fixture_passes(m, "T1") == 5);
  CHECK(fixture_passes(m, "T17") == 5);
  CHECK(fixture_passes(m, "T20") == 5);
  for (const char* t : {"T7", "T10", "T12", "T19"})
    CHECK(fixture_passes(m, t) == 0);
}

TEST_CASE("markdown report reproduces the grid and the per-test table") {
  ResultMatrix m = fixture_matrix(
      {"codeqwen", "mistral-nemo", "deepseek-coder-v2"});
  std::string md = report(m, ReportFormat::Markdown);
  CHECK(md.find("| Backend | Total |") != std::string::npos);
  CHECK(md.find("| codeqwen | 11 |") != std::string::npos);
  CHECK(md.find("| deepseek-coder-v2 | 13 |") != std::string::npos);
  CHECK(md.find("## Backend tiers") != std::string::npos);
  CHECK(md.find("| codeqwen | 11/20 | 1 |") != std::string::npos);
  CHECK(md.find("## Per-test results") != std::string::npos);
  CHECK(md.find("| T3 | 1 | 33% |") != std::string::npos);  // 1 of 3 backends
}

TEST_CASE("csv has the documented columns in backend-major order") {
  ResultMatrix m = fixture_matrix({"codeqwen"});
  std::string csv = report(m, ReportFormat::Csv);
  CHECK(csv.find("backend,test,outcome,category,duration_s\n") == 0);
  CHECK(csv.find("codeqwen,T1,Pass,,") != std::string::npos);
  CHECK(csv.find("codeqwen,T3,OutputMismatch,semantic_logic,") !=
        std::string::npos);
}

TEST_CASE("json round-trips losslessly") {
  ResultMatrix m = fixture_matrix({"codeqwen", "phi4"});
  std::string first = report(m, ReportFormat::Json);
  ResultMatrix parsed = matrix_from_json(first);
  std::string second = report(parsed, ReportFormat::Json);
  CHECK(first == second);
  CHECK(parsed.total_passes("codeqwen") == 11);
  CHECK(parsed.total_passes("phi4") == 11);
}

TEST_CASE("reporting an empty backend list is rejected") {
  ResultMatrix empty;
  CHECK_THROWS_AS(report(empty, ReportFormat::Markdown), Error);
}

TEST_CASE("an empty-text mock fails every cell as JavaCompileFail") {
  ToolchainConfig tc = ToolchainConfig::with_env_overrides({});
  if (!probe_toolchain(tc).c_side()) return;
  BackendSpec empty_mock;
  empty_mock.name = "empty";
  empty_mock.kind = BackendKind::Mock;
  empty_mock.mock_default_reply = "";

  auto dir = std::filesystem::temp_directory_path() / "c2j-empty-mock";
  std::filesystem::create_directories(dir);
  BaselineCache cache(dir.string());
  auto corpus = load_corpus();
  for (const auto& id : {"T1", "T12", "T16"}) {
    const TestCase& tc_case = corpus_case(corpus, id);
    CellOutcome out = run_cell(empty_mock, tc_case, tc, cache, dir.string());
    CHECK(out.verdict.outcome == Outcome::JavaCompileFail);
    CHECK(out.verdict.category.has_value());
    REQUIRE_FALSE(out.reports.empty());
    CHECK(out.reports.front().second.failed());
  }
}

TEST_CASE("run_matrix rejects an empty backend roster") {
  RunConfig cfg = RunConfig::defaults();
  cfg.backends.clear();
  CHECK_THROWS_AS(run_matrix({}, load_corpus(), cfg), Error);
}

TEST_CASE("malformed matrix json is a config error") {
  CHECK_THROWS_AS(matrix_from_json("not json"), Error);
  CHECK_THROWS_AS(matrix_from_json("{\"backends\": []}"), Error);
  CHECK_THROWS_AS(
      matrix_from_json(
          R"({"backends":["b"],"tests":["T1"],"metadata":{},
              "cells":[{"backend":"b","test":"T1","outcome":"NotAThing"}]})"),
      Error);
}

}  // TEST_SUITE
