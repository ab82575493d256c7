#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <set>

#include "c2j/corpus.hpp"

using namespace c2j;

TEST_SUITE("corpus") {

TEST_CASE("default load yields all twenty cases in order") {
  auto corpus = load_corpus();
  REQUIRE(corpus.size() == 20);
  std::set<std::string> ids;
  for (size_t i = 0; i < corpus.size(); ++i) {
    CHECK(corpus[i].id == "T" + std::to_string(i + 1));
    ids.insert(corpus[i].id);
    CHECK_FALSE(corpus[i].c_source.empty());
    CHECK_FALSE(corpus[i].description.empty());
    CHECK(corpus[i].c_source.size() > 0);
  }
  CHECK(ids.size() == 20);
}

TEST_CASE("every file stays within the forty-line budget") {
  for (const auto& tc : load_corpus()) {
    CAPTURE(tc.id);
    int lines = 0;
    for (char c : tc.c_source)
      if (c == '\n') ++lines;
    CHECK(lines <= 40);
  }
}

TEST_CASE("file stems derive from the id") {
  auto corpus = load_corpus();
  CHECK(corpus_case(corpus, "T1").file_stem() == "test_1");
  CHECK(corpus_case(corpus, "T20").file_stem() == "test_20");
  CHECK(corpus_case(corpus, "T7").source().path() == "test_7.c");
}

TEST_CASE("designated rules match the table the suite was built around") {
  auto corpus = load_corpus();
  auto expect = [&](const char* id, RuleId rule) {
    CHECK(corpus_case(corpus, id).expected_rule == rule);
  };
  expect("T1", RuleId::Ptr);
  expect("T6", RuleId::GotoFwd);
  expect("T7", RuleId::FnPtr);
  expect("T12", RuleId::Enum);
  expect("T13", RuleId::GotoBack);
  expect("T18", RuleId::Sizeof);
}

TEST_CASE("directory corpus loads when all files exist") {
  auto dir = std::filesystem::temp_directory_path() / "c2j-corpus-ok";
  std::filesystem::create_directories(dir);
  for (const auto& tc : load_corpus()) {
    std::ofstream out(dir / (tc.file_stem() + ".c"), std::ios::binary);
    out << tc.c_source;
  }
  auto loaded = load_corpus_from_dir(dir.string());
  CHECK(loaded.size() == 20);
  CHECK(loaded[2].c_source == load_corpus()[2].c_source);
}

TEST_CASE("a deleted file is an integrity error naming the id") {
  auto dir = std::filesystem::temp_directory_path() / "c2j-corpus-hole";
  std::filesystem::create_directories(dir);
  for (const auto& tc : load_corpus()) {
    std::ofstream out(dir / (tc.file_stem() + ".c"), std::ios::binary);
    out << tc.c_source;
  }
  std::filesystem::remove(dir / "test_7.c");
  try {
    load_corpus_from_dir(dir.string());
    FAIL("expected an integrity error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Config);
    CHECK(std::string(e.what()).find("T7") != std::string::npos);
  }
}

TEST_CASE("unknown ids are rejected by the lookup helper") {
  auto corpus = load_corpus();
  CHECK_THROWS_AS(corpus_case(corpus, "T21"), Error);
}

}  // TEST_SUITE
