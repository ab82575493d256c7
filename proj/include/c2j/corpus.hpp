#pragma once

#include <string>
#include <vector>

#include "c2j/rules.hpp"
#include "c2j/source.hpp"

namespace c2j {

// One case of the 20-file idiom suite. Sources are embedded; every case
// exercises exactly one C-to-Java idiom and stays under 40 lines.
struct TestCase {
  std::string id;     // T1..T20
  std::string title;
  RuleId expected_rule;  // the idiom's designated rule id
  std::string description;
  std::string c_source;

  std::string file_stem() const;  // "test_1"
  CSourceFile source() const;
};

// The builtin corpus, validated: 20 unique ids, every file parses, and
// applicable_rules reports each case's designated rule.
std::vector<TestCase> load_corpus();

// Corpus from a directory of test_1.c .. test_20.c; metadata comes from the
// builtin table. A missing file is an integrity error naming the id.
std::vector<TestCase> load_corpus_from_dir(const std::string& dir);

const TestCase& corpus_case(const std::vector<TestCase>& corpus,
                            const std::string& id);

}  // namespace c2j
