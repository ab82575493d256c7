#include "doctest.h"

#include "c2j/corpus.hpp"
#include "c2j/decompose.hpp"
#include "c2j/rules.hpp"

using namespace c2j;

namespace {

std::vector<std::string> rules_for(const std::string& text) {
  CSourceFile src("t.c", text);
  AnalyzedFile analyzed = analyze(src);
  TranslationContext ctx = TranslationContext::build(analyzed.parts);
  std::vector<std::string> out;
  for (RuleId id : applicable_rules(analyzed.parts, ctx))
    out.push_back(rule_name(id));
  return out;
}

bool has(const std::vector<std::string>& rules, const std::string& id) {
  for (const auto& r : rules)
    if (r == id) return true;
  return false;
}

}  // namespace

TEST_SUITE("rules") {

TEST_CASE("function with no special idioms reports no rules") {
  auto rules = rules_for(
      "int add(int a, int b) { return a + b; }\n"
      "int main() { return add(1, 2) > 0 ? 0 : 1; }\n");
  CHECK(rules.empty());
}

TEST_CASE("each corpus case reports its designated rule") {
  for (const auto& tc : load_corpus()) {
    CAPTURE(tc.id);
    AnalyzedFile analyzed = analyze(tc.source());
    TranslationContext ctx = TranslationContext::build(analyzed.parts);
    auto rules = applicable_rules(analyzed.parts, ctx);
    bool found = false;
    for (RuleId id : rules)
      if (id == tc.expected_rule) found = true;
    CHECK_MESSAGE(found, tc.id, " should report ", rule_name(tc.expected_rule));
  }
}

TEST_CASE("detector output is deterministic and registry-ordered") {
  auto corpus = load_corpus();
  const TestCase& t5 = corpus_case(corpus, "T5");
  AnalyzedFile analyzed = analyze(t5.source());
  TranslationContext ctx = TranslationContext::build(analyzed.parts);
  auto first = applicable_rules(analyzed.parts, ctx);
  auto second = applicable_rules(analyzed.parts, ctx);
  CHECK(first == second);
  // registry order is the declaration order of the rule table
  size_t last_pos = 0;
  for (RuleId id : first) {
    size_t pos = 0;
    for (size_t i = 0; i < rule_registry().size(); ++i)
      if (rule_registry()[i].id == id) pos = i;
    CHECK(pos >= last_pos);
    last_pos = pos;
  }
}

TEST_CASE("individual detectors") {
  CHECK(has(rules_for("int main() { if (1) { goto done; } return 1;\n"
                      "done:\n    return 0; }"),
            "R-goto-fwd"));
  CHECK(has(rules_for("int main() { int i = 0;\nagain:\n    i++;\n"
                      "    if (i < 3) { goto again; }\n    return 0; }"),
            "R-goto-back"));
  CHECK(has(rules_for("int main() { unsigned int x = 1; x = x + 1; return 0; }"),
            "R-unsigned"));
  CHECK(has(rules_for("void f(int *p) { }\n"
                      "int main() { int x = 1; f(&x); return 0; }"),
            "R-addr"));
  CHECK(has(rules_for("int main() { int a[3] = {1, 2, 3}; int *p = a;\n"
                      "    return *p; }"),
            "R-ptr"));
  CHECK(has(rules_for("struct P { int x; };\n"
                      "void f(struct P v) { }\n"
                      "int main() { return 0; }"),
            "R-copy"));
  CHECK(has(rules_for("#define TWICE(x) ((x) * 2)\n"
                      "int main() { return TWICE(2); }"),
            "R-macro"));
  CHECK(has(rules_for("int main() { int x = 1; if (x) { return 1; } return 0; }"),
            "R-bool"));
  CHECK(has(rules_for("int main() { int s = sizeof(int); return s; }"),
            "R-sizeof"));
  CHECK(has(rules_for("int main() { switch (1) { default: break; } return 0; }"),
            "R-switch"));
}

TEST_CASE("per-function scan separates idioms by function") {
  CSourceFile src("t.c",
                  "int plain(int a) { return a + 1; }\n"
                  "int main() { unsigned int x = 1; x = x + 1; return plain(2); }\n");
  AnalyzedFile analyzed = analyze(src);
  TranslationContext ctx = TranslationContext::build(analyzed.parts);
  auto plain_rules = applicable_rules(*analyzed.parts.functions[0].decl, ctx);
  auto main_rules = applicable_rules(*analyzed.parts.functions[1].decl, ctx);
  CHECK(plain_rules.empty());
  bool has_unsigned = false;
  for (RuleId id : main_rules)
    if (id == RuleId::Unsigned) has_unsigned = true;
  CHECK(has_unsigned);
}

}  // TEST_SUITE
