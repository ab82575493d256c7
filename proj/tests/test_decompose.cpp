#include "doctest.h"

#include <algorithm>
#include <cctype>

#include "c2j/corpus.hpp"
#include "c2j/decompose.hpp"

using namespace c2j;

namespace {

// Strips comments and all whitespace so reconstruction can be compared
// structurally. #include lines vanish from both sides.
std::string normalize(const std::string& text) {
  std::string out;
  size_t i = 0;
  bool line_start = true;
  while (i < text.size()) {
    char c = text[i];
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '*') {
      i += 2;
      while (i + 1 < text.size() && !(text[i] == '*' && text[i + 1] == '/')) ++i;
      i += 2;
      continue;
    }
    if (line_start && c == '#') {
      // keep only #define lines; they reconstruct from harvested macros
      size_t j = i;
      while (j < text.size() && text[j] != '\n') {
        if (text[j] == '\\' && j + 1 < text.size() && text[j + 1] == '\n') j += 2;
        else ++j;
      }
      std::string line = text.substr(i, j - i);
      if (line.rfind("#define", 0) != 0) {
        i = j;
        continue;
      }
    }
    if (c == '\n') line_start = true;
    else if (!std::isspace(static_cast<unsigned char>(c))) line_start = false;
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    ++i;
  }
  return out;
}

std::string reconstruct(const AnalyzedFile& analyzed) {
  struct Piece {
    size_t begin;
    std::string text;
  };
  std::vector<Piece> pieces;
  const CDecomposition& parts = analyzed.parts;
  for (const auto& m : parts.macros) pieces.push_back({m.span.begin, m.verbatim});
  for (const auto& g : parts.globals) pieces.push_back({g.decl->span.begin, g.verbatim});
  for (const auto& r : parts.records) pieces.push_back({r.decl->span.begin, r.verbatim});
  for (const auto& f : parts.functions) pieces.push_back({f.decl->span.begin, f.verbatim});
  for (const auto& t : parts.typedefs) pieces.push_back({t.decl.span.begin, t.verbatim});
  // prototypes carry only text; recover their positions by search
  for (const auto& p : parts.prototypes)
    pieces.push_back({analyzed.source.text().find(p), p});
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& a, const Piece& b) { return a.begin < b.begin; });
  std::string out;
  for (const auto& p : pieces) out += p.text;
  return out;
}

}  // namespace

TEST_SUITE("decompose") {

TEST_CASE("one global, one record, two functions, in source order") {
  CSourceFile src("t.c",
                  "int counter = 0;\n"
                  "struct Point { int x; int y; };\n"
                  "void move(struct Point *p) { p->x++; }\n"
                  "int main() { return 0; }\n");
  AnalyzedFile analyzed = analyze(src);
  const CDecomposition& parts = analyzed.parts;
  CHECK(parts.globals.size() == 1);
  CHECK(parts.records.size() == 1);
  REQUIRE(parts.functions.size() == 2);
  CHECK(parts.functions[0].name == "move");
  CHECK(parts.functions[1].name == "main");
  CHECK(parts.globals[0].verbatim == "int counter = 0;");
}

TEST_CASE("nested records list inner before outer by source position") {
  auto corpus = load_corpus();
  AnalyzedFile analyzed = analyze(corpus_case(corpus, "T19").source());
  REQUIRE(analyzed.parts.records.size() == 2);
  CHECK(analyzed.parts.records[0].decl->name == "Inner");
  CHECK(analyzed.parts.records[1].decl->name == "Outer");
  CHECK(analyzed.parts.records[0].decl->span.begin <
        analyzed.parts.records[1].decl->span.begin);
}

TEST_CASE("a file of only prototypes has no functions") {
  CSourceFile src("t.c", "int f(int x);\nvoid g(void);\n");
  AnalyzedFile analyzed = analyze(src);
  CHECK(analyzed.parts.functions.empty());
  REQUIRE(analyzed.parts.prototypes.size() == 2);
  CHECK(analyzed.parts.prototypes[0] == "int f(int x);");
}

TEST_CASE("verbatim texts are exact substrings of the source") {
  for (const auto& tc : load_corpus()) {
    CAPTURE(tc.id);
    AnalyzedFile analyzed = analyze(tc.source());
    const std::string& text = analyzed.source.text();
    for (const auto& g : analyzed.parts.globals)
      CHECK(text.find(g.verbatim) != std::string::npos);
    for (const auto& r : analyzed.parts.records)
      CHECK(text.find(r.verbatim) != std::string::npos);
    for (const auto& f : analyzed.parts.functions)
      CHECK(text.find(f.verbatim) != std::string::npos);
  }
}

TEST_CASE("reconstruction: no declaration is lost or duplicated") {
  for (const auto& tc : load_corpus()) {
    CAPTURE(tc.id);
    AnalyzedFile analyzed = analyze(tc.source());
    CHECK(normalize(reconstruct(analyzed)) == normalize(tc.c_source));
  }
}

TEST_CASE("spans of sibling entries are disjoint") {
  for (const auto& tc : load_corpus()) {
    CAPTURE(tc.id);
    AnalyzedFile analyzed = analyze(tc.source());
    std::vector<std::pair<size_t, size_t>> spans;
    for (const auto& m : analyzed.parts.macros)
      spans.push_back({m.span.begin, m.span.end});
    for (const auto& g : analyzed.parts.globals)
      spans.push_back({g.decl->span.begin, g.decl->span.end});
    for (const auto& r : analyzed.parts.records)
      spans.push_back({r.decl->span.begin, r.decl->span.end});
    for (const auto& f : analyzed.parts.functions)
      spans.push_back({f.decl->span.begin, f.decl->span.end});
    std::sort(spans.begin(), spans.end());
    for (size_t i = 1; i < spans.size(); ++i)
      CHECK(spans[i - 1].second <= spans[i].first);
  }
}

TEST_CASE("decomposing twice yields identical structures") {
  auto corpus = load_corpus();
  const TestCase& t6 = corpus_case(corpus, "T6");
  AnalyzedFile a = analyze(t6.source());
  AnalyzedFile b = analyze(t6.source());
  REQUIRE(a.parts.functions.size() == b.parts.functions.size());
  for (size_t i = 0; i < a.parts.functions.size(); ++i) {
    CHECK(a.parts.functions[i].name == b.parts.functions[i].name);
    CHECK(a.parts.functions[i].verbatim == b.parts.functions[i].verbatim);
  }
  CHECK(a.parts.macros.size() == b.parts.macros.size());
}

TEST_CASE("duplicate function names are rejected") {
  CSourceFile src("t.c", "int f() { return 1; }\nint f() { return 2; }\n");
  CHECK_THROWS_AS(analyze(src), Error);
}

}  // TEST_SUITE
