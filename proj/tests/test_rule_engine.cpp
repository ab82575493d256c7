#include "doctest.h"

#include <set>

#include "c2j/assemble.hpp"
#include "c2j/corpus.hpp"
#include "c2j/decompose.hpp"
#include "c2j/rule_engine.hpp"

using namespace c2j;

namespace {

struct Translated {
  AnalyzedFile analyzed;
  TranslationContext ctx;
  TranslatedUnit unit;
};

std::shared_ptr<Translated> translate_text(const std::string& text,
                                           const std::string& path = "t.c") {
  auto out = std::make_shared<Translated>();
  out->analyzed = analyze(CSourceFile(path, text));
  out->ctx = TranslationContext::build(out->analyzed.parts);
  out->unit = translate_parts(out->analyzed.parts, out->ctx);
  return out;
}

std::string one_global(const std::string& text) {
  auto t = translate_text(text);
  REQUIRE(t->unit.fields.size() == 1);
  std::string s = t->unit.fields[0].text;
  if (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

// address-of in prefix position, ignoring && and infix masking like "& 0xFF"
bool has_prefix_address_of(const std::string& text) {
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '&') continue;
    if (i + 1 < text.size() && text[i + 1] == '&') {
      ++i;
      continue;
    }
    if (i > 0 && text[i - 1] == '&') continue;
    // infix use has whitespace on both sides
    bool space_before = i > 0 && text[i - 1] == ' ';
    bool space_after = i + 1 < text.size() && text[i + 1] == ' ';
    if (space_before && space_after) continue;
    return true;
  }
  return false;
}

bool contains_token(const std::string& text, const std::string& word) {
  size_t pos = 0;
  auto is_ident = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  };
  while ((pos = text.find(word, pos)) != std::string::npos) {
    bool left_ok = pos == 0 || !is_ident(text[pos - 1]);
    bool right_ok =
        pos + word.size() >= text.size() || !is_ident(text[pos + word.size()]);
    if (left_ok && right_ok) return true;
    pos += word.size();
  }
  return false;
}

}  // namespace

TEST_SUITE("rule_engine") {

TEST_CASE("globals become public static fields") {
  CHECK(one_global("int counter = 0;") == "public static int counter = 0;");
  CHECK(one_global("const float PI = 3.14f;") ==
        "public static final float PI = 3.14f;");
  CHECK(one_global("unsigned int mask = 0xFFFFFFFF;") ==
        "public static long mask = 0xFFFFFFFFL;");
  CHECK(one_global("char *name = \"boot\";") ==
        "public static String name = \"boot\";");
  CHECK(one_global("unsigned char level = 7;") ==
        "public static int level = 7;");
  CHECK(one_global("int values[3] = {11, 22, 33};") ==
        "public static int[] values = {11, 22, 33};");
}

TEST_CASE("struct translation carries all three constructors") {
  auto t = translate_text("struct Point { int x; int y; };");
  REQUIRE(t->unit.classes.size() == 1);
  const std::string& text = t->unit.classes[0].text;
  CHECK(text.find("public static class Point {") == 0);
  CHECK(text.find("public int x;") != std::string::npos);
  CHECK(text.find("public Point() {") != std::string::npos);
  CHECK(text.find("public Point(Point other) {") != std::string::npos);
  CHECK(text.find("public Point(int x, int y) {") != std::string::npos);
}

TEST_CASE("char array fields keep their length; char pointers become String") {
  auto t = translate_text(
      "struct Person { char name[50]; char *alias; int age; };");
  const std::string& text = t->unit.classes[0].text;
  CHECK(text.find("public char[] name = new char[50];") != std::string::npos);
  CHECK(text.find("public String alias;") != std::string::npos);
  CHECK(text.find("this.name = other.name.clone();") != std::string::npos);
}

TEST_CASE("unions translate to an empty snippet") {
  auto t = translate_text("union Converter { float f; int i; };");
  REQUIRE(t->unit.classes.size() == 1);
  CHECK(t->unit.classes[0].text.empty());
  CHECK(t->unit.classes[0].name == "Converter");
}

TEST_CASE("bitfield structs expose masked getters and setters") {
  auto t = translate_text("struct Flags { int a : 1; int b : 3; };");
  const std::string& text = t->unit.classes[0].text;
  CHECK(text.find("private int bits;") != std::string::npos);
  CHECK(text.find("public int get_a() {") != std::string::npos);
  CHECK(text.find("(this.bits >> 0) & 0x1") != std::string::npos);
  CHECK(text.find("public void set_b(int value) {") != std::string::npos);
  CHECK(text.find("(value & 0x7) << 1") != std::string::npos);
  // sign extension for the signed 3-bit field
  CHECK(text.find("value |= ~0x7;") != std::string::npos);
}

TEST_CASE("enums become a constant table with C values") {
  auto t = translate_text("enum State { STOPPED, RUNNING = 4, DONE };");
  const std::string& text = t->unit.classes[0].text;
  CHECK(text.find("public static final int STOPPED = 0;") != std::string::npos);
  CHECK(text.find("public static final int RUNNING = 4;") != std::string::npos);
  CHECK(text.find("public static final int DONE = 5;") != std::string::npos);
}

TEST_CASE("T1 main uses an index variable and array reference") {
  auto corpus = load_corpus();
  auto t = translate_text(corpus_case(corpus, "T1").c_source, "test_1.c");
  REQUIRE(t->unit.methods.size() == 1);
  const std::string& text = t->unit.methods[0].text;
  CHECK(text.find("int p_index = 0;") != std::string::npos);
  CHECK(text.find("int[] p_array = arr;") != std::string::npos);
  CHECK(text.find("p_array[p_index + 2]") != std::string::npos);
  CHECK(text.find("p_index++") != std::string::npos);
}

TEST_CASE("macro inlining preserves each side effect exactly once") {
  auto t = translate_text(
      "#define MAX(a, b) ((a) > (b) ? (a) : (b))\n"
      "int main() {\n"
      "    int i = 5;\n"
      "    int j = 8;\n"
      "    int k = MAX(i++, j++);\n"
      "    return k;\n"
      "}\n");
  const std::string& text = t->unit.methods[0].text;
  CHECK(text.find("int k = ((i++) > (j++) ? (i++) : (j++));") !=
        std::string::npos);
}

TEST_CASE("main always gets the canonical Java signature") {
  auto t = translate_text("int main() { return 0; }");
  CHECK(t->unit.methods[0].text.find(
            "public static void main(String[] args) {") == 0);
}

TEST_CASE("unsigned wraparound is analytically forced to zero") {
  auto t = translate_text(
      "int main() {\n"
      "    unsigned int x = 4294967295u;\n"
      "    x = x + 1;\n"
      "    return 0;\n"
      "}\n");
  const std::string& text = t->unit.methods[0].text;
  CHECK(text.find("long x = 4294967295L;") != std::string::npos);
  CHECK(text.find("x = (x + 1) & 0xFFFFFFFFL;") != std::string::npos);
}

TEST_CASE("output purity: no goto, union, unsigned or prefix address-of") {
  for (const auto& tc : load_corpus()) {
    CAPTURE(tc.id);
    auto t = translate_text(tc.c_source, tc.file_stem() + ".c");
    auto scan = [&](const std::vector<JavaSnippet>& snippets) {
      for (const auto& s : snippets) {
        CHECK_FALSE(contains_token(s.text, "goto"));
        CHECK_FALSE(contains_token(s.text, "union"));
        CHECK_FALSE(contains_token(s.text, "unsigned"));
        CHECK_FALSE(has_prefix_address_of(s.text));
      }
    };
    scan(t->unit.fields);
    scan(t->unit.classes);
    scan(t->unit.methods);
  }
}

TEST_CASE("string literals survive verbatim modulo specifier remaps") {
  for (const auto& tc : load_corpus()) {
    CAPTURE(tc.id);
    auto t = translate_text(tc.c_source, tc.file_stem() + ".c");
    std::string all;
    for (const auto& s : t->unit.methods) all += s.text;
    // collect string literals from the C source
    const std::string& c = tc.c_source;
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i] != '"') continue;
      size_t b = i++;
      while (i < c.size() && c[i] != '"') {
        if (c[i] == '\\') ++i;
        ++i;
      }
      std::string lit = c.substr(b, i - b + 1);
      // apply the documented remap to form the expected Java spelling
      std::string expected;
      for (size_t k = 0; k < lit.size(); ++k) {
        if (lit[k] == '%' && k + 1 < lit.size() && lit[k + 1] == 'u') {
          expected += "%d";
          ++k;
        } else if (lit[k] == '%' && k + 2 < lit.size() && lit[k + 1] == 'z' &&
                   lit[k + 2] == 'u') {
          expected += "%d";
          k += 2;
        } else {
          expected.push_back(lit[k]);
        }
      }
      CHECK_MESSAGE(all.find(expected) != std::string::npos, tc.id,
                    ": missing literal ", expected);
    }
  }
}

TEST_CASE("translation is deterministic") {
  for (const auto& tc : load_corpus()) {
    auto a = translate_text(tc.c_source, tc.file_stem() + ".c");
    auto b = translate_text(tc.c_source, tc.file_stem() + ".c");
    REQUIRE(a->unit.methods.size() == b->unit.methods.size());
    for (size_t i = 0; i < a->unit.methods.size(); ++i)
      CHECK(a->unit.methods[i].text == b->unit.methods[i].text);
    for (size_t i = 0; i < a->unit.classes.size(); ++i)
      CHECK(a->unit.classes[i].text == b->unit.classes[i].text);
    for (size_t i = 0; i < a->unit.fields.size(); ++i)
      CHECK(a->unit.fields[i].text == b->unit.fields[i].text);
  }
}

TEST_CASE("unresolved symbols fail with the symbol name") {
  try {
    translate_text("int main() { return mystery + 1; }");
    FAIL("expected an unresolved-symbol error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Unresolved);
    CHECK(std::string(e.what()).find("mystery") != std::string::npos);
  }
}

TEST_CASE("enum constants qualify through their table") {
  auto t = translate_text(
      "enum State { STOPPED, RUNNING };\n"
      "int main() {\n"
      "    enum State s = STOPPED;\n"
      "    s = s + 1;\n"
      "    if (s == RUNNING) {\n"
      "        printf(\"running\\n\");\n"
      "    }\n"
      "    return 0;\n"
      "}\n");
  const std::string& text = t->unit.methods[0].text;
  CHECK(text.find("int s = State.STOPPED;") != std::string::npos);
  CHECK(text.find("s = s + 1;") != std::string::npos);
  CHECK(text.find("s == State.RUNNING") != std::string::npos);
}

TEST_CASE("a trailing main return still resolves and keeps call effects") {
  // unresolved names inside a discarded return value still fail
  CHECK_THROWS_AS(translate_text("int main() { return ghost + 1; }"), Error);
  // calls in the discarded value still run
  auto t = translate_text(
      "int report(void) { printf(\"tail\\n\"); return 0; }\n"
      "int main() { return report(); }\n");
  CHECK(t->unit.methods[1].text.find("report();") != std::string::npos);
}

TEST_CASE("sizeof uses the frozen platform model") {
  auto t = translate_text(
      "struct Packet { int id; float ratio; };\n"
      "int main() {\n"
      "    int a = sizeof(int);\n"
      "    int b = sizeof(struct Packet);\n"
      "    int c = sizeof(int[10]);\n"
      "    return a + b + c;\n"
      "}\n");
  const std::string& text = t->unit.methods[0].text;
  CHECK(text.find("int a = 4;") != std::string::npos);
  CHECK(text.find("int b = 8;") != std::string::npos);
  CHECK(text.find("int c = 40;") != std::string::npos);
}

TEST_CASE("platform sizeof covers padding and bitfield packing") {
  auto t = translate_text(
      "struct Mixed { char c; int i; };\n"
      "struct Bits { int a : 1; int b : 3; int c : 4; };\n"
      "struct Wide { char c; double d; };\n");
  TranslationContext& ctx = t->ctx;
  CType mixed;
  mixed.kind = TypeKind::Record;
  mixed.name = "Mixed";
  CHECK(platform_sizeof(mixed, ctx) == 8);
  CType bits = mixed;
  bits.name = "Bits";
  CHECK(platform_sizeof(bits, ctx) == 4);
  CType wide = mixed;
  wide.name = "Wide";
  CHECK(platform_sizeof(wide, ctx) == 16);
  CHECK(platform_sizeof(CType::basic(TypeKind::Long), ctx) == 8);
  CHECK(platform_sizeof(CType::pointer_to(CType::basic(TypeKind::Int)), ctx) ==
        8);
}

TEST_CASE("goto outside the recognized patterns is rejected") {
  CHECK_THROWS_AS(translate_text("int main() {\n"
                                 "    goto nowhere;\n"
                                 "    return 0;\n"
                                 "}\n"),
                  Error);
  // label both before and after its gotos
  CHECK_THROWS_AS(translate_text("int main() {\n"
                                 "    int x = 0;\n"
                                 "top:\n"
                                 "    x++;\n"
                                 "    if (x > 2) { goto done; }\n"
                                 "    goto top;\n"
                                 "done:\n"
                                 "    return x;\n"
                                 "}\n"),
                  Error);
}

TEST_CASE("multi-statement macros as unbraced control bodies are rejected") {
  // C binds only the first expanded statement to the if; refusing beats
  // silently re-scoping the rest
  std::string code =
      "#define LOG2(a, b) \\\n"
      "    printf(\"%d\\n\", a); \\\n"
      "    printf(\"%d\\n\", b)\n"
      "int main() {\n"
      "    int x = 1;\n"
      "    if (x)\n"
      "        LOG2(1, 2);\n"
      "    return 0;\n"
      "}\n";
  CHECK_THROWS_AS(translate_text(code), Error);

  // braced bodies keep the full expansion inside, matching C
  std::string braced =
      "#define LOG2(a, b) \\\n"
      "    printf(\"%d\\n\", a); \\\n"
      "    printf(\"%d\\n\", b)\n"
      "int main() {\n"
      "    int x = 1;\n"
      "    if (x) {\n"
      "        LOG2(1, 2);\n"
      "    }\n"
      "    return 0;\n"
      "}\n";
  auto t = translate_text(braced);
  const std::string& text = t->unit.methods[0].text;
  size_t open = text.find("if (x != 0) {");
  size_t first = text.find("System.out.printf(\"%d\\n\", (1));");
  size_t second = text.find("System.out.printf(\"%d\\n\", (2));");
  size_t close = text.find("}", second);
  REQUIRE(open != std::string::npos);
  CHECK(open < first);
  CHECK(first < second);
  CHECK(second < close);
}

TEST_CASE("unsigned arrays are rejected rather than silently unmasked") {
  CHECK_THROWS_AS(
      translate_text("int main() {\n"
                     "    unsigned int arr[3] = {1, 2, 3};\n"
                     "    arr[0] = arr[0] + 1;\n"
                     "    return 0;\n"
                     "}\n"),
      Error);
}

TEST_CASE("struct assignment copies by value") {
  auto t = translate_text(
      "struct P { int x; };\n"
      "int main() {\n"
      "    struct P a;\n"
      "    a.x = 1;\n"
      "    struct P b = a;\n"
      "    b.x = 2;\n"
      "    return a.x;\n"
      "}\n");
  CHECK(t->unit.methods[0].text.find("P b = new P(a);") != std::string::npos);
}

}  // TEST_SUITE
