#include "c2j/corpus.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "c2j/decompose.hpp"

namespace c2j {

namespace {

struct RawCase {
  const char* id;
  const char* title;
  RuleId rule;
  const char* description;
  const char* source;
};

const RawCase kCases[] = {
    {"T1", "pointer arithmetic", RuleId::Ptr,
     "Pointer walk over an array (p++, *(p + 2)) refactored into index "
     "manipulation over an array reference.",
     R"(#include <stdio.h>

int main() {
    int arr[5] = {10, 20, 30, 40, 50};
    int *p = arr;
    printf("First: %d\n", *p);
    p++;
    printf("Second: %d\n", *p);
    printf("Offset: %d\n", *(p + 2));
    for (int i = 0; i < 5; i++) {
        printf("Element %d: %d\n", i, arr[i]);
    }
    return 0;
}
)"},
    {"T2", "struct pass by value", RuleId::Copy,
     "Struct passed by value (copied) versus by pointer (shared), simulated "
     "with a copy constructor on the callee side.",
     R"(#include <stdio.h>

struct Point {
    int x;
    int y;
};

void move_copy(struct Point p) {
    p.x += 100;
    printf("Inside copy: %d\n", p.x);
}

void move_ref(struct Point *p) {
    p->x += 100;
    printf("Inside ref: %d\n", p->x);
}

int main() {
    struct Point p1;
    p1.x = 1;
    p1.y = 2;
    move_copy(p1);
    printf("After copy: %d\n", p1.x);
    move_ref(&p1);
    printf("After ref: %d\n", p1.x);
    return 0;
}
)"},
    {"T3", "union type punning", RuleId::Union,
     "Union reinterpreting float bits as an int, translated through "
     "bit-level converter methods.",
     R"(#include <stdio.h>

union Converter {
    float f;
    int i;
};

int main() {
    union Converter c;
    c.f = 1.2f;
    printf("Bits: %d\n", c.i);
    c.f = 2.5f;
    printf("Again: %d\n", c.i);
    return 0;
}
)"},
    {"T4", "macro with side effects", RuleId::Macro,
     "Function-like macro whose arguments carry side effects; the expansion "
     "must be inlined literally so each increment happens exactly as often.",
     R"(#include <stdio.h>

#define MAX(a, b) ((a) > (b) ? (a) : (b))

int main() {
    int i = 5;
    int j = 8;
    int k = MAX(i++, j++);
    printf("Max: %d\n", k);
    printf("i: %d j: %d\n", i, j);
    return 0;
}
)"},
    {"T5", "unsigned int wraparound", RuleId::Unsigned,
     "32-bit unsigned arithmetic simulated with a long masked by "
     "& 0xFFFFFFFFL.",
     R"(#include <stdio.h>

int main() {
    unsigned int x = 4294967295u;
    printf("Start: %u\n", x);
    x = x + 1;
    printf("Wrapped: %u\n", x);
    x = x + 10;
    do {
        x = x + 5;
    } while (x < 25u);
    printf("Final: %u\n", x);
    return 0;
}
)"},
    {"T6", "goto cleanup", RuleId::GotoFwd,
     "Forward-jumping goto for error cleanup, restructured into a labeled "
     "do-while(false) with break.",
     R"(#include <stdio.h>

int process(int value) {
    int status = 0;
    if (value < 0) {
        status = -1;
        goto cleanup;
    }
    printf("Processing %d\n", value);
    if (value > 100) {
        status = 1;
        goto cleanup;
    }
    printf("Accepted %d\n", value);
cleanup:
    printf("Cleanup status: %d\n", status);
    return status;
}

int main() {
    process(42);
    process(-5);
    process(200);
    return 0;
}
)"},
    {"T7", "function pointers", RuleId::FnPtr,
     "Function pointers passed and stored, requiring a shift to functional "
     "interfaces and method references.",
     R"(#include <stdio.h>

int add(int a, int b) {
    return a + b;
}

int mul(int a, int b) {
    return a * b;
}

int apply(int (*op)(int, int), int a, int b) {
    return op(a, b);
}

int main() {
    printf("Add: %d\n", apply(add, 3, 4));
    printf("Mul: %d\n", apply(mul, 3, 4));
    int (*chosen)(int, int) = add;
    printf("Chosen: %d\n", chosen(10, 20));
    return 0;
}
)"},
    {"T8", "struct bitfields", RuleId::Bitfield,
     "Bitfield struct whose members need masked getters/setters with C's "
     "truncation and sign extension.",
     R"(#include <stdio.h>

struct Flags {
    int a : 1;
    int b : 3;
    int c : 4;
};

int main() {
    struct Flags f;
    f.a = 1;
    f.b = 5;
    f.c = 20;
    printf("a: %d\n", f.a);
    printf("b: %d\n", f.b);
    printf("c: %d\n", f.c);
    f.c = f.c + 3;
    printf("sum: %d\n", f.c);
    return 0;
}
)"},
    {"T9", "void pointer", RuleId::VoidPtr,
     "Generic void* storage mapped to Object with explicit casts at each "
     "use site.",
     R"(#include <stdio.h>

int main() {
    int number = 42;
    char *text = "hello";
    void *generic = &number;
    printf("Number: %d\n", *(int *)generic);
    generic = text;
    printf("Text: %s\n", (char *)generic);
    return 0;
}
)"},
    {"T10", "pointer-to-pointer out-parameter", RuleId::OutParam,
     "Out-parameter through int**, refactored into a method that returns "
     "the value with assignment at the call sites.",
     R"(#include <stdio.h>

int values[3] = {11, 22, 33};

void select_value(int **out, int index) {
    *out = &values[index];
}

int main() {
    int *chosen;
    select_value(&chosen, 1);
    printf("Chosen: %d\n", *chosen);
    select_value(&chosen, 2);
    printf("Second: %d\n", *chosen);
    return 0;
}
)"},
    {"T11", "unsigned char", RuleId::Unsigned,
     "8-bit unsigned arithmetic mapped to int masked with & 0xFF to avoid "
     "sign extension.",
     R"(#include <stdio.h>

int main() {
    unsigned char value = 200;
    value = value + 200;
    printf("Value: %u\n", value);
    unsigned char flags = 0xF0;
    printf("Flags: %u\n", flags);
    printf("Sum: %u\n", value + flags);
    while (value > 100) {
        value = value - 60;
    }
    printf("Reduced: %u\n", value);
    return 0;
}
)"},
    {"T12", "enum as integer", RuleId::Enum,
     "Enum value advanced with integer arithmetic (s = s + 1), resolved "
     "through a translated constant table.",
     R"(#include <stdio.h>

enum State {
    STOPPED,
    RUNNING,
    PAUSED,
    FINISHED
};

int main() {
    enum State s = STOPPED;
    printf("State: %d\n", s);
    s = s + 1;
    printf("Next: %d\n", s);
    s = s + 2;
    printf("Later: %d\n", s);
    if (s == FINISHED) {
        printf("Done\n");
    }
    return 0;
}
)"},
    {"T13", "goto backward loop", RuleId::GotoBack,
     "Backward-jumping goto forming a loop, restructured into a do-while.",
     R"(#include <stdio.h>

int main() {
    int count = 0;
loop_start:
    printf("Count: %d\n", count);
    count++;
    if (count < 5) {
        goto loop_start;
    }
    printf("Done after %d iterations\n", count);
    return 0;
}
)"},
    {"T14", "string.h operations", RuleId::Str,
     "strcpy/strcat/strlen over char buffers mapped to String assignment, "
     "concatenation and length.",
     R"(#include <stdio.h>
#include <string.h>

int main() {
    char buffer[64];
    strcpy(buffer, "Hello");
    strcat(buffer, ", World");
    printf("Text: %s\n", buffer);
    printf("Length: %d\n", (int)strlen(buffer));
    char suffix[16];
    strcpy(suffix, "!!");
    strcat(buffer, suffix);
    printf("Final: %s\n", buffer);
    return 0;
}
)"},
    {"T15", "malloc and free", RuleId::Mem,
     "Heap allocation of a struct mapped to the new operator; free deleted "
     "in favor of garbage collection.",
     R"(#include <stdio.h>
#include <stdlib.h>

struct Node {
    int value;
    int weight;
};

typedef struct Node Node;

int main() {
    Node *n = (Node *)malloc(sizeof(Node));
    n->value = 42;
    n->weight = 7;
    printf("Node: %d %d\n", n->value, n->weight);
    if (n->value) {
        printf("Has value\n");
    }
    free(n);
    printf("Released\n");
    return 0;
}
)"},
    {"T16", "mutable globals", RuleId::Global,
     "Mutable file-scope state translated to public static fields that "
     "functions keep mutating.",
     R"(#include <stdio.h>

int counter = 0;
const float SCALE = 2.5f;

void increment(void) {
    counter++;
}

void add_amount(int amount) {
    counter += amount;
}

int main() {
    increment();
    increment();
    add_amount(10);
    printf("Counter: %d\n", counter);
    printf("Scaled: %.1f\n", counter * SCALE);
    return 0;
}
)"},
    {"T17", "multi-line macro", RuleId::Macro,
     "Multi-line macro with continuations, inlined as its full statement "
     "block.",
     R"(#include <stdio.h>

#define REPORT(label, value) \
    printf("%s -> %d\n", label, value); \
    printf("Twice -> %d\n", (value) * 2)

int main() {
    REPORT("first", 10);
    REPORT("second", 21);
    return 0;
}
)"},
    {"T18", "sizeof operator", RuleId::Sizeof,
     "sizeof over scalar, struct and array types, replaced by constants "
     "from the frozen platform model.",
     R"(#include <stdio.h>

struct Packet {
    int id;
    float ratio;
};

int main() {
    printf("int: %zu\n", sizeof(int));
    printf("float: %zu\n", sizeof(float));
    printf("struct: %zu\n", sizeof(struct Packet));
    printf("array: %zu\n", sizeof(int[10]));
    printf("total: %zu\n", sizeof(int) + sizeof(float));
    return 0;
}
)"},
    {"T19", "nested structs", RuleId::Nested,
     "Nested struct access (outer.inner.value) and initialization mapped "
     "onto nested classes.",
     R"(#include <stdio.h>

struct Inner {
    int value;
    char *name;
};

struct Outer {
    struct Inner inner;
    int tag;
};

int main() {
    struct Outer box;
    box.tag = 3;
    box.inner.value = 77;
    box.inner.name = "widget";
    printf("Tag: %d\n", box.tag);
    printf("Inner: %d\n", box.inner.value);
    printf("Name: %s\n", box.inner.name);
    box.inner.value += box.tag;
    printf("Bumped: %d\n", box.inner.value);
    return 0;
}
)"},
    {"T20", "switch fall-through", RuleId::Switch,
     "Switch with deliberate fall-through; break placement must be "
     "preserved exactly.",
     R"(#include <stdio.h>

int main() {
    int grade = 2;
    switch (grade) {
        case 1:
            printf("One\n");
            break;
        case 2:
            printf("Two\n");
        case 3:
            printf("Three\n");
            break;
        default:
            printf("Other\n");
    }
    switch (grade) {
        case 9:
            printf("Nine\n");
            break;
        default:
            printf("Default\n");
    }
    printf("End\n");
    return 0;
}
)"},
};

void validate(const std::vector<TestCase>& corpus) {
  if (corpus.size() != 20)
    fail(ErrorKind::Config, "corpus must contain exactly 20 cases, found " +
                                std::to_string(corpus.size()));
  std::set<std::string> ids;
  for (const auto& tc : corpus) {
    if (!ids.insert(tc.id).second)
      fail(ErrorKind::Config, "duplicate corpus id " + tc.id);
    if (tc.c_source.empty())
      fail(ErrorKind::Config, "corpus case " + tc.id + " has no source");
    AnalyzedFile analyzed = analyze(tc.source());
    TranslationContext ctx = TranslationContext::build(analyzed.parts);
    std::vector<RuleId> rules = applicable_rules(analyzed.parts, ctx);
    bool found = false;
    for (RuleId r : rules)
      if (r == tc.expected_rule) found = true;
    if (!found)
      fail(ErrorKind::Config,
           "corpus case " + tc.id + " does not exercise its idiom: " +
               std::string(rule_name(tc.expected_rule)) + " not applicable");
  }
}

}  // namespace

std::string TestCase::file_stem() const {
  return "test_" + id.substr(1);
}

CSourceFile TestCase::source() const {
  return CSourceFile(file_stem() + ".c", c_source);
}

std::vector<TestCase> load_corpus() {
  std::vector<TestCase> corpus;
  for (const auto& raw : kCases) {
    TestCase tc;
    tc.id = raw.id;
    tc.title = raw.title;
    tc.expected_rule = raw.rule;
    tc.description = raw.description;
    tc.c_source = raw.source;
    corpus.push_back(std::move(tc));
  }
  validate(corpus);
  return corpus;
}

std::vector<TestCase> load_corpus_from_dir(const std::string& dir) {
  std::vector<TestCase> corpus;
  for (const auto& raw : kCases) {
    TestCase tc;
    tc.id = raw.id;
    tc.title = raw.title;
    tc.expected_rule = raw.rule;
    tc.description = raw.description;
    std::string path =
        dir + "/test_" + std::string(raw.id).substr(1) + ".c";
    if (!std::filesystem::exists(path))
      fail(ErrorKind::Config,
           "corpus integrity failure: missing file for " + std::string(raw.id) +
               " (" + path + ")");
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    tc.c_source = buf.str();
    if (tc.c_source.empty())
      fail(ErrorKind::Config,
           "corpus integrity failure: empty file for " + std::string(raw.id));
    corpus.push_back(std::move(tc));
  }
  validate(corpus);
  return corpus;
}

const TestCase& corpus_case(const std::vector<TestCase>& corpus,
                            const std::string& id) {
  for (const auto& tc : corpus)
    if (tc.id == id) return tc;
  fail(ErrorKind::Config, "no corpus case " + id);
}

}  // namespace c2j
