#include "c2j/assemble.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <set>

#include "c2j/error.hpp"

namespace c2j {

namespace {

const std::set<std::string> kJavaKeywords = {
    "abstract", "assert",   "boolean",    "break",    "byte",   "case",
    "catch",    "char",     "class",      "const",    "continue", "default",
    "do",       "double",   "else",       "enum",     "extends", "final",
    "finally",  "float",    "for",        "goto",     "if",     "implements",
    "import",   "instanceof", "int",      "interface", "long",  "native",
    "new",      "package",  "private",    "protected", "public", "return",
    "short",    "static",   "strictfp",   "super",    "switch", "synchronized",
    "this",     "throw",    "throws",     "transient", "try",   "void",
    "volatile", "while",    "var",        "record"};

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  size_t begin = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n') {
      lines.push_back(text.substr(begin, i - begin));
      begin = i + 1;
    }
  }
  if (begin < text.size()) lines.push_back(text.substr(begin));
  return lines;
}

std::string_view trimmed(const std::string& line) {
  size_t b = line.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  size_t e = line.find_last_not_of(" \t\r");
  return std::string_view(line).substr(b, e - b + 1);
}

void scan_braces(const std::string& line, int& depth, bool& in_block_comment) {
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (in_block_comment) {
      if (c == '*' && i + 1 < line.size() && line[i + 1] == '/') {
        in_block_comment = false;
        ++i;
      }
      continue;
    }
    if (c == '/' && i + 1 < line.size() && line[i + 1] == '/') return;
    if (c == '/' && i + 1 < line.size() && line[i + 1] == '*') {
      in_block_comment = true;
      ++i;
      continue;
    }
    if (c == '"' || c == '\'') {
      char quote = c;
      ++i;
      while (i < line.size()) {
        if (line[i] == '\\') {
          i += 2;
          continue;
        }
        if (line[i] == quote) break;
        ++i;
      }
      continue;
    }
    if (c == '{') ++depth;
    if (c == '}') --depth;
  }
}

// Re-indents a snippet at `base` levels of 4 spaces, deriving nesting purely
// from brace depth so output bytes are deterministic regardless of how the
// snippet arrived.
void append_reindented(const std::string& snippet, int base,
                       std::vector<std::string>& out) {
  int depth = 0;
  bool in_block_comment = false;
  for (const auto& line : split_lines(snippet)) {
    auto t = trimmed(line);
    if (t.empty()) {
      out.push_back("");
      continue;
    }
    int line_depth = depth;
    if (t[0] == '}') line_depth = depth > 0 ? depth - 1 : 0;
    out.push_back(std::string((base + line_depth) * 4, ' ') + std::string(t));
    scan_braces(line, depth, in_block_comment);
  }
}

bool has_top_level_import(const std::string& snippet) {
  int depth = 0;
  bool in_block_comment = false;
  for (const auto& line : split_lines(snippet)) {
    auto t = trimmed(line);
    if (depth == 0 && !in_block_comment && t.size() > 6 &&
        t.substr(0, 6) == "import" &&
        std::isspace(static_cast<unsigned char>(t[6])))
      return true;
    scan_braces(line, depth, in_block_comment);
  }
  return false;
}

std::string collapse_ws(const std::string& text) {
  std::string out;
  bool last_space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!last_space) out.push_back(' ');
      last_space = true;
    } else {
      out.push_back(c);
      last_space = false;
    }
  }
  return out;
}

bool is_identifier_path(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.')
      return false;
  }
  return true;
}

// Finds `new ClassName(<single identifier-ish argument>)` uses, the shape the
// copy rule produces.
bool method_uses_copy_ctor(const std::string& method_text,
                           const std::string& class_name) {
  const std::string needle = "new " + class_name + "(";
  size_t pos = 0;
  while ((pos = method_text.find(needle, pos)) != std::string::npos) {
    size_t open = pos + needle.size() - 1;
    int depth = 0;
    size_t close = open;
    for (; close < method_text.size(); ++close) {
      if (method_text[close] == '(') ++depth;
      if (method_text[close] == ')') {
        --depth;
        if (depth == 0) break;
      }
    }
    if (close >= method_text.size()) return false;
    std::string arg = method_text.substr(open + 1, close - open - 1);
    size_t b = arg.find_first_not_of(" \t");
    size_t e = arg.find_last_not_of(" \t");
    std::string_view trimmed_arg =
        b == std::string::npos ? std::string_view{}
                               : std::string_view(arg).substr(b, e - b + 1);
    if (is_identifier_path(trimmed_arg)) return true;
    pos = close;
  }
  return false;
}

bool class_declares_copy_ctor(const std::string& class_text,
                              const std::string& class_name) {
  std::string flat = collapse_ws(class_text);
  std::string want = "public " + class_name + "(" + class_name + " ";
  if (flat.find(want) != std::string::npos) return true;
  std::string want2 = "public " + class_name + " (" + class_name + " ";
  return flat.find(want2) != std::string::npos;
}

}  // namespace

bool is_valid_java_class_name(const std::string& stem) {
  if (stem.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(stem[0])) && stem[0] != '_' &&
      stem[0] != '$')
    return false;
  for (char c : stem) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '$')
      return false;
  }
  return kJavaKeywords.count(stem) == 0;
}

JavaCompilationUnit assemble(const std::string& class_name,
                             const std::vector<JavaSnippet>& snippets) {
  if (!is_valid_java_class_name(class_name))
    fail(ErrorKind::Assemble,
         "'" + class_name + "' is not a valid Java class name");

  JavaCompilationUnit unit;
  unit.class_name = class_name;

  std::set<std::string> method_names, class_names;
  for (const auto& s : snippets) {
    if (s.empty()) continue;  // translated unions
    if (has_top_level_import(s.text))
      fail(ErrorKind::Assemble,
           "snippet '" + s.name + "' still contains an import statement");
    switch (s.kind) {
      case SnippetKind::StaticField:
        unit.fields.push_back(s);
        break;
      case SnippetKind::NestedClass:
        if (!class_names.insert(s.name).second)
          fail(ErrorKind::Assemble, "duplicate nested class '" + s.name + "'");
        unit.nested_classes.push_back(s);
        break;
      case SnippetKind::Method:
        if (!method_names.insert(s.name).second)
          fail(ErrorKind::Assemble, "duplicate method name '" + s.name + "'");
        unit.methods.push_back(s);
        break;
    }
  }

  // Copy-constructor dependency: any method cloning through new X(ref) needs
  // class X to declare X(X other).
  for (const auto& m : unit.methods) {
    for (const auto& c : unit.nested_classes) {
      if (method_uses_copy_ctor(m.text, c.name) &&
          !class_declares_copy_ctor(c.text, c.name)) {
        fail(ErrorKind::Assemble,
             "method '" + m.name + "' copies through a constructor that class '" +
                 c.name + "' does not declare");
      }
    }
  }

  if (unit.fields.empty() && unit.nested_classes.empty() &&
      unit.methods.empty()) {
    unit.text = "public class " + class_name + " { }\n";
    return unit;
  }

  std::vector<std::string> lines;
  lines.push_back("public class " + class_name + " {");
  bool first = true;
  auto append_group = [&](const std::vector<JavaSnippet>& group) {
    for (const auto& s : group) {
      if (!first) lines.push_back("");
      first = false;
      append_reindented(s.text, 1, lines);
    }
  };
  append_group(unit.fields);
  append_group(unit.nested_classes);
  append_group(unit.methods);
  lines.push_back("}");

  std::string text;
  for (const auto& l : lines) text += l + "\n";
  unit.text = std::move(text);
  return unit;
}

std::string write_unit(const JavaCompilationUnit& unit,
                       const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::string path = dir + "/" + unit.file_name();
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::Infra, "cannot write " + path);
  out << unit.text;
  return path;
}

}  // namespace c2j
