#include "c2j/macro.hpp"

#include <cctype>
#include <set>

namespace c2j {

namespace {

[[noreturn]] void macro_error(const CSourceFile& src, size_t at,
                              const std::string& msg) {
  auto [line, col] = src.line_col(at);
  fail_at(ErrorKind::Syntax, msg + " at line " + std::to_string(line),
          Span{at, at + 1, line, col});
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

std::vector<MacroDef> extract_macros(const CSourceFile& source) {
  const std::string& text = source.text();
  std::vector<MacroDef> out;

  size_t pos = 0;
  bool line_start = true;
  while (pos < text.size()) {
    char c = text[pos];
    if (c == '\n') {
      line_start = true;
      ++pos;
      continue;
    }
    if (line_start && (c == ' ' || c == '\t')) {
      ++pos;
      continue;
    }
    if (!(line_start && c == '#')) {
      // Skip comments and strings so '#' inside them is never misread.
      if (c == '/' && pos + 1 < text.size() && text[pos + 1] == '/') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
        continue;
      }
      if (c == '/' && pos + 1 < text.size() && text[pos + 1] == '*') {
        pos += 2;
        while (pos + 1 < text.size() &&
               !(text[pos] == '*' && text[pos + 1] == '/'))
          ++pos;
        pos = pos + 2 <= text.size() ? pos + 2 : text.size();
        continue;
      }
      if (c == '"' || c == '\'') {
        char quote = c;
        ++pos;
        while (pos < text.size() && text[pos] != quote && text[pos] != '\n') {
          if (text[pos] == '\\') ++pos;
          ++pos;
        }
        if (pos < text.size()) ++pos;
        line_start = false;
        continue;
      }
      line_start = false;
      ++pos;
      continue;
    }

    // Found a directive. Collect the full logical line (continuations spliced).
    size_t dir_begin = pos;
    ++pos;  // '#'
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    size_t name_begin = pos;
    while (pos < text.size() &&
           std::isalpha(static_cast<unsigned char>(text[pos])))
      ++pos;
    std::string dir_name = text.substr(name_begin, pos - name_begin);

    std::string logical;
    bool multiline = false;
    while (pos < text.size()) {
      char d = text[pos];
      if (d == '\\') {
        size_t look = pos + 1;
        if (look < text.size() && text[look] == '\r') ++look;
        if (look >= text.size())
          macro_error(source, pos, "unterminated line continuation in #define");
        if (text[look] == '\n') {
          // splice: the backslash-newline pair disappears entirely
          multiline = true;
          pos = look + 1;
          continue;
        }
      }
      if (d == '\n') break;
      logical.push_back(d);
      ++pos;
    }
    size_t dir_end = pos;  // exclusive of the final newline
    line_start = false;

    if (dir_name != "define") continue;  // #include and friends: nothing here

    // logical now holds everything after "#define".
    size_t i = 0;
    while (i < logical.size() && std::isspace(static_cast<unsigned char>(logical[i])))
      ++i;
    size_t macro_name_begin = i;
    while (i < logical.size() && is_ident_char(logical[i])) ++i;
    if (i == macro_name_begin)
      macro_error(source, dir_begin, "#define with no macro name");

    MacroDef def;
    def.name = logical.substr(macro_name_begin, i - macro_name_begin);
    def.multiline = multiline;
    auto [line, col] = source.line_col(dir_begin);
    def.span = Span{dir_begin, dir_end, line, col};
    def.verbatim = text.substr(dir_begin, dir_end - dir_begin);

    // Function-like only if '(' immediately follows the name.
    if (i < logical.size() && logical[i] == '(') {
      ++i;
      std::vector<std::string> params;
      std::set<std::string> seen;
      while (true) {
        while (i < logical.size() &&
               std::isspace(static_cast<unsigned char>(logical[i])))
          ++i;
        if (i < logical.size() && logical[i] == ')' && params.empty()) {
          ++i;
          break;
        }
        size_t p_begin = i;
        while (i < logical.size() && is_ident_char(logical[i])) ++i;
        if (i == p_begin)
          macro_error(source, dir_begin, "malformed macro parameter list");
        std::string p = logical.substr(p_begin, i - p_begin);
        if (!seen.insert(p).second)
          macro_error(source, dir_begin,
                      "duplicate macro parameter '" + p + "'");
        params.push_back(std::move(p));
        while (i < logical.size() &&
               std::isspace(static_cast<unsigned char>(logical[i])))
          ++i;
        if (i < logical.size() && logical[i] == ',') {
          ++i;
          continue;
        }
        if (i < logical.size() && logical[i] == ')') {
          ++i;
          break;
        }
        macro_error(source, dir_begin, "malformed macro parameter list");
      }
      def.params = std::move(params);
    }

    // Replacement text: the rest, trimmed at both ends.
    while (i < logical.size() &&
           (logical[i] == ' ' || logical[i] == '\t'))
      ++i;
    size_t body_end = logical.size();
    while (body_end > i &&
           std::isspace(static_cast<unsigned char>(logical[body_end - 1])))
      --body_end;
    def.body = logical.substr(i, body_end - i);
    out.push_back(std::move(def));
  }
  return out;
}

}  // namespace c2j
