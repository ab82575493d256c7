#include "c2j/sanitize.hpp"

#include <cctype>
#include <set>

namespace c2j {

namespace {

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

std::string join_lines(const std::vector<std::string>& lines,
                       bool trailing_newline) {
  std::string out;
  for (size_t i = 0; i < lines.size(); ++i) {
    out += lines[i];
    if (i + 1 < lines.size()) out += '\n';
  }
  if (trailing_newline && !out.empty()) out += '\n';
  return out;
}

std::string_view trimmed(const std::string& line) {
  size_t b = line.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  size_t e = line.find_last_not_of(" \t\r");
  return std::string_view(line).substr(b, e - b + 1);
}

bool is_fence_marker(const std::string& line) {
  auto t = trimmed(line);
  return t.size() >= 3 && t.substr(0, 3) == "```";
}

const std::set<std::string> kDeclStarters = {
    "public", "private", "protected", "static",  "final",   "abstract",
    "synchronized", "native", "class", "interface", "enum",  "void",
    "int",    "long",  "float", "double", "boolean", "char", "byte",
    "short",  "String", "Object"};

bool begins_java_declaration(const std::string& line) {
  auto t = trimmed(line);
  if (t.empty()) return false;
  if (t[0] == '@' || t[0] == '{' || t[0] == '}') return true;
  if (t.size() >= 2 && t[0] == '/' && (t[1] == '/' || t[1] == '*')) return true;
  if (t[0] == '*') return true;  // block comment continuation

  size_t i = 0;
  while (i < t.size() &&
         (std::isalnum(static_cast<unsigned char>(t[i])) || t[i] == '_'))
    ++i;
  if (i == 0) return false;
  std::string word(t.substr(0, i));
  if (kDeclStarters.count(word)) return true;
  // identifier immediately followed by '('
  if (i < t.size() && t[i] == '(') return true;
  return false;
}

// Updates a brace depth across one line, skipping strings, chars and
// comments. `in_block_comment` persists across lines.
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

// Minimal Java-ish token used by the extractor.
struct JTok {
  std::string text;
  size_t begin = 0;
  size_t end = 0;
};

std::vector<JTok> java_tokens(const std::string& text) {
  std::vector<JTok> toks;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '*') {
      i += 2;
      while (i + 1 < text.size() && !(text[i] == '*' && text[i + 1] == '/'))
        ++i;
      i = i + 2 <= text.size() ? i + 2 : text.size();
      continue;
    }
    if (c == '"' || c == '\'') {
      char quote = c;
      size_t b = i++;
      while (i < text.size() && text[i] != quote) {
        if (text[i] == '\\') ++i;
        ++i;
      }
      if (i < text.size()) ++i;
      toks.push_back({text.substr(b, i - b), b, i});
      continue;
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '@') {
      size_t b = i;
      if (c == '@') ++i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) ||
              text[i] == '_' || text[i] == '.'))
        ++i;
      toks.push_back({text.substr(b, i - b), b, i});
      continue;
    }
    toks.push_back({std::string(1, c), i, i + 1});
    ++i;
  }
  return toks;
}

bool is_word(const std::string& s) {
  return !s.empty() && (std::isalpha(static_cast<unsigned char>(s[0])) ||
                        s[0] == '_' || s[0] == '@');
}

// Walks back from `at` to the start of the declaration: over modifiers, type
// tokens, annotations, and array brackets; stops after ';', '{', '}' or the
// beginning of input.
size_t declaration_start(const std::vector<JTok>& toks, size_t at) {
  size_t start = at;
  while (start > 0) {
    const std::string& prev = toks[start - 1].text;
    if (is_word(prev) || prev == "]" || prev == "[" || prev == ">" ||
        prev == "<" || prev == ",") {
      --start;
      continue;
    }
    break;
  }
  return start;
}

std::optional<std::pair<size_t, size_t>> find_braced_region(
    const std::vector<JTok>& toks, size_t open_idx) {
  int depth = 0;
  for (size_t i = open_idx; i < toks.size(); ++i) {
    if (toks[i].text == "{") ++depth;
    if (toks[i].text == "}") {
      --depth;
      if (depth == 0) return std::make_pair(open_idx, i);
    }
  }
  return std::nullopt;
}

}  // namespace

const char* sanitize_action_name(SanitizeAction a) {
  switch (a) {
    case SanitizeAction::FenceStripped: return "fence_stripped";
    case SanitizeAction::ProseStripped: return "prose_stripped";
    case SanitizeAction::ImportsStripped: return "imports_stripped";
    case SanitizeAction::ExtraDefinitionsDiscarded:
      return "extra_definitions_discarded";
    case SanitizeAction::ExtractionFailed: return "extraction_failed";
  }
  return "?";
}

std::string strip_fences_only(const std::string& raw) {
  auto lines = split_lines(raw);
  std::vector<std::string> kept;
  for (const auto& line : lines)
    if (!is_fence_marker(line)) kept.push_back(line);
  return join_lines(kept, !raw.empty() && raw.back() == '\n');
}

std::string strip_fences_and_prose(const std::string& raw) {
  auto lines = split_lines(raw);
  std::vector<std::string> kept;
  bool in_fence = false;
  int depth = 0;
  bool in_block_comment = false;

  for (const auto& line : lines) {
    if (is_fence_marker(line)) {
      in_fence = !in_fence;
      continue;
    }
    if (in_fence) {
      kept.push_back(line);
      continue;
    }
    bool in_region = depth > 0 || in_block_comment;
    if (!in_region && !begins_java_declaration(line)) continue;  // prose
    scan_braces(line, depth, in_block_comment);
    kept.push_back(line);
  }
  return join_lines(kept, !raw.empty() && raw.back() == '\n');
}

std::string strip_imports(const std::string& text) {
  auto lines = split_lines(text);
  std::vector<std::string> kept;
  int depth = 0;
  bool in_block_comment = false;
  for (const auto& line : lines) {
    auto t = trimmed(line);
    bool top_level_import =
        depth == 0 && !in_block_comment && t.size() > 6 &&
        t.substr(0, 6) == "import" &&
        std::isspace(static_cast<unsigned char>(t[6]));
    scan_braces(line, depth, in_block_comment);
    if (top_level_import) continue;
    kept.push_back(line);
  }
  return join_lines(kept, !text.empty() && text.back() == '\n');
}

std::optional<std::string> extract_single_definition(
    const std::string& text, const std::string& expected_name,
    DefinitionKind kind) {
  if (expected_name.empty()) return std::nullopt;
  auto toks = java_tokens(text);

  auto slice = [&](size_t from_tok, size_t to_tok) {
    return text.substr(toks[from_tok].begin,
                       toks[to_tok].end - toks[from_tok].begin);
  };

  if (kind == DefinitionKind::Class) {
    for (size_t i = 0; i + 1 < toks.size(); ++i) {
      if (toks[i].text == "class" && toks[i + 1].text == expected_name) {
        // find the opening brace after the name
        size_t open = i + 2;
        while (open < toks.size() && toks[open].text != "{") {
          if (toks[open].text == ";" || toks[open].text == "}") break;
          ++open;
        }
        if (open >= toks.size() || toks[open].text != "{") continue;
        auto region = find_braced_region(toks, open);
        if (!region) return std::nullopt;  // unbalanced
        size_t start = declaration_start(toks, i);
        return slice(start, region->second);
      }
    }
    return std::nullopt;
  }

  if (kind == DefinitionKind::Method) {
    for (size_t i = 0; i + 1 < toks.size(); ++i) {
      if (toks[i].text != expected_name || toks[i + 1].text != "(") continue;
      // a definition's name is preceded by a type-ish token
      if (i == 0) continue;
      const std::string& prev = toks[i - 1].text;
      if (!(is_word(prev) || prev == "]" || prev == ">")) continue;
      // find the matching ')'
      int pdepth = 0;
      size_t close = i + 1;
      for (; close < toks.size(); ++close) {
        if (toks[close].text == "(") ++pdepth;
        if (toks[close].text == ")") {
          --pdepth;
          if (pdepth == 0) break;
        }
      }
      if (close >= toks.size()) return std::nullopt;
      // skip a throws clause if present
      size_t open = close + 1;
      while (open < toks.size() && is_word(toks[open].text) ) ++open;
      if (open < toks.size() && toks[open].text == ",") continue;
      if (open >= toks.size() || toks[open].text != "{") continue;  // a call
      auto region = find_braced_region(toks, open);
      if (!region) return std::nullopt;  // unbalanced
      size_t start = declaration_start(toks, i);
      return slice(start, region->second);
    }
    return std::nullopt;
  }

  // Field: name followed by '=' or ';' at top-level depth, ending at the
  // terminating semicolon.
  int depth = 0;
  for (size_t i = 0; i + 1 < toks.size(); ++i) {
    const std::string& t = toks[i].text;
    if (t == "{") ++depth;
    if (t == "}") --depth;
    if (depth != 0) continue;
    if (t != expected_name) continue;
    if (i == 0) continue;
    const std::string& prev = toks[i - 1].text;
    if (!(is_word(prev) || prev == "]")) continue;
    const std::string& next = toks[i + 1].text;
    if (next != "=" && next != ";") continue;
    size_t end = i + 1;
    int inner = 0;
    for (; end < toks.size(); ++end) {
      if (toks[end].text == "{") ++inner;
      if (toks[end].text == "}") --inner;
      if (toks[end].text == ";" && inner == 0) break;
    }
    if (end >= toks.size()) return std::nullopt;
    size_t start = declaration_start(toks, i);
    return slice(start, end);
  }
  return std::nullopt;
}

SanitizeReport sanitize_completion(const std::string& raw,
                                   const std::string& expected_name,
                                   DefinitionKind kind) {
  SanitizeReport report;
  report.input_bytes = raw.size();

  std::string defenced = strip_fences_only(raw);
  std::string text = strip_fences_and_prose(raw);
  if (defenced.size() != raw.size())
    report.actions.push_back(SanitizeAction::FenceStripped);
  if (text.size() != defenced.size())
    report.actions.push_back(SanitizeAction::ProseStripped);

  std::string without_imports = strip_imports(text);
  if (without_imports.size() != text.size())
    report.actions.push_back(SanitizeAction::ImportsStripped);

  auto extracted =
      extract_single_definition(without_imports, expected_name, kind);
  if (!extracted) {
    report.actions.push_back(SanitizeAction::ExtractionFailed);
    report.output_bytes = 0;
    return report;
  }
  if (extracted->size() != without_imports.size() &&
      trimmed(without_imports) != trimmed(*extracted))
    report.actions.push_back(SanitizeAction::ExtraDefinitionsDiscarded);
  report.result = std::move(*extracted);
  report.output_bytes = report.result->size();
  return report;
}

}  // namespace c2j
