#include "c2j/lexer.hpp"

#include <cctype>

namespace c2j {

namespace {

struct Cursor {
  const CSourceFile& src;
  const std::string& text;
  size_t pos = 0;

  explicit Cursor(const CSourceFile& s) : src(s), text(s.text()) {}

  bool done() const { return pos >= text.size(); }
  char peek(size_t ahead = 0) const {
    return pos + ahead < text.size() ? text[pos + ahead] : '\0';
  }
  char get() { return text[pos++]; }

  Span span_from(size_t begin) const {
    auto [line, col] = src.line_col(begin);
    return Span{begin, pos, line, col};
  }

  [[noreturn]] void error(ErrorKind kind, const std::string& msg,
                          size_t at) const {
    auto [line, col] = src.line_col(at);
    fail_at(kind,
            msg + " at line " + std::to_string(line) + ", column " +
                std::to_string(col),
            Span{at, at + 1, line, col});
  }
};

bool at_line_start(const std::string& text, size_t pos) {
  while (pos > 0) {
    char c = text[pos - 1];
    if (c == '\n') return true;
    if (c != ' ' && c != '\t') return false;
    --pos;
  }
  return true;
}

// Consumes a preprocessor directive line including backslash continuations.
void skip_directive(Cursor& cur) {
  size_t start = cur.pos;
  ++cur.pos;  // '#'
  while (!cur.done() && (cur.peek() == ' ' || cur.peek() == '\t')) ++cur.pos;
  size_t name_begin = cur.pos;
  while (!cur.done() && std::isalpha(static_cast<unsigned char>(cur.peek())))
    ++cur.pos;
  std::string name = cur.text.substr(name_begin, cur.pos - name_begin);

  if (name == "if" || name == "ifdef" || name == "ifndef" || name == "elif" ||
      name == "else" || name == "endif") {
    cur.error(ErrorKind::Unsupported,
              "conditional compilation (#" + name + ") is not supported",
              start);
  }
  if (name != "include" && name != "define") {
    cur.error(ErrorKind::Unsupported, "unsupported directive #" + name, start);
  }

  while (!cur.done()) {
    char c = cur.get();
    if (c == '\\') {
      // line continuation: swallow the newline and keep going
      if (cur.peek() == '\r') ++cur.pos;
      if (cur.done())
        cur.error(ErrorKind::Syntax, "unterminated line continuation in #" + name,
                  cur.pos - 1);
      if (cur.peek() == '\n') {
        ++cur.pos;
        continue;
      }
    }
    if (c == '\n') return;
  }
}

bool skip_comment(Cursor& cur) {
  if (cur.peek() == '/' && cur.peek(1) == '/') {
    while (!cur.done() && cur.peek() != '\n') ++cur.pos;
    return true;
  }
  if (cur.peek() == '/' && cur.peek(1) == '*') {
    size_t start = cur.pos;
    cur.pos += 2;
    while (!cur.done()) {
      if (cur.peek() == '*' && cur.peek(1) == '/') {
        cur.pos += 2;
        return true;
      }
      ++cur.pos;
    }
    cur.error(ErrorKind::Syntax, "unterminated block comment", start);
  }
  return false;
}

void lex_string_like(Cursor& cur, char quote) {
  size_t start = cur.pos;
  cur.get();  // opening quote
  while (true) {
    if (cur.done() || cur.peek() == '\n')
      cur.error(ErrorKind::Syntax,
                quote == '"' ? "unterminated string literal"
                             : "unterminated character literal",
                start);
    char c = cur.get();
    if (c == '\\') {
      if (cur.done())
        cur.error(ErrorKind::Syntax, "unterminated escape sequence", start);
      cur.get();
      continue;
    }
    if (c == quote) return;
  }
}

const char* kThreeCharPunct[] = {"<<=", ">>="};
const char* kTwoCharPunct[] = {"->", "++", "--", "<<", ">>", "<=", ">=",
                               "==", "!=", "&&", "||", "+=", "-=", "*=",
                               "/=", "%=", "&=", "^=", "|="};

}  // namespace

std::vector<Token> lex(const CSourceFile& source) {
  Cursor cur(source);
  std::vector<Token> out;

  while (!cur.done()) {
    char c = cur.peek();
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++cur.pos;
      continue;
    }
    if (skip_comment(cur)) continue;
    if (c == '#') {
      if (!at_line_start(cur.text, cur.pos))
        cur.error(ErrorKind::Syntax, "stray '#'", cur.pos);
      skip_directive(cur);
      continue;
    }

    size_t start = cur.pos;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (!cur.done() &&
             (std::isalnum(static_cast<unsigned char>(cur.peek())) ||
              cur.peek() == '_'))
        ++cur.pos;
      out.push_back({Tok::Ident, cur.text.substr(start, cur.pos - start),
                     cur.span_from(start)});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && std::isdigit(static_cast<unsigned char>(cur.peek(1))))) {
      bool is_float = false;
      bool hex = c == '0' && (cur.peek(1) == 'x' || cur.peek(1) == 'X');
      if (hex) cur.pos += 2;
      while (!cur.done()) {
        char d = cur.peek();
        if (std::isdigit(static_cast<unsigned char>(d)) ||
            (hex && std::isxdigit(static_cast<unsigned char>(d)))) {
          ++cur.pos;
        } else if (!hex && d == '.') {
          is_float = true;
          ++cur.pos;
        } else if (!hex && (d == 'e' || d == 'E') &&
                   (std::isdigit(static_cast<unsigned char>(cur.peek(1))) ||
                    ((cur.peek(1) == '+' || cur.peek(1) == '-') &&
                     std::isdigit(static_cast<unsigned char>(cur.peek(2)))))) {
          is_float = true;
          cur.pos += 2;
        } else {
          break;
        }
      }
      // suffixes
      while (!cur.done()) {
        char d = cur.peek();
        if (d == 'u' || d == 'U' || d == 'l' || d == 'L') {
          ++cur.pos;
        } else if ((d == 'f' || d == 'F') && !hex) {
          is_float = true;
          ++cur.pos;
        } else {
          break;
        }
      }
      out.push_back({is_float ? Tok::FloatLit : Tok::IntLit,
                     cur.text.substr(start, cur.pos - start),
                     cur.span_from(start)});
      continue;
    }
    if (c == '"' || c == '\'') {
      lex_string_like(cur, c);
      out.push_back({c == '"' ? Tok::StrLit : Tok::CharLit,
                     cur.text.substr(start, cur.pos - start),
                     cur.span_from(start)});
      continue;
    }

    // punctuation, longest match first
    auto emit_punct = [&](size_t len) {
      cur.pos += len;
      out.push_back({Tok::Punct, cur.text.substr(start, len),
                     cur.span_from(start)});
    };
    bool matched = false;
    for (const char* p : kThreeCharPunct) {
      if (cur.text.compare(cur.pos, 3, p) == 0) {
        emit_punct(3);
        matched = true;
        break;
      }
    }
    if (matched) continue;
    for (const char* p : kTwoCharPunct) {
      if (cur.text.compare(cur.pos, 2, p) == 0) {
        emit_punct(2);
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (std::string("+-*/%<>=!&|^~?:;,.(){}[]").find(c) != std::string::npos) {
      emit_punct(1);
      continue;
    }
    cur.error(ErrorKind::Syntax,
              std::string("unexpected character '") + c + "'", cur.pos);
  }

  Token eof;
  eof.kind = Tok::Eof;
  eof.span = cur.span_from(cur.text.size());
  out.push_back(eof);
  return out;
}

}  // namespace c2j
