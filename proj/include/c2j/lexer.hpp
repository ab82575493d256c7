#pragma once

#include <string>
#include <vector>

#include "c2j/source.hpp"

namespace c2j {

enum class Tok {
  Ident,
  IntLit,
  FloatLit,
  StrLit,
  CharLit,
  Punct,
  Eof,
};

struct Token {
  Tok kind = Tok::Eof;
  std::string text;  // verbatim spelling, including quotes for literals
  Span span;

  bool is(Tok k) const { return kind == k; }
  bool is_punct(const char* p) const { return kind == Tok::Punct && text == p; }
  bool is_ident(const char* name) const {
    return kind == Tok::Ident && text == name;
  }
};

// Tokenizes the supported C subset. Comments are skipped; spans always index
// into the original text. Preprocessor lines are skipped here: #include and
// #define are dropped (macros are harvested separately by extract_macros),
// conditional compilation is rejected as unsupported.
std::vector<Token> lex(const CSourceFile& source);

}  // namespace c2j
