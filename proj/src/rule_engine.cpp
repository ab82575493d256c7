#include "c2j/rule_engine.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "c2j/parser.hpp"

namespace c2j {

namespace {

// ---------------------------------------------------------------------------
// Java-side type model

struct JType {
  enum class K {
    Void, Int, Long, Float, Double, Char, Boolean, Str, Object, Ref, Array,
    FnInt2
  };
  K k = K::Int;
  std::string ref;               // class name when k == Ref
  std::shared_ptr<JType> elem;   // when k == Array

  static JType basic(K k) { return JType{k, "", nullptr}; }
  static JType of_class(std::string name) {
    return JType{K::Ref, std::move(name), nullptr};
  }
  static JType array_of(JType e) {
    return JType{K::Array, "", std::make_shared<JType>(std::move(e))};
  }

  bool is(K kk) const { return k == kk; }

  std::string str() const {
    switch (k) {
      case K::Void: return "void";
      case K::Int: return "int";
      case K::Long: return "long";
      case K::Float: return "float";
      case K::Double: return "double";
      case K::Char: return "char";
      case K::Boolean: return "boolean";
      case K::Str: return "String";
      case K::Object: return "Object";
      case K::Ref: return ref;
      case K::Array: return elem->str() + "[]";
      case K::FnInt2: return "java.util.function.IntBinaryOperator";
    }
    return "?";
  }
};

enum class Mask { None, U32, U8 };

[[noreturn]] void unsupported_here(const std::string& what, Span span) {
  fail_at(ErrorKind::Unsupported,
          "unsupported construct: " + what + " at line " +
              std::to_string(span.line),
          span);
}

// Maps a C type in a given position; pointer-specific representations
// (array cursors, out-parameters) are decided by the translator before it
// reaches here.
enum class TypePos { Global, Field, Local, Param, Return };

struct MappedType {
  JType jt;
  Mask mask = Mask::None;
};

MappedType map_type(const CType& t, const TranslationContext& ctx,
                    TypePos pos, Span span) {
  using K = JType::K;
  switch (t.kind) {
    case TypeKind::Void: return {JType::basic(K::Void)};
    case TypeKind::Char: return {JType::basic(K::Char)};
    case TypeKind::UChar: return {JType::basic(K::Int), Mask::U8};
    case TypeKind::Short: return {JType::basic(K::Int)};
    case TypeKind::Int: return {JType::basic(K::Int)};
    case TypeKind::UInt: return {JType::basic(K::Long), Mask::U32};
    case TypeKind::Long: return {JType::basic(K::Long)};
    case TypeKind::Float: return {JType::basic(K::Float)};
    case TypeKind::Double: return {JType::basic(K::Double)};
    case TypeKind::Enum: return {JType::basic(K::Int)};
    case TypeKind::UShort:
    case TypeKind::ULong:
      unsupported_here("type " + t.describe(), span);
    case TypeKind::Record: {
      const auto* view = ctx.find_record(t.name);
      if (!view) {
        auto eit = ctx.enums.find(t.name);
        if (eit != ctx.enums.end()) return {JType::basic(K::Int)};
        fail_at(ErrorKind::Unresolved, "unresolved record type '" + t.name + "'",
                span);
      }
      if (view->kind == RecordKind::Union)
        unsupported_here("union value of type '" + t.name +
                             "' in this position",
                         span);
      return {JType::of_class(view->java_name)};
    }
    case TypeKind::Named:
      unsupported_here("unresolved typedef name '" + t.name + "'", span);
    case TypeKind::Pointer: {
      const CType& p = *t.inner;
      if (p.kind == TypeKind::Char) return {JType::basic(K::Str)};
      if (p.kind == TypeKind::Void) return {JType::basic(K::Object)};
      if (p.kind == TypeKind::Record) {
        const auto* view = ctx.find_record(p.name);
        if (!view)
          fail_at(ErrorKind::Unresolved,
                  "unresolved record type '" + p.name + "'", span);
        if (view->kind == RecordKind::Union)
          unsupported_here("pointer to union", span);
        return {JType::of_class(view->java_name)};
      }
      unsupported_here("pointer type " + t.describe() + " in this position",
                       span);
    }
    case TypeKind::Array: {
      if (t.inner->kind == TypeKind::Char && pos != TypePos::Field)
        return {JType::basic(K::Str)};
      MappedType elem = map_type(*t.inner, ctx, pos, span);
      if (elem.mask != Mask::None)
        unsupported_here(
            "array of unsigned elements (wraparound masking does not reach "
            "element stores)",
            span);
      return {JType::array_of(elem.jt)};
    }
    case TypeKind::FnPtr: {
      bool int2 = t.ret && t.ret->kind == TypeKind::Int &&
                  t.params.size() == 2 &&
                  t.params[0].kind == TypeKind::Int &&
                  t.params[1].kind == TypeKind::Int;
      if (!int2)
        unsupported_here(
            "function pointer signature " + t.describe() +
                " (only int (*)(int, int) maps to a functional interface)",
            span);
      return {JType::basic(K::FnInt2)};
    }
  }
  unsupported_here("type " + t.describe(), span);
}

std::string mask_literal(Mask m) {
  return m == Mask::U32 ? "0xFFFFFFFFL" : "0xFF";
}

// ---------------------------------------------------------------------------
// Platform model: byte sizes under the verifier's reference C compiler
// (LP64 x86-64). Pinned by a probe test against the live toolchain.

struct Layout {
  long long size = 0;
  long long align = 1;
};

Layout layout_of(const CType& t, const TranslationContext& ctx, Span span);

Layout layout_of_record(const RecordDecl& rec, const TranslationContext& ctx,
                        Span span) {
  (void)span;
  if (rec.rkind == RecordKind::Enum) return {4, 4};
  long long offset = 0, max_align = 1;
  long long bit_cursor = -1;  // bit offset inside an open int unit, -1: closed
  if (rec.rkind == RecordKind::Union) {
    long long size = 0;
    for (const auto& f : rec.fields) {
      Layout fl = layout_of(f.type, ctx, f.span);
      size = std::max(size, fl.size);
      max_align = std::max(max_align, fl.align);
    }
    long long total = (size + max_align - 1) / max_align * max_align;
    return {total, max_align};
  }
  for (const auto& f : rec.fields) {
    if (f.bit_width >= 0) {
      max_align = std::max<long long>(max_align, 4);
      if (bit_cursor < 0 || bit_cursor + f.bit_width > 32) {
        offset = (offset + 3) / 4 * 4;
        offset += 4;
        bit_cursor = f.bit_width;
      } else {
        bit_cursor += f.bit_width;
      }
      continue;
    }
    bit_cursor = -1;
    Layout fl = layout_of(f.type, ctx, f.span);
    max_align = std::max(max_align, fl.align);
    offset = (offset + fl.align - 1) / fl.align * fl.align;
    offset += fl.size;
  }
  long long total = (offset + max_align - 1) / max_align * max_align;
  if (total == 0) total = 1;
  return {total, max_align};
}

Layout layout_of(const CType& t, const TranslationContext& ctx, Span span) {
  switch (t.kind) {
    case TypeKind::Char:
    case TypeKind::UChar: return {1, 1};
    case TypeKind::Short:
    case TypeKind::UShort: return {2, 2};
    case TypeKind::Int:
    case TypeKind::UInt:
    case TypeKind::Enum: return {4, 4};
    case TypeKind::Long:
    case TypeKind::ULong: return {8, 8};
    case TypeKind::Float: return {4, 4};
    case TypeKind::Double: return {8, 8};
    case TypeKind::Pointer:
    case TypeKind::FnPtr: return {8, 8};
    case TypeKind::Array: {
      if (t.array_len < 0)
        unsupported_here("sizeof unsized array", span);
      Layout e = layout_of(*t.inner, ctx, span);
      return {e.size * t.array_len, e.align};
    }
    case TypeKind::Record: {
      const auto* view = ctx.find_record(t.name);
      if (view && view->decl) return layout_of_record(*view->decl, ctx, span);
      auto eit = ctx.enums.find(t.name);
      if (eit != ctx.enums.end()) return {4, 4};
      fail_at(ErrorKind::Unresolved,
              "unresolved record type '" + t.name + "' in sizeof", span);
    }
    default:
      unsupported_here("sizeof " + t.describe(), span);
  }
}

// ---------------------------------------------------------------------------
// C renderer, used to re-express macro arguments as text for inlining.

std::string render_c(const Expr& e) {
  switch (e.kind) {
    case ExprKind::IntLit:
    case ExprKind::FloatLit:
    case ExprKind::StrLit:
    case ExprKind::CharLit:
    case ExprKind::Ident:
      return e.spelling;
    case ExprKind::Paren:
      return "(" + render_c(*e.a) + ")";
    case ExprKind::Unary:
      return e.prefix ? e.spelling + render_c(*e.a)
                      : render_c(*e.a) + e.spelling;
    case ExprKind::Binary:
      return render_c(*e.a) + " " + e.spelling + " " + render_c(*e.b);
    case ExprKind::Assign:
      return render_c(*e.a) + " " + e.spelling + " " + render_c(*e.b);
    case ExprKind::Ternary:
      return render_c(*e.a) + " ? " + render_c(*e.b) + " : " + render_c(*e.c);
    case ExprKind::Call: {
      std::string s = render_c(*e.a) + "(";
      for (size_t i = 0; i < e.args.size(); ++i) {
        if (i) s += ", ";
        s += render_c(*e.args[i]);
      }
      return s + ")";
    }
    case ExprKind::Member:
      return render_c(*e.a) + (e.arrow ? "->" : ".") + e.member;
    case ExprKind::Index:
      return render_c(*e.a) + "[" + render_c(*e.b) + "]";
    case ExprKind::Cast:
      return "(" + e.type.describe() + ")" + render_c(*e.a);
    case ExprKind::SizeofType:
      return "sizeof(" + e.type.describe() + ")";
    case ExprKind::SizeofExpr:
      return "sizeof " + render_c(*e.a);
    case ExprKind::InitList: {
      std::string s = "{";
      for (size_t i = 0; i < e.args.size(); ++i) {
        if (i) s += ", ";
        s += render_c(*e.args[i]);
      }
      return s + "}";
    }
  }
  return "";
}

// Substitutes macro parameters into a replacement body, token-boundary and
// string aware.
std::string substitute_macro_params(
    const std::string& body, const std::vector<std::string>& params,
    const std::vector<std::string>& arg_texts) {
  std::string out;
  size_t i = 0;
  auto is_ident_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  };
  while (i < body.size()) {
    char c = body[i];
    if (c == '"' || c == '\'') {
      char quote = c;
      out.push_back(c);
      ++i;
      while (i < body.size()) {
        out.push_back(body[i]);
        if (body[i] == '\\' && i + 1 < body.size()) {
          out.push_back(body[i + 1]);
          i += 2;
          continue;
        }
        if (body[i] == quote) {
          ++i;
          break;
        }
        ++i;
      }
      continue;
    }
    if (is_ident_char(c) && !std::isdigit(static_cast<unsigned char>(c))) {
      size_t b = i;
      while (i < body.size() && is_ident_char(body[i])) ++i;
      std::string word = body.substr(b, i - b);
      bool replaced = false;
      for (size_t p = 0; p < params.size(); ++p) {
        if (word == params[p]) {
          // an occurrence already wrapped as (a) needs no second wrap
          bool pre_paren = b > 0 && body[b - 1] == '(';
          bool post_paren = i < body.size() && body[i] == ')';
          if (pre_paren && post_paren)
            out += arg_texts[p];
          else
            out += "(" + arg_texts[p] + ")";
          replaced = true;
          break;
        }
      }
      if (!replaced) out += word;
      continue;
    }
    out.push_back(c);
    ++i;
  }
  return out;
}

// ---------------------------------------------------------------------------
// printf format handling: formats are preserved verbatim except that %u and
// %zu are remapped to %d for runtime safety (arguments are already masked to
// their unsigned values by the unsigned rule).

std::string remap_format_literal(const std::string& spelling) {
  std::string out;
  out.reserve(spelling.size());
  for (size_t i = 0; i < spelling.size(); ++i) {
    char c = spelling[i];
    if (c != '%') {
      out.push_back(c);
      continue;
    }
    if (i + 1 < spelling.size() && spelling[i + 1] == '%') {
      out += "%%";
      ++i;
      continue;
    }
    if (i + 1 < spelling.size() && spelling[i + 1] == 'u') {
      out += "%d";
      ++i;
      continue;
    }
    if (i + 2 < spelling.size() && spelling[i + 1] == 'z' &&
        spelling[i + 2] == 'u') {
      out += "%d";
      i += 2;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Shared literal rendering

std::string render_int_literal(const Expr& e) {
  std::string s = e.spelling;
  if (s == "NULL") return "0";
  while (!s.empty() && (s.back() == 'u' || s.back() == 'U' || s.back() == 'l' ||
                        s.back() == 'L'))
    s.pop_back();
  if (e.int_value > 2147483647LL || e.int_value < -2147483648LL) s += "L";
  return s;
}

std::string indent_str(int depth) { return std::string(depth * 4, ' '); }

// ---------------------------------------------------------------------------
// Record translation

std::string hex_const(long long v) {
  std::ostringstream os;
  os << "0x" << std::hex << std::uppercase << v;
  return os.str();
}

JavaSnippet translate_bitfield_record(const RecordDecl& rec,
                                      const TranslationContext& ctx) {
  (void)ctx;
  std::vector<std::string> lines;
  lines.push_back("public static class " + rec.name + " {");
  lines.push_back("    private int bits;");
  lines.push_back("");
  lines.push_back("    public " + rec.name + "() {");
  lines.push_back("    }");
  lines.push_back("");
  lines.push_back("    public " + rec.name + "(" + rec.name + " other) {");
  lines.push_back("        this.bits = other.bits;");
  lines.push_back("    }");
  lines.push_back("");

  struct Slot {
    std::string name;
    int width;
    int offset;
    bool is_signed;
  };
  std::vector<Slot> slots;
  int bit = 0;
  for (const auto& f : rec.fields) {
    if (f.bit_width < 0)
      unsupported_here("mixing bitfields and plain fields", f.span);
    if (bit + f.bit_width > 32)
      unsupported_here("bitfields exceeding one 32-bit unit", f.span);
    bool is_signed = f.type.kind == TypeKind::Int;
    if (!is_signed && f.type.kind != TypeKind::UInt)
      unsupported_here("bitfield base type " + f.type.describe(), f.span);
    slots.push_back({f.name, f.bit_width, bit, is_signed});
    bit += f.bit_width;
  }

  std::string all_params, all_body;
  for (size_t i = 0; i < slots.size(); ++i) {
    if (i) all_params += ", ";
    all_params += "int " + slots[i].name;
  }
  lines.push_back("    public " + rec.name + "(" + all_params + ") {");
  for (const auto& s : slots)
    lines.push_back("        set_" + s.name + "(" + s.name + ");");
  lines.push_back("    }");

  for (const auto& s : slots) {
    long long mask = (1LL << s.width) - 1;
    long long sign_bit = 1LL << (s.width - 1);
    lines.push_back("");
    lines.push_back("    public int get_" + s.name + "() {");
    lines.push_back("        int value = (this.bits >> " +
                    std::to_string(s.offset) + ") & " + hex_const(mask) + ";");
    if (s.is_signed && s.width > 0) {
      lines.push_back("        if ((value & " + hex_const(sign_bit) +
                      ") != 0) {");
      lines.push_back("            value |= ~" + hex_const(mask) + ";");
      lines.push_back("        }");
    }
    lines.push_back("        return value;");
    lines.push_back("    }");
    lines.push_back("");
    lines.push_back("    public void set_" + s.name + "(int value) {");
    lines.push_back("        this.bits = (this.bits & ~(" + hex_const(mask) +
                    " << " + std::to_string(s.offset) + ")) | ((value & " +
                    hex_const(mask) + ") << " + std::to_string(s.offset) +
                    ");");
    lines.push_back("    }");
  }
  lines.push_back("}");

  std::string text;
  for (const auto& l : lines) text += l + "\n";
  return {SnippetKind::NestedClass, rec.name, text};
}

JavaSnippet translate_record_impl(const RecordDecl& rec,
                                  const TranslationContext& ctx) {
  if (rec.rkind == RecordKind::Union)
    return {SnippetKind::NestedClass, rec.name, ""};

  if (rec.rkind == RecordKind::Enum) {
    std::string text = "public static class " + rec.name + " {\n";
    for (const auto& c : rec.consts)
      text += "    public static final int " + c.name + " = " +
              std::to_string(c.value) + ";\n";
    text += "}\n";
    return {SnippetKind::NestedClass, rec.name, text};
  }

  bool any_bitfield = false;
  for (const auto& f : rec.fields)
    if (f.bit_width >= 0) any_bitfield = true;
  if (any_bitfield) return translate_bitfield_record(rec, ctx);

  struct FieldInfo {
    std::string name;
    JType jt;
    bool record_field;
    long long char_len = -1;
  };
  std::vector<FieldInfo> fields;
  for (const auto& f : rec.fields) {
    MappedType mt = map_type(f.type, ctx, TypePos::Field, f.span);
    bool is_record_field = f.type.kind == TypeKind::Record;
    long long char_len =
        f.type.is_char_array() ? f.type.array_len : -1;
    fields.push_back({f.name, mt.jt, is_record_field, char_len});
  }

  std::vector<std::string> lines;
  lines.push_back("public static class " + rec.name + " {");
  for (const auto& f : fields) {
    if (f.char_len >= 0) {
      lines.push_back("    public char[] " + f.name + " = new char[" +
                      std::to_string(f.char_len) + "];");
    } else if (f.record_field) {
      lines.push_back("    public " + f.jt.str() + " " + f.name + " = new " +
                      f.jt.str() + "();");
    } else {
      lines.push_back("    public " + f.jt.str() + " " + f.name + ";");
    }
  }
  lines.push_back("");
  lines.push_back("    public " + rec.name + "() {");
  lines.push_back("    }");
  lines.push_back("");
  lines.push_back("    public " + rec.name + "(" + rec.name + " other) {");
  for (const auto& f : fields) {
    if (f.char_len >= 0) {
      lines.push_back("        this." + f.name + " = other." + f.name +
                      ".clone();");
    } else if (f.record_field) {
      lines.push_back("        this." + f.name + " = new " + f.jt.str() +
                      "(other." + f.name + ");");
    } else {
      lines.push_back("        this." + f.name + " = other." + f.name + ";");
    }
  }
  lines.push_back("    }");
  lines.push_back("");
  std::string all_params;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) all_params += ", ";
    all_params += (fields[i].char_len >= 0 ? "char[]" : fields[i].jt.str()) +
                  " " + fields[i].name;
  }
  lines.push_back("    public " + rec.name + "(" + all_params + ") {");
  for (const auto& f : fields)
    lines.push_back("        this." + f.name + " = " + f.name + ";");
  lines.push_back("    }");
  lines.push_back("}");

  std::string text;
  for (const auto& l : lines) text += l + "\n";
  return {SnippetKind::NestedClass, rec.name, text};
}

// ---------------------------------------------------------------------------
// Function translation

class FunctionTranslator {
 public:
  FunctionTranslator(const FunctionDecl& fn, const TranslationContext& ctx)
      : fn_(fn), ctx_(ctx) {}

  std::string run();

 private:
  struct VarInfo {
    CType ctype;
    JType jtype;
    Mask mask = Mask::None;
    enum class Repr { Plain, ArrayCursor, UnionLocals, OutScalar } repr =
        Repr::Plain;
    // ArrayCursor
    std::string index_name, array_name;
    // UnionLocals
    std::string union_tag;
    std::map<std::string, std::string> member_local;  // member -> local name
    std::string last_member;
  };

  const FunctionDecl& fn_;
  const TranslationContext& ctx_;
  std::vector<std::map<std::string, VarInfo>> scopes_;
  std::vector<std::string> lines_;
  int indent_ = 0;
  bool is_main_ = false;
  std::string out_param_;  // name of the removed T** parameter
  const Stmt* trailing_main_return_ = nullptr;
  std::set<std::string> out_scalars_;  // caller locals filled via out-params
  std::map<std::string, std::string> goto_break_;  // label -> break target
  int macro_depth_ = 0;
  // keeps re-parsed macro expansions alive for the duration of translation
  std::vector<std::unique_ptr<CSourceFile>> owned_sources_;
  std::vector<ExprPtr> owned_exprs_;
  std::vector<std::vector<StmtPtr>> owned_stmts_;

  // -- infrastructure

  void emit(const std::string& line) {
    if (line.empty())
      lines_.push_back("");
    else
      lines_.push_back(indent_str(indent_) + line);
  }

  [[noreturn]] void unresolved(const std::string& name, Span span) {
    fail_at(ErrorKind::Unresolved,
            "unresolved symbol '" + name + "' in function '" + fn_.name + "'",
            span);
  }

  VarInfo* find_var(const std::string& name) {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto f = it->find(name);
      if (f != it->end()) return &f->second;
    }
    return nullptr;
  }

  VarInfo& declare(const std::string& name, VarInfo info) {
    return scopes_.back()[name] = std::move(info);
  }

  const Expr* strip_parens(const Expr* e) const {
    while (e && e->kind == ExprKind::Paren) e = e->a.get();
    return e;
  }

  bool expr_has_arithmetic(const Expr& e) const {
    switch (e.kind) {
      case ExprKind::Binary: {
        static const std::set<std::string> arith = {"+", "-", "*", "/", "%",
                                                    "<<", ">>", "&", "|", "^"};
        if (arith.count(e.spelling)) return true;
        return expr_has_arithmetic(*e.a) || expr_has_arithmetic(*e.b);
      }
      case ExprKind::Unary:
        if (e.spelling == "-" || e.spelling == "~" || e.spelling == "++" ||
            e.spelling == "--")
          return true;
        return e.a && expr_has_arithmetic(*e.a);
      case ExprKind::Paren:
        return expr_has_arithmetic(*e.a);
      case ExprKind::Ternary:
        return expr_has_arithmetic(*e.b) || expr_has_arithmetic(*e.c);
      default:
        return false;
    }
  }

  std::string masked(const std::string& text, Mask m, const Expr& rhs) {
    if (m == Mask::None || !expr_has_arithmetic(rhs)) return text;
    return "(" + text + ") & " + mask_literal(m);
  }

  bool expr_has_side_effects(const Expr& e) const {
    if (e.kind == ExprKind::Call || e.kind == ExprKind::Assign) return true;
    if (e.kind == ExprKind::Unary &&
        (e.spelling == "++" || e.spelling == "--"))
      return true;
    for (const Expr* child : {e.a.get(), e.b.get(), e.c.get()})
      if (child && expr_has_side_effects(*child)) return true;
    for (const auto& arg : e.args)
      if (expr_has_side_effects(*arg)) return true;
    return false;
  }

  // Resolution check for expressions whose value is discarded: every
  // identifier must still land in exactly one view.
  void check_resolvable(const Expr& e) {
    if (e.kind == ExprKind::Ident) {
      const std::string& name = e.spelling;
      if (!find_var(name) && !ctx_.globals.count(name) &&
          !ctx_.enum_consts.count(name) && !ctx_.macros.count(name) &&
          !ctx_.functions.count(name) && name != "NULL")
        unresolved(name, e.span);
    }
    for (const Expr* child : {e.a.get(), e.b.get(), e.c.get()})
      if (child) check_resolvable(*child);
    for (const auto& arg : e.args) check_resolvable(*arg);
  }

  // -- type queries

  std::optional<CType> ctype_of_ident(const std::string& name) {
    if (VarInfo* v = find_var(name)) return v->ctype;
    auto g = ctx_.globals.find(name);
    if (g != ctx_.globals.end()) return g->second->type;
    return std::nullopt;
  }

  // C type of an expression, as far as the rules need it.
  std::optional<CType> ctype_of(const Expr& e) {
    switch (e.kind) {
      case ExprKind::Ident:
        return ctype_of_ident(e.spelling);
      case ExprKind::Paren:
        return ctype_of(*e.a);
      case ExprKind::Member: {
        auto base = ctype_of(*e.a);
        if (!base) return std::nullopt;
        CType rt = *base;
        if (rt.is_pointer() && rt.inner) rt = *rt.inner;
        if (rt.kind != TypeKind::Record) return std::nullopt;
        const FieldDecl* f = ctx_.find_field(rt.name, e.member);
        if (!f) return std::nullopt;
        return f->type;
      }
      case ExprKind::Index: {
        auto base = ctype_of(*e.a);
        if (base && base->is_array() && base->inner) return *base->inner;
        if (base && base->is_pointer() && base->inner) return *base->inner;
        return std::nullopt;
      }
      case ExprKind::Unary:
        if (e.spelling == "*" && e.a) {
          auto base = ctype_of(*e.a);
          if (base && (base->is_pointer() || base->is_array()) && base->inner)
            return *base->inner;
          return std::nullopt;
        }
        return e.a ? ctype_of(*e.a) : std::nullopt;
      case ExprKind::Cast:
        return e.type;
      case ExprKind::Call: {
        const Expr* callee = strip_parens(e.a.get());
        if (callee && callee->kind == ExprKind::Ident) {
          auto fit = ctx_.functions.find(callee->spelling);
          if (fit != ctx_.functions.end()) return fit->second->ret;
        }
        return std::nullopt;
      }
      case ExprKind::IntLit:
        return CType::basic(TypeKind::Int);
      case ExprKind::FloatLit:
        return CType::basic(e.spelling.find('f') != std::string::npos ||
                                    e.spelling.find('F') != std::string::npos
                                ? TypeKind::Float
                                : TypeKind::Double);
      case ExprKind::StrLit:
        return CType::pointer_to(CType::basic(TypeKind::Char));
      case ExprKind::CharLit:
        return CType::basic(TypeKind::Char);
      default:
        return std::nullopt;
    }
  }

  bool is_reference_like(const Expr& e) {
    auto t = ctype_of(e);
    if (!t) return false;
    if (t->is_pointer() || t->is_array() || t->kind == TypeKind::Record)
      return true;
    return false;
  }

  // -- conditions (R-bool)

  static bool boolean_shaped(const Expr& e) {
    if (e.kind == ExprKind::Paren) return boolean_shaped(*e.a);
    if (e.kind == ExprKind::Binary) {
      const std::string& op = e.spelling;
      return op == "<" || op == ">" || op == "<=" || op == ">=" ||
             op == "==" || op == "!=" || op == "&&" || op == "||";
    }
    if (e.kind == ExprKind::Unary) return e.spelling == "!";
    return false;
  }

  std::string render_condition(const Expr& e) {
    if (e.kind == ExprKind::Paren) return "(" + render_condition(*e.a) + ")";
    if (e.kind == ExprKind::Binary &&
        (e.spelling == "&&" || e.spelling == "||")) {
      return render_condition(*e.a) + " " + e.spelling + " " +
             render_condition(*e.b);
    }
    if (e.kind == ExprKind::Unary && e.spelling == "!") {
      return "!(" + render_condition(*e.a) + ")";
    }
    if (boolean_shaped(e)) return render(e);
    // integer (or reference) used in boolean position
    std::string text = render(e);
    bool atom = e.kind == ExprKind::Ident || e.kind == ExprKind::Member ||
                e.kind == ExprKind::Call || e.kind == ExprKind::Paren ||
                e.kind == ExprKind::Index;
    if (!atom) text = "(" + text + ")";
    if (is_reference_like(e)) return text + " != null";
    return text + " != 0";
  }

  // Renders an expression used as a value. C comparisons yield ints; Java
  // booleans need an explicit bridge back.
  std::string render_value(const Expr& e) {
    if (boolean_shaped(e)) return "((" + render_condition(e) + ") ? 1 : 0)";
    return render(e);
  }

  // -- macro inlining (R-macro)

  std::string expand_macro_call_text(const MacroDef& def,
                                     const std::vector<ExprPtr>& args,
                                     Span span) {
    if (macro_depth_ > 16)
      unsupported_here("macro expansion exceeds depth limit", span);
    std::vector<std::string> arg_texts;
    for (const auto& a : args) arg_texts.push_back(render_c(*a));
    if (def.function_like()) {
      if (arg_texts.size() != def.params->size())
        fail_at(ErrorKind::Syntax,
                "macro '" + def.name + "' expects " +
                    std::to_string(def.params->size()) + " arguments, got " +
                    std::to_string(arg_texts.size()),
                span);
      return substitute_macro_params(def.body, *def.params, arg_texts);
    }
    return def.body;
  }

  std::string render_macro_expr(const MacroDef& def,
                                const std::vector<ExprPtr>& args, Span span) {
    std::string text = expand_macro_call_text(def, args, span);
    auto src = std::make_unique<CSourceFile>("<macro " + def.name + ">", text);
    ExprPtr parsed;
    try {
      parsed = parse_expression_snippet(*src);
    } catch (const Error& e) {
      fail_at(ErrorKind::Syntax,
              "macro '" + def.name + "' does not expand to an expression: " +
                  e.what(),
              span);
    }
    ++macro_depth_;
    std::string out = render(*parsed);
    --macro_depth_;
    owned_sources_.push_back(std::move(src));
    owned_exprs_.push_back(std::move(parsed));
    return out;
  }

  bool try_expand_macro_stmt(const Expr& call_expr, Span span) {
    const Expr* callee = strip_parens(call_expr.a.get());
    if (!callee || callee->kind != ExprKind::Ident) return false;
    auto mit = ctx_.macros.find(callee->spelling);
    if (mit == ctx_.macros.end()) return false;
    const MacroDef& def = *mit->second;
    std::string text = expand_macro_call_text(def, call_expr.args, span) + ";";
    auto src = std::make_unique<CSourceFile>("<macro " + def.name + ">", text);
    std::vector<StmtPtr> stmts;
    try {
      stmts = parse_statement_snippet(*src);
    } catch (const Error&) {
      return false;  // expression-shaped macro; caller renders it instead
    }
    ++macro_depth_;
    for (const auto& s : stmts) translate_stmt(*s);
    --macro_depth_;
    owned_sources_.push_back(std::move(src));
    owned_stmts_.push_back(std::move(stmts));
    return true;
  }

  // -- expression rendering

  std::string render_union_read(VarInfo& v, const std::string& member,
                                Span span) {
    const FieldDecl* field = ctx_.find_field(v.union_tag, member);
    if (!field) unresolved(v.union_tag + "." + member, span);
    auto it = v.member_local.find(member);
    if (it != v.member_local.end() && v.last_member == member)
      return it->second;
    if (v.last_member.empty())
      unsupported_here("read of union member '" + member +
                           "' before any member was written",
                       span);
    const FieldDecl* last = ctx_.find_field(v.union_tag, v.last_member);
    std::string last_local = v.member_local.at(v.last_member);
    TypeKind from = last->type.kind, to = field->type.kind;
    if (from == TypeKind::Float && (to == TypeKind::Int || to == TypeKind::UInt))
      return "Float.floatToIntBits(" + last_local + ")";
    if ((from == TypeKind::Int || from == TypeKind::UInt) &&
        to == TypeKind::Float)
      return "Float.intBitsToFloat(" + last_local + ")";
    if (from == TypeKind::Double && to == TypeKind::Long)
      return "Double.doubleToLongBits(" + last_local + ")";
    if (from == TypeKind::Long && to == TypeKind::Double)
      return "Double.longBitsToDouble(" + last_local + ")";
    unsupported_here("union reinterpretation from " + last->type.describe() +
                         " to " + field->type.describe(),
                     span);
  }

  // Renders a call argument against the callee's parameter type, dropping
  // address-of and turning named functions into method references.
  std::string render_call_arg(const Expr& arg, const CType* param_type) {
    const Expr* bare = strip_parens(&arg);
    if (bare->kind == ExprKind::Unary && bare->spelling == "&" &&
        bare->prefix) {
      // R-addr: pass the Java reference directly
      return render(*bare->a);
    }
    if (param_type && param_type->kind == TypeKind::FnPtr &&
        bare->kind == ExprKind::Ident && ctx_.functions.count(bare->spelling)) {
      // R-fnptr: named function argument becomes a method reference
      return ctx_.class_name + "::" + bare->spelling;
    }
    return render_value(arg);
  }

  std::string render_call(const Expr& e) {
    const Expr* callee = strip_parens(e.a.get());
    if (!callee || callee->kind != ExprKind::Ident)
      unsupported_here("indirect call through a computed expression", e.span);
    const std::string& name = callee->spelling;

    if (auto mit = ctx_.macros.find(name); mit != ctx_.macros.end())
      return render_macro_expr(*mit->second, e.args, e.span);

    if (name == "printf") {
      if (e.args.empty() || strip_parens(e.args[0].get())->kind !=
                                ExprKind::StrLit)
        unsupported_here("printf without a literal format string", e.span);
      const Expr* fmt = strip_parens(e.args[0].get());
      std::string remapped = remap_format_literal(fmt->spelling);
      // integer conversions reject Java chars; C promotes them
      std::vector<char> convs;
      for (size_t i = 0; i < remapped.size(); ++i) {
        if (remapped[i] != '%') continue;
        size_t j = i + 1;
        while (j < remapped.size() &&
               (std::isdigit(static_cast<unsigned char>(remapped[j])) ||
                remapped[j] == '.' || remapped[j] == '-' || remapped[j] == '+' ||
                remapped[j] == ' ' || remapped[j] == '0'))
          ++j;
        if (j < remapped.size() && remapped[j] != '%') convs.push_back(remapped[j]);
        i = j;
      }
      std::string out = "System.out.printf(" + remapped;
      for (size_t i = 1; i < e.args.size(); ++i) {
        std::string arg = render_value(*e.args[i]);
        char conv = i - 1 < convs.size() ? convs[i - 1] : '\0';
        if (conv == 'd' || conv == 'x' || conv == 'o') {
          if (auto t = ctype_of(*e.args[i]); t && t->kind == TypeKind::Char)
            arg = "(int) (" + arg + ")";
        }
        out += ", " + arg;
      }
      return out + ")";
    }
    if (name == "strlen") {
      if (e.args.size() != 1)
        fail_at(ErrorKind::Syntax, "strlen expects one argument", e.span);
      return render(*e.args[0]) + ".length()";
    }
    if (name == "strcpy" || name == "strcat")
      unsupported_here(name + " used as a value", e.span);
    if (name == "malloc" || name == "free")
      unsupported_here(name + " in this position", e.span);

    if (VarInfo* v = find_var(name); v && v->jtype.is(JType::K::FnInt2)) {
      // call through a function-pointer value
      std::string args;
      for (size_t i = 0; i < e.args.size(); ++i) {
        if (i) args += ", ";
        args += render_value(*e.args[i]);
      }
      return name + ".applyAsInt(" + args + ")";
    }

    auto fit = ctx_.functions.find(name);
    if (fit == ctx_.functions.end()) unresolved(name, e.span);
    const FunctionDecl* target = fit->second;

    // calls to out-parameter functions are rewritten at statement level
    for (const auto& p : target->params) {
      if (p.type.is_pointer() && p.type.inner && p.type.inner->is_pointer())
        unsupported_here("call to out-parameter function '" + name +
                             "' outside a simple call statement",
                         e.span);
    }

    std::string out = name + "(";
    for (size_t i = 0; i < e.args.size(); ++i) {
      if (i) out += ", ";
      const CType* pt =
          i < target->params.size() ? &target->params[i].type : nullptr;
      out += render_call_arg(*e.args[i], pt);
    }
    return out + ")";
  }

  std::string render_member(const Expr& e) {
    const Expr* base = strip_parens(e.a.get());
    if (base->kind == ExprKind::Ident) {
      if (VarInfo* v = find_var(base->spelling)) {
        if (v->repr == VarInfo::Repr::UnionLocals)
          return render_union_read(*v, e.member, e.span);
        CType rt = v->ctype;
        if (rt.is_pointer() && rt.inner) rt = *rt.inner;
        if (rt.kind == TypeKind::Record) {
          const FieldDecl* f = ctx_.find_field(rt.name, e.member);
          if (f && f->bit_width >= 0)
            return base->spelling + ".get_" + e.member + "()";
        }
      }
    }
    return render(*e.a) + "." + e.member;
  }

  std::string render_deref(const Expr& e) {
    const Expr* inner = strip_parens(e.a.get());
    // *(p + k) / *(p - k) over an array cursor
    if (inner->kind == ExprKind::Binary &&
        (inner->spelling == "+" || inner->spelling == "-")) {
      const Expr* lhs = strip_parens(inner->a.get());
      const Expr* rhs = strip_parens(inner->b.get());
      const Expr* ptr_side = nullptr;
      const Expr* off_side = nullptr;
      if (lhs->kind == ExprKind::Ident && find_var(lhs->spelling) &&
          find_var(lhs->spelling)->repr == VarInfo::Repr::ArrayCursor) {
        ptr_side = lhs;
        off_side = rhs;
      } else if (inner->spelling == "+" && rhs->kind == ExprKind::Ident &&
                 find_var(rhs->spelling) &&
                 find_var(rhs->spelling)->repr == VarInfo::Repr::ArrayCursor) {
        ptr_side = rhs;
        off_side = lhs;
      }
      if (ptr_side) {
        VarInfo* v = find_var(ptr_side->spelling);
        return v->array_name + "[" + v->index_name + " " + inner->spelling +
               " " + render(*off_side) + "]";
      }
    }
    if (inner->kind == ExprKind::Ident) {
      VarInfo* v = find_var(inner->spelling);
      if (v) {
        if (v->repr == VarInfo::Repr::ArrayCursor)
          return v->array_name + "[" + v->index_name + "]";
        if (v->repr == VarInfo::Repr::OutScalar) return inner->spelling;
        if (v->ctype.is_pointer() && v->ctype.inner &&
            v->ctype.inner->kind == TypeKind::Record)
          return inner->spelling;  // dereference of an object reference
      }
    }
    // *(T*)expr over a generic Object value
    if (inner->kind == ExprKind::Cast && inner->type.is_pointer()) {
      return render_object_cast(inner->type, *inner->a, e.span);
    }
    unsupported_here("pointer dereference in this form", e.span);
  }

  std::string render_object_cast(const CType& target, const Expr& operand,
                                 Span span) {
    const CType& pointee = *target.inner;
    std::string boxed;
    switch (pointee.kind) {
      case TypeKind::Int: boxed = "Integer"; break;
      case TypeKind::Float: boxed = "Float"; break;
      case TypeKind::Double: boxed = "Double"; break;
      case TypeKind::Long: boxed = "Long"; break;
      case TypeKind::Char: boxed = "String"; break;
      default:
        unsupported_here("cast of generic pointer to " + target.describe(),
                         span);
    }
    return "((" + boxed + ") " + render(operand) + ")";
  }

  std::string render(const Expr& e) {
    switch (e.kind) {
      case ExprKind::IntLit:
        return render_int_literal(e);
      case ExprKind::FloatLit:
      case ExprKind::CharLit:
        return e.spelling;
      case ExprKind::StrLit:
        return e.spelling;
      case ExprKind::Ident: {
        const std::string& name = e.spelling;
        if (VarInfo* v = find_var(name)) {
          if (v->repr == VarInfo::Repr::ArrayCursor)
            unsupported_here("raw pointer value '" + name + "'", e.span);
          if (v->repr == VarInfo::Repr::UnionLocals)
            unsupported_here("raw union value '" + name + "'", e.span);
          return name;
        }
        if (auto c = ctx_.enum_consts.find(name); c != ctx_.enum_consts.end())
          return c->second.enum_tag + "." + name;
        if (ctx_.globals.count(name)) return name;
        if (auto mit = ctx_.macros.find(name);
            mit != ctx_.macros.end() && !mit->second->function_like())
          return render_macro_expr(*mit->second, {}, e.span);
        if (ctx_.functions.count(name))
          unsupported_here("function '" + name +
                               "' used as a value outside a call or "
                               "function-pointer position",
                           e.span);
        unresolved(name, e.span);
      }
      case ExprKind::Paren:
        return "(" + render(*e.a) + ")";
      case ExprKind::Unary: {
        if (e.spelling == "&" && e.prefix)
          unsupported_here("address-of outside a call argument", e.span);
        if (e.spelling == "*" && e.prefix) return render_deref(e);
        if (e.spelling == "!" && e.prefix)
          return "!(" + render_condition(*e.a) + ")";
        if (e.spelling == "++" || e.spelling == "--") {
          const Expr* target = strip_parens(e.a.get());
          if (target->kind == ExprKind::Ident) {
            if (VarInfo* v = find_var(target->spelling)) {
              if (v->repr == VarInfo::Repr::ArrayCursor)
                return e.prefix ? e.spelling + v->index_name
                                : v->index_name + e.spelling;
              if (v->mask != Mask::None)
                unsupported_here(
                    "increment of an unsigned variable inside an expression",
                    e.span);
            }
          }
          return e.prefix ? e.spelling + render(*e.a)
                          : render(*e.a) + e.spelling;
        }
        return e.spelling + render(*e.a);
      }
      case ExprKind::Binary: {
        if (e.spelling == "&&" || e.spelling == "||")
          return render_condition(e);
        // operands are C ints even when they are comparisons
        std::string lhs = render_value(*e.a);
        std::string rhs = render_value(*e.b);
        if (e.spelling == "==" || e.spelling == "!=") {
          const Expr* l = strip_parens(e.a.get());
          const Expr* r = strip_parens(e.b.get());
          if (l->kind == ExprKind::IntLit && l->spelling == "NULL" &&
              is_reference_like(*e.b))
            lhs = "null";
          if (r->kind == ExprKind::IntLit && r->spelling == "NULL" &&
              is_reference_like(*e.a))
            rhs = "null";
        }
        return lhs + " " + e.spelling + " " + rhs;
      }
      case ExprKind::Assign:
        // assignment as a value is rare in the subset; emit directly
        return render_assign_text(e);
      case ExprKind::Ternary:
        return render_condition(*e.a) + " ? " + render_value(*e.b) + " : " +
               render_value(*e.c);
      case ExprKind::Call:
        return render_call(e);
      case ExprKind::Member:
        return render_member(e);
      case ExprKind::Index: {
        const Expr* base = strip_parens(e.a.get());
        if (base->kind == ExprKind::Ident) {
          if (VarInfo* v = find_var(base->spelling);
              v && v->repr == VarInfo::Repr::ArrayCursor) {
            return v->array_name + "[" + v->index_name + " + " +
                   render(*e.b) + "]";
          }
        }
        return render(*e.a) + "[" + render(*e.b) + "]";
      }
      case ExprKind::Cast: {
        const CType& t = e.type;
        if (t.is_pointer())
          return render_object_cast(t, *e.a, e.span);
        if (t.kind == TypeKind::UChar)
          return "(" + render(*e.a) + ") & 0xFF";
        if (t.kind == TypeKind::UInt)
          return "(" + render(*e.a) + ") & 0xFFFFFFFFL";
        MappedType mt = map_type(t, ctx_, TypePos::Local, e.span);
        const Expr* inner = strip_parens(e.a.get());
        if (mt.jt.is(JType::K::Int) && inner->kind == ExprKind::Ident) {
          if (VarInfo* v = find_var(inner->spelling);
              v && v->jtype.is(JType::K::Object))
            return "((Integer) " + inner->spelling + ")";
        }
        std::string operand = render(*e.a);
        bool atom = inner->kind == ExprKind::Ident ||
                    inner->kind == ExprKind::IntLit ||
                    inner->kind == ExprKind::FloatLit ||
                    inner->kind == ExprKind::Call ||
                    inner->kind == ExprKind::Member ||
                    e.a->kind == ExprKind::Paren;
        if (!atom) operand = "(" + operand + ")";
        return "(" + mt.jt.str() + ") " + operand;
      }
      case ExprKind::SizeofType:
        return std::to_string(platform_sizeof(e.type, ctx_));
      case ExprKind::SizeofExpr: {
        auto t = ctype_of(*e.a);
        if (!t)
          unsupported_here("sizeof over an expression of unknown type",
                           e.span);
        return std::to_string(platform_sizeof(*t, ctx_));
      }
      case ExprKind::InitList:
        unsupported_here("initializer list in this position", e.span);
    }
    unsupported_here("expression", e.span);
  }

  // -- assignments

  std::string compound_base_op(const std::string& op) {
    return op.substr(0, op.size() - 1);  // "+=" -> "+"
  }

  std::string render_assign_text(const Expr& e) {
    // default path: no special representation on the left
    return render(*e.a) + " " + e.spelling + " " + render(*e.b);
  }

  void translate_assign(const Expr& e) {
    const Expr* lhs = strip_parens(e.a.get());
    const std::string& op = e.spelling;

    // *out = expr inside an out-parameter function -> return
    if (!out_param_.empty() && lhs->kind == ExprKind::Unary &&
        lhs->spelling == "*" && lhs->prefix) {
      const Expr* target = strip_parens(lhs->a.get());
      if (target->kind == ExprKind::Ident && target->spelling == out_param_) {
        if (op != "=")
          unsupported_here("compound assignment through an out-parameter",
                           e.span);
        const Expr* rhs = strip_parens(e.b.get());
        std::string value;
        if (rhs->kind == ExprKind::Unary && rhs->spelling == "&" && rhs->prefix)
          value = render(*rhs->a);
        else
          value = render(*e.b);
        emit("return " + value + ";");
        return;
      }
    }

    // union member write
    if (lhs->kind == ExprKind::Member) {
      const Expr* base = strip_parens(lhs->a.get());
      if (base->kind == ExprKind::Ident) {
        if (VarInfo* v = find_var(base->spelling);
            v && v->repr == VarInfo::Repr::UnionLocals) {
          if (op != "=")
            unsupported_here("compound assignment to a union member", e.span);
          const FieldDecl* f = ctx_.find_field(v->union_tag, lhs->member);
          if (!f) unresolved(v->union_tag + "." + lhs->member, e.span);
          std::string rhs = render(*e.b);
          auto it = v->member_local.find(lhs->member);
          if (it == v->member_local.end()) {
            std::string local = base->spelling + "_" + lhs->member;
            MappedType mt = map_type(f->type, ctx_, TypePos::Local, f->span);
            emit(mt.jt.str() + " " + local + " = " + rhs + ";");
            v->member_local[lhs->member] = local;
          } else {
            emit(it->second + " = " + rhs + ";");
          }
          v->last_member = lhs->member;
          return;
        }
        // bitfield member write
        if (VarInfo* v = find_var(base->spelling)) {
          CType rt = v->ctype;
          if (rt.is_pointer() && rt.inner) rt = *rt.inner;
          if (rt.kind == TypeKind::Record) {
            const FieldDecl* f = ctx_.find_field(rt.name, lhs->member);
            if (f && f->bit_width >= 0) {
              std::string rhs;
              if (op == "=") {
                rhs = render(*e.b);
              } else {
                rhs = base->spelling + ".get_" + lhs->member + "() " +
                      compound_base_op(op) + " " + render(*e.b);
              }
              emit(base->spelling + ".set_" + lhs->member + "(" + rhs + ");");
              return;
            }
          }
        }
      }
    }

    // assignment to an unsigned variable: mask wraparound
    if (lhs->kind == ExprKind::Ident) {
      if (VarInfo* v = find_var(lhs->spelling); v && v->mask != Mask::None) {
        std::string rhs;
        if (op == "=") {
          rhs = masked(render_value(*e.b), v->mask, *e.b);
        } else {
          std::string base_op = compound_base_op(op);
          rhs = "(" + lhs->spelling + " " + base_op + " " + render(*e.b) +
                ") & " + mask_literal(v->mask);
        }
        emit(lhs->spelling + " = " + rhs + ";");
        return;
      }
      // pointer cursor reassignment: p = other_array
      if (VarInfo* v = find_var(lhs->spelling);
          v && v->repr == VarInfo::Repr::ArrayCursor) {
        const Expr* rhs = strip_parens(e.b.get());
        if (op == "=" && rhs->kind == ExprKind::Ident) {
          if (auto t = ctype_of_ident(rhs->spelling); t && t->is_array()) {
            emit(v->array_name + " = " + rhs->spelling + ";");
            emit(v->index_name + " = 0;");
            return;
          }
        }
        if (op == "+=" || op == "-=") {
          emit(v->index_name + " " + op + " " + render(*e.b) + ";");
          return;
        }
        unsupported_here("pointer assignment in this form", e.span);
      }
      // assignment of a struct value: copy semantics
      if (VarInfo* v = find_var(lhs->spelling);
          v && op == "=" && v->jtype.is(JType::K::Ref) &&
          v->ctype.kind == TypeKind::Record) {
        const Expr* rhs = strip_parens(e.b.get());
        if (auto t = ctype_of(*rhs); t && t->kind == TypeKind::Record) {
          emit(lhs->spelling + " = new " + v->jtype.str() + "(" +
               render(*e.b) + ");");
          return;
        }
      }
      // char variables need the narrowing cast Java requires
      if (VarInfo* v = find_var(lhs->spelling);
          v && op == "=" && v->jtype.is(JType::K::Char) &&
          strip_parens(e.b.get())->kind != ExprKind::CharLit) {
        emit(lhs->spelling + " = (char) (" + render_value(*e.b) + ");");
        return;
      }
    }

    // unsigned globals and record fields wrap exactly like unsigned locals
    if (auto lt = ctype_of(*lhs);
        lt && (lt->kind == TypeKind::UInt || lt->kind == TypeKind::UChar)) {
      Mask m = lt->kind == TypeKind::UInt ? Mask::U32 : Mask::U8;
      std::string target = render(*e.a);
      if (op == "=") {
        emit(target + " = " + masked(render_value(*e.b), m, *e.b) + ";");
      } else {
        emit(target + " = (" + target + " " + compound_base_op(op) + " " +
             render(*e.b) + ") & " + mask_literal(m) + ";");
      }
      return;
    }

    if (op == "=") {
      emit(render(*e.a) + " = " + render_value(*e.b) + ";");
      return;
    }
    emit(render(*e.a) + " " + op + " " + render(*e.b) + ";");
  }

  // -- statements

  void translate_expr_stmt(const Expr& e, Span span) {
    const Expr* bare = strip_parens(&e);

    if (bare->kind == ExprKind::Assign) {
      translate_assign(*bare);
      return;
    }

    if (bare->kind == ExprKind::Call) {
      const Expr* callee = strip_parens(bare->a.get());
      if (callee && callee->kind == ExprKind::Ident) {
        const std::string& name = callee->spelling;

        if (ctx_.macros.count(name)) {
          if (try_expand_macro_stmt(*bare, span)) return;
          emit(render(*bare) + ";");
          return;
        }
        if (name == "free") {
          // R-mem: the garbage collector owns it now
          return;
        }
        if (name == "strcpy" || name == "strcat") {
          if (bare->args.size() != 2)
            fail_at(ErrorKind::Syntax, name + " expects two arguments", span);
          std::string dst = render(*bare->args[0]);
          std::string src = render(*bare->args[1]);
          if (name == "strcpy")
            emit(dst + " = " + src + ";");
          else
            emit(dst + " = " + dst + " + " + src + ";");
          return;
        }

        // call to an out-parameter function: x = f(rest)
        auto fit = ctx_.functions.find(name);
        if (fit != ctx_.functions.end()) {
          const FunctionDecl* target = fit->second;
          int out_index = -1;
          for (size_t i = 0; i < target->params.size(); ++i) {
            const CType& pt = target->params[i].type;
            if (pt.is_pointer() && pt.inner && pt.inner->is_pointer()) {
              if (out_index >= 0)
                unsupported_here("multiple out-parameters in call to '" +
                                     name + "'",
                                 span);
              out_index = static_cast<int>(i);
            }
          }
          if (out_index >= 0) {
            if (bare->args.size() != target->params.size())
              fail_at(ErrorKind::Syntax,
                      "call to '" + name + "' with wrong arity", span);
            const Expr* out_arg = strip_parens(bare->args[out_index].get());
            if (out_arg->kind != ExprKind::Unary || out_arg->spelling != "&")
              unsupported_here(
                  "out-parameter argument is not an address-of expression",
                  span);
            const Expr* target_var = strip_parens(out_arg->a.get());
            if (target_var->kind != ExprKind::Ident)
              unsupported_here("out-parameter argument form", span);
            std::string call = name + "(";
            bool first = true;
            for (size_t i = 0; i < bare->args.size(); ++i) {
              if (static_cast<int>(i) == out_index) continue;
              if (!first) call += ", ";
              first = false;
              call += render_call_arg(*bare->args[i], &target->params[i].type);
            }
            call += ")";
            emit(target_var->spelling + " = " + call + ";");
            return;
          }
        }
      }
      emit(render(*bare) + ";");
      return;
    }

    if (bare->kind == ExprKind::Unary &&
        (bare->spelling == "++" || bare->spelling == "--")) {
      const Expr* target = strip_parens(bare->a.get());
      Mask m = Mask::None;
      if (target->kind == ExprKind::Ident) {
        if (VarInfo* v = find_var(target->spelling)) m = v->mask;
      }
      if (m == Mask::None) {
        if (auto lt = ctype_of(*target)) {
          if (lt->kind == TypeKind::UInt) m = Mask::U32;
          if (lt->kind == TypeKind::UChar) m = Mask::U8;
        }
      }
      if (m != Mask::None &&
          (target->kind == ExprKind::Ident || target->kind == ExprKind::Member)) {
        std::string name = render(*target);
        const char* op = bare->spelling == "++" ? "+" : "-";
        emit(name + " = (" + name + " " + op + " 1) & " + mask_literal(m) +
             ";");
        return;
      }
      emit(render(*bare) + ";");
      return;
    }

    if (bare->kind == ExprKind::Ident && ctx_.macros.count(bare->spelling)) {
      const MacroDef& def = *ctx_.macros.at(bare->spelling);
      if (!def.function_like()) {
        std::string text = def.body + ";";
        auto src =
            std::make_unique<CSourceFile>("<macro " + def.name + ">", text);
        std::vector<StmtPtr> stmts;
        try {
          stmts = parse_statement_snippet(*src);
        } catch (const Error&) {
          emit(render(*bare) + ";");
          return;
        }
        ++macro_depth_;
        for (const auto& s : stmts) translate_stmt(*s);
        --macro_depth_;
        owned_sources_.push_back(std::move(src));
        owned_stmts_.push_back(std::move(stmts));
        return;
      }
    }

    emit(render(*bare) + ";");
  }

  void translate_decl(const VarDecl& d, Span span) {
    const CType& t = d.type;

    // union locals disappear (R-union)
    if (t.kind == TypeKind::Record) {
      const auto* view = ctx_.find_record(t.name);
      if (view && view->kind == RecordKind::Union) {
        if (d.init)
          unsupported_here("initialized union variable", span);
        VarInfo v;
        v.ctype = t;
        v.repr = VarInfo::Repr::UnionLocals;
        v.union_tag = t.name;
        declare(d.name, std::move(v));
        return;
      }
    }

    // pointer locals
    if (t.is_pointer()) {
      const CType& pointee = *t.inner;

      // scalar pointer filled through an out-parameter call
      if (out_scalars_.count(d.name) && !pointee.is_pointer() &&
          pointee.kind != TypeKind::Record) {
        MappedType mt = map_type(pointee, ctx_, TypePos::Local, span);
        VarInfo v;
        v.ctype = t;
        v.jtype = mt.jt;
        v.repr = VarInfo::Repr::OutScalar;
        declare(d.name, std::move(v));
        std::string zero = mt.jt.is(JType::K::Float) ? "0.0f" : "0";
        emit(mt.jt.str() + " " + d.name + " = " + zero + ";");
        return;
      }

      // pointer into an array: index + array reference pair (R-ptr)
      if (d.init) {
        const Expr* init = strip_parens(d.init.get());
        if (init->kind == ExprKind::Ident) {
          if (auto at = ctype_of_ident(init->spelling); at && at->is_array() &&
              pointee.kind != TypeKind::Record &&
              pointee.kind != TypeKind::Char) {
            MappedType elem = map_type(*at, ctx_, TypePos::Local, span);
            VarInfo v;
            v.ctype = t;
            v.jtype = elem.jt;
            v.repr = VarInfo::Repr::ArrayCursor;
            v.index_name = d.name + "_index";
            v.array_name = d.name + "_array";
            emit("int " + v.index_name + " = 0;");
            emit(elem.jt.str() + " " + v.array_name + " = " +
                 init->spelling + ";");
            declare(d.name, std::move(v));
            return;
          }
        }
      }

      // record pointer: malloc -> constructor (R-mem), &x / other ref direct
      if (pointee.kind == TypeKind::Record) {
        const auto* view = ctx_.find_record(pointee.name);
        if (!view)
          fail_at(ErrorKind::Unresolved,
                  "unresolved record type '" + pointee.name + "'", span);
        if (view->kind == RecordKind::Union)
          unsupported_here("pointer to union", span);
        std::string init_text = "null";
        if (d.init) {
          const Expr* init = strip_parens(d.init.get());
          if (is_malloc_call(*init)) {
            init_text = "new " + view->java_name + "()";
          } else if (init->kind == ExprKind::Unary && init->spelling == "&") {
            init_text = render(*init->a);
          } else if (init->kind == ExprKind::IntLit && init->int_value == 0) {
            init_text = "null";
          } else {
            init_text = render(*d.init);
          }
        }
        VarInfo v;
        v.ctype = t;
        v.jtype = JType::of_class(view->java_name);
        declare(d.name, std::move(v));
        emit(view->java_name + " " + d.name + " = " + init_text + ";");
        return;
      }

      // char* and void*
      MappedType mt = map_type(t, ctx_, TypePos::Local, span);
      std::string init_text;
      if (d.init) {
        const Expr* init = strip_parens(d.init.get());
        if (init->kind == ExprKind::Unary && init->spelling == "&")
          init_text = render(*init->a);
        else if (init->kind == ExprKind::IntLit && init->int_value == 0)
          init_text = "null";
        else
          init_text = render(*d.init);
      } else {
        init_text = mt.jt.is(JType::K::Str) ? "\"\"" : "null";
      }
      VarInfo v;
      v.ctype = t;
      v.jtype = mt.jt;
      declare(d.name, std::move(v));
      emit(mt.jt.str() + " " + d.name + " = " + init_text + ";");
      return;
    }

    // char buffers become Strings (R-str)
    if (t.is_char_array()) {
      VarInfo v;
      v.ctype = t;
      v.jtype = JType::basic(JType::K::Str);
      declare(d.name, std::move(v));
      std::string init_text = "\"\"";
      if (d.init) init_text = render(*d.init);
      emit("String " + d.name + " = " + init_text + ";");
      return;
    }

    // arrays
    if (t.is_array()) {
      MappedType mt = map_type(t, ctx_, TypePos::Local, span);
      VarInfo v;
      v.ctype = t;
      v.jtype = mt.jt;
      std::string text = mt.jt.str() + " " + d.name;
      if (d.init) {
        const Expr* init = strip_parens(d.init.get());
        if (init->kind == ExprKind::InitList) {
          std::string items;
          for (size_t i = 0; i < init->args.size(); ++i) {
            if (i) items += ", ";
            items += render(*init->args[i]);
          }
          text += " = {" + items + "}";
        } else {
          text += " = " + render(*d.init);
        }
      } else if (t.array_len >= 0) {
        text += " = new " + mt.jt.elem->str() + "[" +
                std::to_string(t.array_len) + "]";
      }
      declare(d.name, std::move(v));
      emit(text + ";");
      return;
    }

    // struct values
    if (t.kind == TypeKind::Record) {
      const auto* view = ctx_.find_record(t.name);
      if (!view)
        fail_at(ErrorKind::Unresolved, "unresolved record type '" + t.name + "'",
                span);
      std::string cls = view->java_name;
      std::string init_text = "new " + cls + "()";
      if (d.init) {
        const Expr* init = strip_parens(d.init.get());
        if (init->kind == ExprKind::InitList) {
          std::string items;
          for (size_t i = 0; i < init->args.size(); ++i) {
            if (i) items += ", ";
            items += render(*init->args[i]);
          }
          init_text = "new " + cls + "(" + items + ")";
        } else if (auto it = ctype_of(*init);
                   it && it->kind == TypeKind::Record) {
          init_text = "new " + cls + "(" + render(*d.init) + ")";  // copy
        } else {
          init_text = render(*d.init);
        }
      }
      VarInfo v;
      v.ctype = t;
      v.jtype = JType::of_class(cls);
      declare(d.name, std::move(v));
      emit(cls + " " + d.name + " = " + init_text + ";");
      return;
    }

    // function pointer locals
    if (t.kind == TypeKind::FnPtr) {
      MappedType mt = map_type(t, ctx_, TypePos::Local, span);
      std::string init_text = "null";
      if (d.init) {
        const Expr* init = strip_parens(d.init.get());
        if (init->kind == ExprKind::Ident && ctx_.functions.count(init->spelling))
          init_text = ctx_.class_name + "::" + init->spelling;
        else
          init_text = render(*d.init);
      }
      VarInfo v;
      v.ctype = t;
      v.jtype = mt.jt;
      declare(d.name, std::move(v));
      emit(mt.jt.str() + " " + d.name + " = " + init_text + ";");
      return;
    }

    // plain scalars and enums
    MappedType mt = map_type(t, ctx_, TypePos::Local, span);
    VarInfo v;
    v.ctype = t;
    v.jtype = mt.jt;
    v.mask = mt.mask;
    bool is_char_var = mt.jt.is(JType::K::Char);
    std::string text = mt.jt.str() + " " + d.name;
    if (d.init) {
      std::string init_text = masked(render_value(*d.init), mt.mask, *d.init);
      if (is_char_var && strip_parens(d.init.get())->kind != ExprKind::CharLit)
        init_text = "(char) (" + init_text + ")";
      text += " = " + init_text;
    }
    declare(d.name, std::move(v));
    emit(text + ";");
  }

  bool is_malloc_call(const Expr& e) {
    const Expr* bare = strip_parens(&e);
    if (bare->kind == ExprKind::Cast) bare = strip_parens(bare->a.get());
    if (bare->kind != ExprKind::Call) return false;
    const Expr* callee = strip_parens(bare->a.get());
    return callee && callee->kind == ExprKind::Ident &&
           callee->spelling == "malloc";
  }

  void translate_stmt(const Stmt& s) {
    switch (s.kind) {
      case StmtKind::Block: {
        emit("{");
        ++indent_;
        scopes_.emplace_back();
        translate_stmt_list(s.stmts);
        scopes_.pop_back();
        --indent_;
        emit("}");
        break;
      }
      case StmtKind::Decl:
        translate_decl(*s.decl, s.span);
        break;
      case StmtKind::ExprStmt:
        if (s.expr)
          translate_expr_stmt(*s.expr, s.span);
        else
          emit(";");
        break;
      case StmtKind::If: {
        emit("if (" + render_condition(*s.expr) + ") {");
        translate_nested(*s.body);
        if (s.else_body) {
          emit("} else {");
          translate_nested(*s.else_body);
        }
        emit("}");
        break;
      }
      case StmtKind::While:
        emit("while (" + render_condition(*s.expr) + ") {");
        translate_nested(*s.body);
        emit("}");
        break;
      case StmtKind::DoWhile:
        emit("do {");
        translate_nested(*s.body);
        emit("} while (" + render_condition(*s.expr) + ");");
        break;
      case StmtKind::For: {
        std::string init_text, cond_text, step_text;
        if (s.init_stmt) init_text = render_for_init(*s.init_stmt);
        if (s.expr) cond_text = render_condition(*s.expr);
        if (s.step) step_text = render_for_step(*s.step);
        emit("for (" + init_text + "; " + cond_text + "; " + step_text +
             ") {");
        translate_nested(*s.body);
        emit("}");
        break;
      }
      case StmtKind::Switch: {
        emit("switch (" + render(*s.expr) + ") {");
        ++indent_;
        for (const auto& c : s.cases) {
          if (c.label)
            emit("case " + render(*c.label) + ":");
          else
            emit("default:");
          ++indent_;
          scopes_.emplace_back();
          for (const auto& st : c.body) translate_stmt(*st);
          scopes_.pop_back();
          --indent_;
        }
        --indent_;
        emit("}");
        break;
      }
      case StmtKind::Return: {
        if (is_main_) {
          // main returns void; the C exit value is not part of the
          // comparison, but calls in it still run and symbols still resolve
          if (s.expr) {
            const Expr* bare = strip_parens(s.expr.get());
            if (bare->kind == ExprKind::Call) {
              translate_expr_stmt(*s.expr, s.span);
            } else if (expr_has_side_effects(*bare)) {
              unsupported_here("side effects in main's return value", s.span);
            } else {
              check_resolvable(*bare);
            }
          }
          if (&s != trailing_main_return_) emit("return;");
          break;
        }
        if (!out_param_.empty()) {
          if (s.expr)
            unsupported_here("return with value in an out-parameter function",
                             s.span);
          unsupported_here("early return in an out-parameter function",
                           s.span);
        }
        if (s.expr)
          emit("return " + render_value(*s.expr) + ";");
        else
          emit("return;");
        break;
      }
      case StmtKind::Break:
        emit("break;");
        break;
      case StmtKind::Continue:
        emit("continue;");
        break;
      case StmtKind::Goto: {
        auto it = goto_break_.find(s.label);
        if (it == goto_break_.end())
          unsupported_here("goto '" + s.label +
                               "' outside a recognized cleanup or loop "
                               "pattern",
                           s.span);
        emit("break " + it->second + ";");
        break;
      }
      case StmtKind::Label:
        unsupported_here("label '" + s.label +
                             "' outside a recognized goto pattern",
                         s.span);
    }
  }

  void translate_nested(const Stmt& body) {
    // a bare macro body that expands to several statements would bind only
    // its first statement in C; refuse rather than silently re-scope it
    if (body.kind == StmtKind::ExprStmt && body.expr &&
        bare_macro_expands_to_many(*body.expr))
      unsupported_here(
          "multi-statement macro as an unbraced control-flow body",
          body.span);
    ++indent_;
    scopes_.emplace_back();
    if (body.kind == StmtKind::Block)
      translate_stmt_list(body.stmts);
    else
      translate_stmt(body);
    scopes_.pop_back();
    --indent_;
  }

  bool bare_macro_expands_to_many(const Expr& e) {
    const Expr* bare = strip_parens(&e);
    const MacroDef* def = nullptr;
    std::vector<ExprPtr> no_args;
    const std::vector<ExprPtr>* args = &no_args;
    if (bare->kind == ExprKind::Call) {
      const Expr* callee = strip_parens(bare->a.get());
      if (callee && callee->kind == ExprKind::Ident) {
        auto it = ctx_.macros.find(callee->spelling);
        if (it != ctx_.macros.end()) {
          def = it->second;
          args = &bare->args;
        }
      }
    } else if (bare->kind == ExprKind::Ident) {
      auto it = ctx_.macros.find(bare->spelling);
      if (it != ctx_.macros.end() && !it->second->function_like())
        def = it->second;
    }
    if (!def) return false;
    std::string text;
    try {
      text = expand_macro_call_text(*def, *args, e.span) + ";";
      CSourceFile src("<macro " + def->name + ">", text);
      return parse_statement_snippet(src).size() > 1;
    } catch (const Error&) {
      return false;  // expression-shaped macro; single statement
    }
  }

  std::string render_for_init(const Stmt& init) {
    if (init.kind == StmtKind::Decl) {
      const VarDecl& d = *init.decl;
      MappedType mt = map_type(d.type, ctx_, TypePos::Local, init.span);
      if (mt.mask != Mask::None)
        unsupported_here("unsigned loop variable", init.span);
      VarInfo v;
      v.ctype = d.type;
      v.jtype = mt.jt;
      declare(d.name, std::move(v));
      std::string text = mt.jt.str() + " " + d.name;
      if (d.init) text += " = " + render(*d.init);
      return text;
    }
    if (init.kind == StmtKind::ExprStmt && init.expr) {
      const Expr* e = strip_parens(init.expr.get());
      if (e->kind == ExprKind::Assign) return render_assign_text(*e);
      return render(*e);
    }
    return "";
  }

  std::string render_for_step(const Expr& step) {
    const Expr* e = strip_parens(&step);
    if (e->kind == ExprKind::Assign) return render_assign_text(*e);
    return render(*e);
  }

  // -- goto patterns at one block level

  void translate_stmt_list(const std::vector<StmtPtr>& stmts) {
    size_t count = stmts.size();
    // a trailing `return 0;` in main has nothing left to say in Java; it is
    // still processed last so symbols resolve and call effects survive
    const Stmt* trailing = nullptr;
    if (is_main_ && indent_ == 1 && count > 0 &&
        stmts[count - 1]->kind == StmtKind::Return) {
      trailing = stmts[count - 1].get();
      --count;
    }
    translate_stmt_run(stmts, count);
    if (trailing) {
      trailing_main_return_ = trailing;
      translate_stmt(*trailing);
      trailing_main_return_ = nullptr;
    }
  }

  void translate_stmt_run(const std::vector<StmtPtr>& stmts, size_t count) {
    // find labels at this level
    std::vector<size_t> label_indices;
    for (size_t i = 0; i < count; ++i)
      if (stmts[i]->kind == StmtKind::Label) label_indices.push_back(i);

    if (label_indices.empty()) {
      for (size_t i = 0; i < count; ++i) translate_stmt(*stmts[i]);
      return;
    }
    if (label_indices.size() > 1)
      unsupported_here("multiple labels in one block",
                       stmts[label_indices[1]]->span);

    size_t li = label_indices[0];
    const std::string label = stmts[li]->label;

    // classify gotos targeting this label
    size_t before = 0, after = 0;
    for (size_t i = 0; i < count; ++i) {
      size_t n = count_gotos(*stmts[i], label);
      if (i < li)
        before += n;
      else
        after += n;
    }
    if (before == 0 && after == 0) {
      // dead label: drop the marker
      for (size_t i = 0; i < count; ++i)
        if (i != li) translate_stmt(*stmts[i]);
      return;
    }
    if (before > 0 && after > 0)
      unsupported_here("label '" + label + "' with both forward and backward "
                       "jumps", stmts[li]->span);

    if (before > 0) {
      // forward cleanup: label the do-while and break out of it
      size_t wrap_begin = 0;
      while (wrap_begin < li && stmts[wrap_begin]->kind == StmtKind::Decl) {
        translate_stmt(*stmts[wrap_begin]);
        ++wrap_begin;
      }
      emit(label + ": do {");
      ++indent_;
      scopes_.emplace_back();
      goto_break_[label] = label;
      for (size_t i = wrap_begin; i < li; ++i) translate_stmt(*stmts[i]);
      goto_break_.erase(label);
      scopes_.pop_back();
      --indent_;
      emit("} while (false);");
      for (size_t i = li + 1; i < count; ++i) translate_stmt(*stmts[i]);
      return;
    }

    // backward loop: label ... if (cond) goto label;  ->  do { ... } while (cond);
    if (after != 1)
      unsupported_here("backward goto with multiple jump sites",
                       stmts[li]->span);
    size_t jump = li;
    for (size_t i = li + 1; i < count; ++i) {
      if (is_conditional_backjump(*stmts[i], label)) {
        jump = i;
        break;
      }
      if (count_gotos(*stmts[i], label) > 0)
        unsupported_here(
            "backward goto not in `if (cond) goto label;` form",
            stmts[i]->span);
    }
    if (jump == li)
      unsupported_here("backward goto not in `if (cond) goto label;` form",
                       stmts[li]->span);

    for (size_t i = 0; i < li; ++i) translate_stmt(*stmts[i]);
    emit("do {");
    ++indent_;
    scopes_.emplace_back();
    for (size_t i = li + 1; i < jump; ++i) translate_stmt(*stmts[i]);
    scopes_.pop_back();
    --indent_;
    emit("} while (" + render_condition(*stmts[jump]->expr) + ");");
    for (size_t i = jump + 1; i < count; ++i) translate_stmt(*stmts[i]);
  }

  static size_t count_gotos(const Stmt& s, const std::string& label) {
    size_t n = 0;
    if (s.kind == StmtKind::Goto && s.label == label) ++n;
    for (const auto& st : s.stmts) n += count_gotos(*st, label);
    if (s.body) n += count_gotos(*s.body, label);
    if (s.else_body) n += count_gotos(*s.else_body, label);
    if (s.init_stmt) n += count_gotos(*s.init_stmt, label);
    for (const auto& c : s.cases)
      for (const auto& st : c.body) n += count_gotos(*st, label);
    return n;
  }

  static bool is_conditional_backjump(const Stmt& s, const std::string& label) {
    if (s.kind != StmtKind::If || s.else_body) return false;
    const Stmt* body = s.body.get();
    if (body->kind == StmtKind::Block) {
      if (body->stmts.size() != 1) return false;
      body = body->stmts[0].get();
    }
    return body->kind == StmtKind::Goto && body->label == label;
  }

  // -- out-parameter analysis

  void analyze_out_param() {
    for (const auto& p : fn_.params) {
      const CType& t = p.type;
      if (t.is_pointer() && t.inner && t.inner->is_pointer()) {
        if (!out_param_.empty())
          unsupported_here("multiple out-parameters", p.span);
        if (fn_.ret.kind != TypeKind::Void)
          unsupported_here(
              "out-parameter in a function with a non-void return", p.span);
        const CType& value = *t.inner->inner;
        if (value.kind == TypeKind::Record || value.is_pointer())
          unsupported_here("out-parameter of type " + t.describe(), p.span);
        out_param_ = p.name;
      }
    }
  }

  void collect_out_scalars(const Stmt& s) {
    if (s.kind == StmtKind::ExprStmt && s.expr) {
      const Expr* e = strip_parens(s.expr.get());
      if (e->kind == ExprKind::Call) {
        const Expr* callee = strip_parens(e->a.get());
        if (callee && callee->kind == ExprKind::Ident) {
          auto fit = ctx_.functions.find(callee->spelling);
          if (fit != ctx_.functions.end()) {
            const auto& params = fit->second->params;
            for (size_t i = 0; i < params.size() && i < e->args.size(); ++i) {
              const CType& pt = params[i].type;
              if (pt.is_pointer() && pt.inner && pt.inner->is_pointer()) {
                const Expr* arg = strip_parens(e->args[i].get());
                if (arg->kind == ExprKind::Unary && arg->spelling == "&") {
                  const Expr* v = strip_parens(arg->a.get());
                  if (v->kind == ExprKind::Ident)
                    out_scalars_.insert(v->spelling);
                }
              }
            }
          }
        }
      }
    }
    for (const auto& st : s.stmts) collect_out_scalars(*st);
    if (s.body) collect_out_scalars(*s.body);
    if (s.else_body) collect_out_scalars(*s.else_body);
    if (s.init_stmt) collect_out_scalars(*s.init_stmt);
    for (const auto& c : s.cases)
      for (const auto& st : c.body) collect_out_scalars(*st);
  }
};

std::string FunctionTranslator::run() {
  is_main_ = fn_.name == "main";
  analyze_out_param();
  if (fn_.body) collect_out_scalars(*fn_.body);

  scopes_.emplace_back();

  std::string signature;
  std::vector<std::string> preludes;

  if (is_main_) {
    if (!fn_.params.empty())
      unsupported_here("main with parameters", fn_.signature_span);
    signature = "public static void main(String[] args) {";
  } else {
    JType ret;
    if (!out_param_.empty()) {
      // R-outparam: the method returns the value instead
      const CType* value = nullptr;
      for (const auto& p : fn_.params)
        if (p.name == out_param_) value = p.type.inner->inner.get();
      ret = map_type(*value, ctx_, TypePos::Return, fn_.signature_span).jt;
    } else {
      ret = map_type(fn_.ret, ctx_, TypePos::Return, fn_.signature_span).jt;
    }

    std::string params;
    bool first = true;
    for (const auto& p : fn_.params) {
      if (p.name == out_param_) continue;

      VarInfo v;
      v.ctype = p.type;
      std::string param_name = p.name;

      if (p.type.kind == TypeKind::Record) {
        // R-copy: the Java method receives a reference; clone it first
        const auto* view = ctx_.find_record(p.type.name);
        if (!view)
          fail_at(ErrorKind::Unresolved,
                  "unresolved record type '" + p.type.name + "'", p.span);
        if (view->kind == RecordKind::Union)
          unsupported_here("union parameter", p.span);
        param_name = p.name + "_orig";
        preludes.push_back(view->java_name + " " + p.name + " = new " +
                           view->java_name + "(" + param_name + ");");
        v.jtype = JType::of_class(view->java_name);
        declare(p.name, std::move(v));
        if (!first) params += ", ";
        first = false;
        params += view->java_name + " " + param_name;
        continue;
      }

      MappedType mt = map_type(p.type, ctx_, TypePos::Param, p.span);
      v.jtype = mt.jt;
      v.mask = mt.mask;
      declare(p.name, std::move(v));
      if (!first) params += ", ";
      first = false;
      params += mt.jt.str() + " " + p.name;
    }
    signature = "public static " + ret.str() + " " + fn_.name + "(" + params +
                ") {";
  }

  lines_.push_back(signature);
  ++indent_;
  for (const auto& p : preludes) emit(p);
  if (fn_.body) {
    if (fn_.body->kind == StmtKind::Block)
      translate_stmt_list(fn_.body->stmts);
    else
      translate_stmt(*fn_.body);
  }
  --indent_;
  lines_.push_back("}");

  std::string text;
  for (const auto& l : lines_) text += l + "\n";
  return text;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public surface

long long platform_sizeof(const CType& type, const TranslationContext& ctx) {
  return layout_of(type, ctx, Span{}).size;
}

JavaSnippet translate_global(const VarDecl& decl,
                             const TranslationContext& ctx) {
  const CType& t = decl.type;
  MappedType mt = map_type(t, ctx, TypePos::Global, decl.span);

  std::string text = "public static ";
  if (t.is_const) text += "final ";
  text += mt.jt.str() + " " + decl.name;

  if (decl.init) {
    const Expr* init = decl.init.get();
    while (init->kind == ExprKind::Paren) init = init->a.get();
    std::string value;
    switch (init->kind) {
      case ExprKind::IntLit: {
        std::string s = render_int_literal(*init);
        if (mt.jt.is(JType::K::Long) && s.back() != 'L') s += "L";
        value = s;
        break;
      }
      case ExprKind::FloatLit:
      case ExprKind::StrLit:
      case ExprKind::CharLit:
        value = init->spelling;
        break;
      case ExprKind::Unary:
        if (init->spelling == "-" && init->a &&
            init->a->kind == ExprKind::IntLit) {
          value = "-" + render_int_literal(*init->a);
          break;
        }
        unsupported_here("global initializer", decl.span);
      case ExprKind::InitList: {
        std::string items;
        for (size_t i = 0; i < init->args.size(); ++i) {
          if (i) items += ", ";
          const Expr* item = init->args[i].get();
          while (item->kind == ExprKind::Paren) item = item->a.get();
          if (item->kind == ExprKind::IntLit)
            items += render_int_literal(*item);
          else if (item->kind == ExprKind::FloatLit ||
                   item->kind == ExprKind::StrLit ||
                   item->kind == ExprKind::CharLit)
            items += item->spelling;
          else
            unsupported_here("global array initializer element", decl.span);
        }
        value = "{" + items + "}";
        break;
      }
      default:
        unsupported_here("global initializer", decl.span);
    }
    text += " = " + value;
  } else if (t.kind == TypeKind::Record) {
    text += " = new " + mt.jt.str() + "()";
  }
  text += ";";
  return {SnippetKind::StaticField, decl.name, text + "\n"};
}

JavaSnippet translate_record(const RecordDecl& rec,
                             const TranslationContext& ctx) {
  return translate_record_impl(rec, ctx);
}

JavaSnippet translate_function(const FunctionDecl& fn,
                               const TranslationContext& ctx) {
  FunctionTranslator tr(fn, ctx);
  return {SnippetKind::Method, fn.name, tr.run()};
}

TranslatedUnit translate_parts(const CDecomposition& parts,
                               const TranslationContext& ctx) {
  TranslatedUnit unit;
  for (const auto& g : parts.globals)
    unit.fields.push_back(translate_global(*g.decl, ctx));
  for (const auto& r : parts.records)
    unit.classes.push_back(translate_record(*r.decl, ctx));
  for (const auto& f : parts.functions)
    unit.methods.push_back(translate_function(*f.decl, ctx));
  return unit;
}

}  // namespace c2j
