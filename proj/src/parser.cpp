#include "c2j/parser.hpp"

#include <map>
#include <set>

#include "c2j/lexer.hpp"

namespace c2j {

namespace {

const std::set<std::string> kTypeKeywords = {
    "void", "char", "short", "int", "long", "float", "double",
    "unsigned", "signed", "const", "struct", "union", "enum"};

const std::set<std::string> kReservedUnsupported = {
    "static", "extern", "register", "volatile", "auto", "inline",
    "restrict", "_Bool", "_Complex", "_Atomic"};

const std::set<std::string> kLibcAllowlist = {"printf", "strcpy", "strcat",
                                              "strlen", "malloc", "free"};

const std::set<std::string> kStmtKeywords = {
    "if", "else", "while", "do", "for", "switch", "case", "default",
    "break", "continue", "return", "goto", "sizeof", "typedef"};

class Parser {
 public:
  explicit Parser(const CSourceFile& src) : src_(src), toks_(lex(src)) {}

  TranslationUnit run() {
    TranslationUnit unit;
    while (!peek().is(Tok::Eof)) {
      unit.decls.push_back(parse_top_level());
    }
    return unit;
  }

  ExprPtr run_expression() {
    ExprPtr e = parse_expression();
    if (!peek().is(Tok::Eof)) syntax_error("trailing tokens after expression");
    return e;
  }

  std::vector<StmtPtr> run_statements() {
    std::vector<StmtPtr> out;
    while (!peek().is(Tok::Eof)) out.push_back(parse_statement());
    return out;
  }

 private:
  const CSourceFile& src_;
  std::vector<Token> toks_;
  size_t pos_ = 0;
  std::map<std::string, CType> typedefs_;
  std::set<std::string> record_tags_;
  std::set<std::string> enum_tags_;

  const Token& peek(size_t ahead = 0) const {
    size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void syntax_error(const std::string& msg) const {
    const Token& t = peek();
    fail_at(ErrorKind::Syntax,
            "syntax error: " + msg + " at line " + std::to_string(t.span.line) +
                ", column " + std::to_string(t.span.col),
            t.span);
  }
  [[noreturn]] void unsupported(const std::string& what) const {
    const Token& t = peek();
    fail_at(ErrorKind::Unsupported,
            "unsupported construct: " + what + " at line " +
                std::to_string(t.span.line) + ", column " +
                std::to_string(t.span.col),
            t.span);
  }

  Token expect_punct(const char* p, const std::string& what) {
    if (!peek().is_punct(p))
      syntax_error("expected '" + std::string(p) + "' " + what + ", got '" +
                   peek().text + "'");
    return advance();
  }
  Token expect_ident(const std::string& what) {
    if (!peek().is(Tok::Ident) || is_any_keyword(peek().text))
      syntax_error("expected identifier " + what + ", got '" + peek().text +
                   "'");
    return advance();
  }

  static bool is_any_keyword(const std::string& s) {
    return kTypeKeywords.count(s) || kStmtKeywords.count(s) ||
           kReservedUnsupported.count(s);
  }

  bool at_type_start() const {
    const Token& t = peek();
    if (!t.is(Tok::Ident)) return false;
    if (kTypeKeywords.count(t.text)) return true;
    return typedefs_.count(t.text) > 0;
  }

  Span span_between(size_t begin_tok, size_t end_tok_exclusive) const {
    const Token& first = toks_[begin_tok];
    size_t end = end_tok_exclusive > begin_tok
                     ? toks_[end_tok_exclusive - 1].span.end
                     : first.span.begin;
    return Span{first.span.begin, end, first.span.line, first.span.col};
  }

  // -------------------------------------------------------------------
  // Types and declarators

  CType parse_type_specifier() {
    bool is_const = false;
    bool saw_unsigned = false, saw_signed = false;
    std::optional<TypeKind> base;
    std::string tag;

    for (;;) {
      const Token& t = peek();
      if (!t.is(Tok::Ident)) break;
      if (kReservedUnsupported.count(t.text))
        unsupported("storage class or qualifier '" + t.text + "'");
      if (t.text == "const") {
        is_const = true;
        advance();
        continue;
      }
      if (t.text == "unsigned") {
        saw_unsigned = true;
        advance();
        continue;
      }
      if (t.text == "signed") {
        saw_signed = true;
        advance();
        continue;
      }
      if (t.text == "struct" || t.text == "union") {
        advance();
        if (!peek().is(Tok::Ident) || is_any_keyword(peek().text))
          unsupported("anonymous record");
        tag = advance().text;
        base = TypeKind::Record;
        break;
      }
      if (t.text == "enum") {
        advance();
        if (!peek().is(Tok::Ident) || is_any_keyword(peek().text))
          unsupported("anonymous enum");
        tag = advance().text;
        base = TypeKind::Enum;
        break;
      }
      if (t.text == "void") { base = TypeKind::Void; advance(); break; }
      if (t.text == "char") { base = TypeKind::Char; advance(); break; }
      if (t.text == "short") { base = TypeKind::Short; advance(); break; }
      if (t.text == "int") { base = TypeKind::Int; advance(); break; }
      if (t.text == "long") {
        advance();
        if (peek().is_ident("long")) advance();  // long long folds to long
        if (peek().is_ident("int")) advance();
        base = TypeKind::Long;
        break;
      }
      if (t.text == "float") { base = TypeKind::Float; advance(); break; }
      if (t.text == "double") { base = TypeKind::Double; advance(); break; }
      if (typedefs_.count(t.text)) {
        CType resolved = typedefs_.at(t.text);
        resolved.is_const = resolved.is_const || is_const;
        advance();
        // trailing const after a typedef name
        if (peek().is_ident("const")) {
          resolved.is_const = true;
          advance();
        }
        return resolved;
      }
      break;
    }

    if (!base) {
      if (saw_unsigned || saw_signed)
        base = TypeKind::Int;  // bare "unsigned x"
      else
        syntax_error("expected a type, got '" + peek().text + "'");
    }
    // const may also follow the base type
    if (peek().is_ident("const")) {
      is_const = true;
      advance();
    }

    CType t;
    t.is_const = is_const;
    t.name = tag;
    t.kind = *base;
    if (saw_unsigned) {
      switch (*base) {
        case TypeKind::Char: t.kind = TypeKind::UChar; break;
        case TypeKind::Short: t.kind = TypeKind::UShort; break;
        case TypeKind::Int: t.kind = TypeKind::UInt; break;
        case TypeKind::Long: t.kind = TypeKind::ULong; break;
        default:
          unsupported("unsigned applied to this type");
      }
    }
    return t;
  }

  struct Declarator {
    CType type;
    std::string name;
    Span name_span;
  };

  // Parses pointer stars, the name (or a function-pointer declarator), and
  // array/function suffixes, layering onto `base`.
  Declarator parse_declarator(CType base, bool require_name = true) {
    while (peek().is_punct("*")) {
      advance();
      base = CType::pointer_to(std::move(base));
      if (peek().is_ident("const")) {
        base.is_const = true;
        advance();
      }
    }

    Declarator d;
    // function pointer: (*name)(params)
    if (peek().is_punct("(") && peek(1).is_punct("*")) {
      advance();
      advance();
      Token name = expect_ident("in function-pointer declarator");
      expect_punct(")", "after function-pointer name");
      expect_punct("(", "to open function-pointer parameter list");
      CType fp;
      fp.kind = TypeKind::FnPtr;
      fp.ret = std::make_shared<CType>(std::move(base));
      if (!peek().is_punct(")")) {
        for (;;) {
          CType pt = parse_type_specifier();
          // parameter names inside fn-ptr types are allowed and ignored
          Declarator pd = parse_declarator(pt, /*require_name=*/false);
          fp.params.push_back(pd.type);
          if (peek().is_punct(",")) {
            advance();
            continue;
          }
          break;
        }
      }
      expect_punct(")", "to close function-pointer parameter list");
      d.type = std::move(fp);
      d.name = name.text;
      d.name_span = name.span;
      return d;
    }

    if (peek().is(Tok::Ident) && !is_any_keyword(peek().text) &&
        !typedefs_.count(peek().text)) {
      Token name = advance();
      d.name = name.text;
      d.name_span = name.span;
    } else if (require_name) {
      syntax_error("expected declarator name, got '" + peek().text + "'");
    }

    // array suffixes
    std::vector<long long> dims;
    while (peek().is_punct("[")) {
      advance();
      long long len = -1;
      if (peek().is(Tok::IntLit)) {
        len = parse_int_token(advance());
      } else if (!peek().is_punct("]")) {
        unsupported("non-constant array dimension");
      }
      expect_punct("]", "to close array dimension");
      dims.push_back(len);
    }
    for (auto it = dims.rbegin(); it != dims.rend(); ++it)
      base = CType::array_of(std::move(base), *it);

    d.type = std::move(base);
    return d;
  }

  long long parse_int_token(const Token& t) const {
    std::string s = t.text;
    while (!s.empty() &&
           (s.back() == 'u' || s.back() == 'U' || s.back() == 'l' ||
            s.back() == 'L'))
      s.pop_back();
    return std::stoll(s, nullptr, 0);
  }

  // -------------------------------------------------------------------
  // Top level

  TopLevel parse_top_level() {
    size_t begin_tok = pos_;
    const Token& t = peek();
    if (!t.is(Tok::Ident)) syntax_error("expected a declaration");
    if (kReservedUnsupported.count(t.text))
      unsupported("storage class or qualifier '" + t.text + "'");

    if (t.text == "typedef") return parse_typedef(begin_tok);

    if ((t.text == "struct" || t.text == "union" || t.text == "enum") &&
        peek(1).is(Tok::Ident) && peek(2).is_punct("{")) {
      return parse_record_def(begin_tok);
    }

    if (!at_type_start())
      syntax_error("expected a declaration, got '" + t.text + "'");

    CType base = parse_type_specifier();
    Declarator d = parse_declarator(base);

    if (peek().is_punct("(")) return parse_function(begin_tok, std::move(d));

    // global variable
    TopLevel top;
    top.kind = TopLevelKind::Global;
    VarDecl var;
    var.type = std::move(d.type);
    var.name = d.name;
    if (peek().is_punct("=")) {
      advance();
      var.init = parse_initializer();
    }
    if (peek().is_punct(","))
      unsupported("multiple declarators in one file-scope declaration");
    expect_punct(";", "after global declaration");
    top.span = span_between(begin_tok, pos_);
    var.span = top.span;
    top.global = std::move(var);
    return top;
  }

  TopLevel parse_typedef(size_t begin_tok) {
    advance();  // typedef
    CType underlying = parse_type_specifier();
    Declarator d = parse_declarator(underlying);
    expect_punct(";", "after typedef");
    typedefs_[d.name] = d.type;

    TopLevel top;
    top.kind = TopLevelKind::Typedef;
    top.span = span_between(begin_tok, pos_);
    TypedefDecl td;
    td.underlying = d.type;
    td.name = d.name;
    td.span = top.span;
    top.typedef_decl = std::move(td);
    return top;
  }

  TopLevel parse_record_def(size_t begin_tok) {
    std::string kw = advance().text;  // struct/union/enum
    Token tag = expect_ident("as record tag");
    expect_punct("{", "to open record body");

    auto rec = std::make_unique<RecordDecl>();
    rec->name = tag.text;
    if (kw == "enum") {
      rec->rkind = RecordKind::Enum;
      enum_tags_.insert(tag.text);
      long long next = 0;
      while (!peek().is_punct("}")) {
        Token name = expect_ident("as enum constant");
        EnumConstDecl c;
        c.name = name.text;
        c.span = name.span;
        if (peek().is_punct("=")) {
          advance();
          bool neg = false;
          if (peek().is_punct("-")) {
            neg = true;
            advance();
          }
          if (!peek().is(Tok::IntLit))
            unsupported("non-literal enum constant value");
          long long v = parse_int_token(advance());
          c.value = neg ? -v : v;
        } else {
          c.value = next;
        }
        next = c.value + 1;
        rec->consts.push_back(std::move(c));
        if (peek().is_punct(",")) {
          advance();
          continue;
        }
        break;
      }
    } else {
      rec->rkind = kw == "struct" ? RecordKind::Struct : RecordKind::Union;
      record_tags_.insert(tag.text);
      while (!peek().is_punct("}")) {
        size_t f_begin = pos_;
        CType ft = parse_type_specifier();
        Declarator fd = parse_declarator(ft);
        FieldDecl field;
        field.type = std::move(fd.type);
        field.name = fd.name;
        if (peek().is_punct(":")) {
          advance();
          if (!peek().is(Tok::IntLit)) syntax_error("expected bitfield width");
          field.bit_width = static_cast<int>(parse_int_token(advance()));
          if (field.bit_width <= 0 || field.bit_width > 31)
            unsupported("bitfield width outside 1..31");
        }
        if (peek().is_punct(","))
          unsupported("multiple declarators in one field declaration");
        expect_punct(";", "after record field");
        field.span = span_between(f_begin, pos_);
        rec->fields.push_back(std::move(field));
      }
    }
    expect_punct("}", "to close record body");
    expect_punct(";", "after record definition");

    TopLevel top;
    top.kind = TopLevelKind::Record;
    top.span = span_between(begin_tok, pos_);
    rec->span = top.span;
    top.record = std::move(rec);
    return top;
  }

  TopLevel parse_function(size_t begin_tok, Declarator d) {
    auto fn = std::make_unique<FunctionDecl>();
    fn->ret = std::move(d.type);
    fn->name = d.name;

    expect_punct("(", "to open parameter list");
    if (peek().is_ident("void") && peek(1).is_punct(")")) {
      advance();
    }
    if (!peek().is_punct(")")) {
      for (;;) {
        if (peek().is_punct("...")) unsupported("variadic parameters");
        size_t p_begin = pos_;
        CType pt = parse_type_specifier();
        Declarator pd = parse_declarator(pt);
        ParamDecl param;
        param.type = std::move(pd.type);
        param.name = pd.name;
        param.span = span_between(p_begin, pos_);
        fn->params.push_back(std::move(param));
        if (peek().is_punct(",")) {
          advance();
          continue;
        }
        break;
      }
    }
    expect_punct(")", "to close parameter list");
    fn->signature_span = span_between(begin_tok, pos_);

    TopLevel top;
    if (peek().is_punct(";")) {
      advance();
      top.kind = TopLevelKind::Prototype;
    } else {
      fn->body = parse_block();
      top.kind = TopLevelKind::Function;
    }
    top.span = span_between(begin_tok, pos_);
    fn->span = top.span;
    top.function = std::move(fn);
    return top;
  }

  // -------------------------------------------------------------------
  // Statements

  StmtPtr parse_block() {
    size_t begin_tok = pos_;
    expect_punct("{", "to open block");
    auto block = std::make_unique<Stmt>(StmtKind::Block);
    while (!peek().is_punct("}")) {
      if (peek().is(Tok::Eof)) syntax_error("unterminated block");
      block->stmts.push_back(parse_statement());
    }
    advance();  // '}'
    block->span = span_between(begin_tok, pos_);
    return block;
  }

  StmtPtr parse_statement() {
    size_t begin_tok = pos_;
    const Token& t = peek();

    if (t.is_punct("{")) return parse_block();
    if (t.is_punct(";")) {
      advance();
      auto s = std::make_unique<Stmt>(StmtKind::ExprStmt);
      s->span = span_between(begin_tok, pos_);
      return s;
    }

    if (t.is(Tok::Ident)) {
      if (kReservedUnsupported.count(t.text))
        unsupported("storage class or qualifier '" + t.text + "'");
      if (t.text == "typedef") unsupported("block-scope typedef");

      // label: IDENT ':' not followed by more of an expression
      if (!is_any_keyword(t.text) && peek(1).is_punct(":")) {
        Token name = advance();
        advance();  // ':'
        auto s = std::make_unique<Stmt>(StmtKind::Label);
        s->label = name.text;
        s->span = span_between(begin_tok, pos_);
        return s;
      }

      if (t.text == "if") return parse_if();
      if (t.text == "while") return parse_while();
      if (t.text == "do") return parse_do_while();
      if (t.text == "for") return parse_for();
      if (t.text == "switch") return parse_switch();
      if (t.text == "return") {
        advance();
        auto s = std::make_unique<Stmt>(StmtKind::Return);
        if (!peek().is_punct(";")) s->expr = parse_expression();
        expect_punct(";", "after return");
        s->span = span_between(begin_tok, pos_);
        return s;
      }
      if (t.text == "break") {
        advance();
        expect_punct(";", "after break");
        auto s = std::make_unique<Stmt>(StmtKind::Break);
        s->span = span_between(begin_tok, pos_);
        return s;
      }
      if (t.text == "continue") {
        advance();
        expect_punct(";", "after continue");
        auto s = std::make_unique<Stmt>(StmtKind::Continue);
        s->span = span_between(begin_tok, pos_);
        return s;
      }
      if (t.text == "goto") {
        advance();
        Token target = expect_ident("as goto target");
        expect_punct(";", "after goto");
        auto s = std::make_unique<Stmt>(StmtKind::Goto);
        s->label = target.text;
        s->span = span_between(begin_tok, pos_);
        return s;
      }
      if (t.text == "case" || t.text == "default")
        syntax_error("'" + t.text + "' outside switch");

      if (at_type_start()) return parse_decl_stmt();
    }

    // expression statement
    auto s = std::make_unique<Stmt>(StmtKind::ExprStmt);
    s->expr = parse_expression();
    expect_punct(";", "after expression");
    s->span = span_between(begin_tok, pos_);
    return s;
  }

  StmtPtr parse_decl_stmt() {
    size_t begin_tok = pos_;
    CType base = parse_type_specifier();
    Declarator d = parse_declarator(base);
    auto s = std::make_unique<Stmt>(StmtKind::Decl);
    VarDecl var;
    var.type = std::move(d.type);
    var.name = d.name;
    if (peek().is_punct("=")) {
      advance();
      var.init = parse_initializer();
    }
    if (peek().is_punct(","))
      unsupported("multiple declarators in one local declaration");
    expect_punct(";", "after declaration");
    s->span = span_between(begin_tok, pos_);
    var.span = s->span;
    s->decl = std::move(var);
    return s;
  }

  StmtPtr parse_if() {
    size_t begin_tok = pos_;
    advance();
    expect_punct("(", "after if");
    auto s = std::make_unique<Stmt>(StmtKind::If);
    s->expr = parse_expression();
    expect_punct(")", "after if condition");
    s->body = parse_statement();
    if (peek().is_ident("else")) {
      advance();
      s->else_body = parse_statement();
    }
    s->span = span_between(begin_tok, pos_);
    return s;
  }

  StmtPtr parse_while() {
    size_t begin_tok = pos_;
    advance();
    expect_punct("(", "after while");
    auto s = std::make_unique<Stmt>(StmtKind::While);
    s->expr = parse_expression();
    expect_punct(")", "after while condition");
    s->body = parse_statement();
    s->span = span_between(begin_tok, pos_);
    return s;
  }

  StmtPtr parse_do_while() {
    size_t begin_tok = pos_;
    advance();
    auto s = std::make_unique<Stmt>(StmtKind::DoWhile);
    s->body = parse_statement();
    if (!peek().is_ident("while")) syntax_error("expected while after do body");
    advance();
    expect_punct("(", "after do-while");
    s->expr = parse_expression();
    expect_punct(")", "after do-while condition");
    expect_punct(";", "after do-while");
    s->span = span_between(begin_tok, pos_);
    return s;
  }

  StmtPtr parse_for() {
    size_t begin_tok = pos_;
    advance();
    expect_punct("(", "after for");
    auto s = std::make_unique<Stmt>(StmtKind::For);
    if (peek().is_punct(";")) {
      advance();
    } else if (at_type_start()) {
      s->init_stmt = parse_decl_stmt();
    } else {
      auto init = std::make_unique<Stmt>(StmtKind::ExprStmt);
      size_t i_begin = pos_;
      init->expr = parse_expression();
      expect_punct(";", "after for initializer");
      init->span = span_between(i_begin, pos_);
      s->init_stmt = std::move(init);
    }
    if (!peek().is_punct(";")) s->expr = parse_expression();
    expect_punct(";", "after for condition");
    if (!peek().is_punct(")")) s->step = parse_expression();
    expect_punct(")", "after for clauses");
    s->body = parse_statement();
    s->span = span_between(begin_tok, pos_);
    return s;
  }

  StmtPtr parse_switch() {
    size_t begin_tok = pos_;
    advance();
    expect_punct("(", "after switch");
    auto s = std::make_unique<Stmt>(StmtKind::Switch);
    s->expr = parse_expression();
    expect_punct(")", "after switch value");
    expect_punct("{", "to open switch body");
    while (!peek().is_punct("}")) {
      if (peek().is(Tok::Eof)) syntax_error("unterminated switch");
      SwitchCase sc;
      size_t c_begin = pos_;
      if (peek().is_ident("case")) {
        advance();
        sc.label = parse_expression();
        expect_punct(":", "after case label");
      } else if (peek().is_ident("default")) {
        advance();
        expect_punct(":", "after default");
      } else {
        syntax_error("expected case or default in switch body");
      }
      while (!peek().is_punct("}") && !peek().is_ident("case") &&
             !peek().is_ident("default")) {
        StmtPtr body_stmt = parse_statement();
        if (body_stmt->kind == StmtKind::Break) {
          sc.has_break = true;
          sc.body.push_back(std::move(body_stmt));
          break;
        }
        sc.body.push_back(std::move(body_stmt));
      }
      sc.span = span_between(c_begin, pos_);
      s->cases.push_back(std::move(sc));
    }
    advance();  // '}'
    s->span = span_between(begin_tok, pos_);
    return s;
  }

  // -------------------------------------------------------------------
  // Expressions

  ExprPtr parse_initializer() {
    if (peek().is_punct("{")) {
      size_t begin_tok = pos_;
      advance();
      auto e = std::make_unique<Expr>(ExprKind::InitList);
      while (!peek().is_punct("}")) {
        if (peek().is_punct("."))
          unsupported("designated initializer");
        e->args.push_back(parse_assignment());
        if (peek().is_punct(",")) {
          advance();
          continue;
        }
        break;
      }
      expect_punct("}", "to close initializer list");
      e->span = span_between(begin_tok, pos_);
      return e;
    }
    return parse_assignment();
  }

  ExprPtr parse_expression() { return parse_assignment(); }

  ExprPtr parse_assignment() {
    size_t begin_tok = pos_;
    ExprPtr lhs = parse_ternary();
    static const char* kAssignOps[] = {"=",  "+=", "-=", "*=", "/=",
                                       "%=", "&=", "|=", "^=", "<<=", ">>="};
    for (const char* op : kAssignOps) {
      if (peek().is_punct(op)) {
        advance();
        auto e = std::make_unique<Expr>(ExprKind::Assign);
        e->spelling = op;
        e->a = std::move(lhs);
        e->b = parse_assignment();
        e->span = span_between(begin_tok, pos_);
        return e;
      }
    }
    return lhs;
  }

  ExprPtr parse_ternary() {
    size_t begin_tok = pos_;
    ExprPtr cond = parse_binary(0);
    if (!peek().is_punct("?")) return cond;
    advance();
    auto e = std::make_unique<Expr>(ExprKind::Ternary);
    e->a = std::move(cond);
    e->b = parse_expression();
    expect_punct(":", "in conditional expression");
    e->c = parse_assignment();
    e->span = span_between(begin_tok, pos_);
    return e;
  }

  static int binary_prec(const std::string& op) {
    if (op == "*" || op == "/" || op == "%") return 10;
    if (op == "+" || op == "-") return 9;
    if (op == "<<" || op == ">>") return 8;
    if (op == "<" || op == ">" || op == "<=" || op == ">=") return 7;
    if (op == "==" || op == "!=") return 6;
    if (op == "&") return 5;
    if (op == "^") return 4;
    if (op == "|") return 3;
    if (op == "&&") return 2;
    if (op == "||") return 1;
    return -1;
  }

  ExprPtr parse_binary(int min_prec) {
    size_t begin_tok = pos_;
    ExprPtr lhs = parse_unary();
    for (;;) {
      if (!peek().is(Tok::Punct)) return lhs;
      int prec = binary_prec(peek().text);
      if (prec < 0 || prec < min_prec) return lhs;
      std::string op = advance().text;
      ExprPtr rhs = parse_binary(prec + 1);
      auto e = std::make_unique<Expr>(ExprKind::Binary);
      e->spelling = op;
      e->a = std::move(lhs);
      e->b = std::move(rhs);
      e->span = span_between(begin_tok, pos_);
      lhs = std::move(e);
    }
  }

  bool paren_opens_type() const {
    if (!peek().is_punct("(")) return false;
    const Token& t = peek(1);
    if (!t.is(Tok::Ident)) return false;
    return kTypeKeywords.count(t.text) > 0 || typedefs_.count(t.text) > 0;
  }

  ExprPtr parse_unary() {
    size_t begin_tok = pos_;
    const Token& t = peek();

    if (t.is(Tok::Punct)) {
      static const char* kPrefix[] = {"++", "--", "+", "-", "!", "~", "*", "&"};
      for (const char* op : kPrefix) {
        if (t.text == op) {
          advance();
          auto e = std::make_unique<Expr>(ExprKind::Unary);
          e->spelling = op;
          e->prefix = true;
          e->a = parse_unary();
          e->span = span_between(begin_tok, pos_);
          return e;
        }
      }
      if (t.text == "(") {
        if (paren_opens_type()) {
          // cast
          advance();
          CType ty = parse_type_specifier();
          while (peek().is_punct("*")) {
            advance();
            ty = CType::pointer_to(std::move(ty));
          }
          expect_punct(")", "to close cast");
          auto e = std::make_unique<Expr>(ExprKind::Cast);
          e->type = std::move(ty);
          e->a = parse_unary();
          e->span = span_between(begin_tok, pos_);
          return e;
        }
        advance();
        auto inner = parse_expression();
        expect_punct(")", "to close parenthesized expression");
        auto e = std::make_unique<Expr>(ExprKind::Paren);
        e->a = std::move(inner);
        e->span = span_between(begin_tok, pos_);
        return parse_postfix_ops(std::move(e), begin_tok);
      }
    }

    if (t.is_ident("sizeof")) {
      advance();
      if (peek().is_punct("(") &&
          (kTypeKeywords.count(peek(1).text) || typedefs_.count(peek(1).text))) {
        advance();
        CType ty = parse_type_specifier();
        while (peek().is_punct("*")) {
          advance();
          ty = CType::pointer_to(std::move(ty));
        }
        while (peek().is_punct("[")) {
          advance();
          long long len = -1;
          if (peek().is(Tok::IntLit)) len = parse_int_token(advance());
          expect_punct("]", "in sizeof array type");
          ty = CType::array_of(std::move(ty), len);
        }
        expect_punct(")", "to close sizeof");
        auto e = std::make_unique<Expr>(ExprKind::SizeofType);
        e->type = std::move(ty);
        e->span = span_between(begin_tok, pos_);
        return e;
      }
      auto e = std::make_unique<Expr>(ExprKind::SizeofExpr);
      e->a = parse_unary();
      e->span = span_between(begin_tok, pos_);
      return e;
    }

    return parse_postfix();
  }

  ExprPtr parse_postfix() {
    size_t begin_tok = pos_;
    ExprPtr e = parse_primary();
    return parse_postfix_ops(std::move(e), begin_tok);
  }

  ExprPtr parse_postfix_ops(ExprPtr e, size_t begin_tok) {
    for (;;) {
      if (peek().is_punct("(")) {
        advance();
        auto call = std::make_unique<Expr>(ExprKind::Call);
        call->a = std::move(e);
        if (!peek().is_punct(")")) {
          for (;;) {
            call->args.push_back(parse_assignment());
            if (peek().is_punct(",")) {
              advance();
              continue;
            }
            break;
          }
        }
        expect_punct(")", "to close call");
        call->span = span_between(begin_tok, pos_);
        e = std::move(call);
        continue;
      }
      if (peek().is_punct("[")) {
        advance();
        auto idx = std::make_unique<Expr>(ExprKind::Index);
        idx->a = std::move(e);
        idx->b = parse_expression();
        expect_punct("]", "to close index");
        idx->span = span_between(begin_tok, pos_);
        e = std::move(idx);
        continue;
      }
      if (peek().is_punct(".") || peek().is_punct("->")) {
        bool arrow = peek().text == "->";
        advance();
        Token field = expect_ident("as member name");
        auto m = std::make_unique<Expr>(ExprKind::Member);
        m->a = std::move(e);
        m->member = field.text;
        m->arrow = arrow;
        m->span = span_between(begin_tok, pos_);
        e = std::move(m);
        continue;
      }
      if (peek().is_punct("++") || peek().is_punct("--")) {
        auto u = std::make_unique<Expr>(ExprKind::Unary);
        u->spelling = advance().text;
        u->prefix = false;
        u->a = std::move(e);
        u->span = span_between(begin_tok, pos_);
        e = std::move(u);
        continue;
      }
      return e;
    }
  }

  ExprPtr parse_primary() {
    size_t begin_tok = pos_;
    const Token& t = peek();
    if (t.is(Tok::IntLit)) {
      Token lit = advance();
      auto e = std::make_unique<Expr>(ExprKind::IntLit);
      e->spelling = lit.text;
      e->unsigned_suffix =
          lit.text.find('u') != std::string::npos ||
          lit.text.find('U') != std::string::npos;
      {
        std::string s = lit.text;
        while (!s.empty() && (s.back() == 'u' || s.back() == 'U' ||
                              s.back() == 'l' || s.back() == 'L'))
          s.pop_back();
        e->int_value = std::stoll(s, nullptr, 0);
      }
      e->span = span_between(begin_tok, pos_);
      return e;
    }
    if (t.is(Tok::FloatLit)) {
      Token lit = advance();
      auto e = std::make_unique<Expr>(ExprKind::FloatLit);
      e->spelling = lit.text;
      e->span = span_between(begin_tok, pos_);
      return e;
    }
    if (t.is(Tok::StrLit)) {
      Token lit = advance();
      auto e = std::make_unique<Expr>(ExprKind::StrLit);
      e->spelling = lit.text;
      e->span = span_between(begin_tok, pos_);
      return e;
    }
    if (t.is(Tok::CharLit)) {
      Token lit = advance();
      auto e = std::make_unique<Expr>(ExprKind::CharLit);
      e->spelling = lit.text;
      e->span = span_between(begin_tok, pos_);
      return e;
    }
    if (t.is(Tok::Ident)) {
      if (t.text == "NULL") {
        Token lit = advance();
        auto e = std::make_unique<Expr>(ExprKind::IntLit);
        e->spelling = "NULL";
        e->int_value = 0;
        e->span = span_between(begin_tok, pos_);
        return e;
      }
      if (is_any_keyword(t.text))
        syntax_error("unexpected keyword '" + t.text + "' in expression");
      Token name = advance();
      auto e = std::make_unique<Expr>(ExprKind::Ident);
      e->spelling = name.text;
      e->span = span_between(begin_tok, pos_);
      return e;
    }
    syntax_error("unexpected token '" + t.text + "' in expression");
  }
};

}  // namespace

const char* record_kind_name(RecordKind k) {
  switch (k) {
    case RecordKind::Struct: return "struct";
    case RecordKind::Union: return "union";
    case RecordKind::Enum: return "enum";
  }
  return "?";
}

std::string CType::describe() const {
  switch (kind) {
    case TypeKind::Void: return "void";
    case TypeKind::Char: return "char";
    case TypeKind::UChar: return "unsigned char";
    case TypeKind::Short: return "short";
    case TypeKind::UShort: return "unsigned short";
    case TypeKind::Int: return "int";
    case TypeKind::UInt: return "unsigned int";
    case TypeKind::Long: return "long";
    case TypeKind::ULong: return "unsigned long";
    case TypeKind::Float: return "float";
    case TypeKind::Double: return "double";
    case TypeKind::Record: return "struct " + name;
    case TypeKind::Enum: return "enum " + name;
    case TypeKind::Named: return name;
    case TypeKind::Pointer: return inner ? inner->describe() + "*" : "ptr";
    case TypeKind::Array:
      return (inner ? inner->describe() : "?") + "[" +
             (array_len >= 0 ? std::to_string(array_len) : "") + "]";
    case TypeKind::FnPtr: {
      std::string s = (ret ? ret->describe() : "?") + "(*)(";
      for (size_t i = 0; i < params.size(); ++i) {
        if (i) s += ", ";
        s += params[i].describe();
      }
      return s + ")";
    }
  }
  return "?";
}

bool is_libc_allowlisted(const std::string& name) {
  return kLibcAllowlist.count(name) > 0;
}

TranslationUnit parse(const CSourceFile& source) {
  return Parser(source).run();
}

ExprPtr parse_expression_snippet(const CSourceFile& snippet) {
  return Parser(snippet).run_expression();
}

std::vector<StmtPtr> parse_statement_snippet(const CSourceFile& snippet) {
  return Parser(snippet).run_statements();
}

}  // namespace c2j
