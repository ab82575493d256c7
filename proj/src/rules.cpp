#include "c2j/rules.hpp"

#include <functional>
#include <set>

namespace c2j {

namespace {

const std::vector<RuleInfo> kRegistry = {
    {RuleId::GotoFwd, "R-goto-fwd",
     "forward goto cleanup becomes a labeled do-while(false) with break"},
    {RuleId::GotoBack, "R-goto-back",
     "backward goto loop becomes a do-while loop"},
    {RuleId::Union, "R-union",
     "union variables are deleted; cross-member access goes through bit converters"},
    {RuleId::Unsigned, "R-unsigned",
     "unsigned int maps to long masked with & 0xFFFFFFFFL, unsigned char to int masked with & 0xFF"},
    {RuleId::Addr, "R-addr", "address-of at call sites passes the reference directly"},
    {RuleId::Ptr, "R-ptr", "pointer over array becomes an index variable plus array reference"},
    {RuleId::Copy, "R-copy", "struct parameters passed by value are cloned via the copy constructor"},
    {RuleId::Macro, "R-macro", "macro invocations are inlined textually, side effects preserved"},
    {RuleId::Bool, "R-bool", "integers in boolean position gain an explicit != 0"},
    {RuleId::Mem, "R-mem", "malloc of a record becomes a constructor call; free is deleted"},
    {RuleId::Str, "R-str", "strcpy/strcat/strlen over char buffers become String operations"},
    {RuleId::VoidPtr, "R-voidptr", "void* becomes Object with explicit casts at use sites"},
    {RuleId::OutParam, "R-outparam",
     "pointer-to-pointer out-parameters become return values"},
    {RuleId::FnPtr, "R-fnptr",
     "function pointers become functional-interface values"},
    {RuleId::Enum, "R-enum",
     "enum values become ints resolved through the translated constant table"},
    {RuleId::Sizeof, "R-sizeof", "sizeof becomes a constant from the platform model"},
    {RuleId::Switch, "R-switch", "switch fall-through is preserved by omitting break exactly where C omits it"},
    {RuleId::Bitfield, "R-bitfield",
     "bitfield member access goes through masked getters and setters"},
    {RuleId::Global, "R-global", "function reads or writes a translated global field"},
    {RuleId::Nested, "R-nested", "function accesses a record nested inside another record"},
};

struct Detector {
  const FunctionDecl& fn;
  const TranslationContext& ctx;
  std::set<RuleId> found;
  std::set<std::string> locals;
  std::map<std::string, CType> var_types;

  void mark(RuleId id) { found.insert(id); }

  bool is_unsigned_type(const CType& t) const {
    if (t.is_unsigned()) return true;
    if (t.inner && is_unsigned_type(*t.inner)) return true;
    return false;
  }

  void scan_type(const CType& t) {
    if (is_unsigned_type(t)) mark(RuleId::Unsigned);
    if (t.kind == TypeKind::FnPtr) mark(RuleId::FnPtr);
    if (t.is_void_pointer()) mark(RuleId::VoidPtr);
    if (t.is_pointer() && t.inner && t.inner->is_pointer())
      mark(RuleId::OutParam);
    if (t.kind == TypeKind::Enum) mark(RuleId::Enum);
    if (t.kind == TypeKind::Record) {
      auto it = ctx.records.find(t.name);
      if (it != ctx.records.end()) {
        if (it->second.kind == RecordKind::Union) mark(RuleId::Union);
        if (it->second.has_bitfields) mark(RuleId::Bitfield);
        if (it->second.decl)
          for (const auto& f : it->second.decl->fields)
            if (f.type.kind == TypeKind::Record) mark(RuleId::Nested);
      }
    }
  }

  std::optional<CType> type_of_var(const std::string& name) const {
    auto it = var_types.find(name);
    if (it != var_types.end()) return it->second;
    auto g = ctx.globals.find(name);
    if (g != ctx.globals.end()) return g->second->type;
    return std::nullopt;
  }

  // A C expression already boolean-shaped in Java after translation.
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

  void scan_condition(const Expr& e) {
    if (!boolean_shaped(e)) mark(RuleId::Bool);
    scan_expr(e);
  }

  void scan_expr(const Expr& e) {
    switch (e.kind) {
      case ExprKind::Ident: {
        const std::string& name = e.spelling;
        if (ctx.enum_consts.count(name)) mark(RuleId::Enum);
        if (!locals.count(name) && ctx.globals.count(name))
          mark(RuleId::Global);
        if (ctx.macros.count(name) && !ctx.macros.at(name)->function_like())
          mark(RuleId::Macro);
        if (auto t = type_of_var(name)) scan_type(*t);
        break;
      }
      case ExprKind::Unary:
        if (e.spelling == "&") mark(RuleId::Addr);
        if (e.spelling == "*" && e.prefix) {
          // dereference of a pointer variable backed by an array
          const Expr* inner = e.a.get();
          while (inner && inner->kind == ExprKind::Paren) inner = inner->a.get();
          if (inner) {
            if (inner->kind == ExprKind::Ident || inner->kind == ExprKind::Binary)
              mark(RuleId::Ptr);
          }
        }
        if ((e.spelling == "++" || e.spelling == "--") && e.a &&
            e.a->kind == ExprKind::Ident) {
          if (auto t = type_of_var(e.a->spelling); t && t->is_pointer())
            mark(RuleId::Ptr);
        }
        if (e.a) scan_expr(*e.a);
        break;
      case ExprKind::Binary:
        if (e.spelling == "&&" || e.spelling == "||") {
          scan_condition(*e.a);
          scan_condition(*e.b);
          return;
        }
        scan_expr(*e.a);
        scan_expr(*e.b);
        break;
      case ExprKind::Assign:
        scan_expr(*e.a);
        scan_expr(*e.b);
        break;
      case ExprKind::Ternary:
        scan_condition(*e.a);
        scan_expr(*e.b);
        scan_expr(*e.c);
        break;
      case ExprKind::Call: {
        if (e.a->kind == ExprKind::Ident) {
          const std::string& callee = e.a->spelling;
          if (callee == "malloc" || callee == "free") mark(RuleId::Mem);
          if (callee == "strcpy" || callee == "strcat" || callee == "strlen")
            mark(RuleId::Str);
          if (ctx.macros.count(callee)) mark(RuleId::Macro);
          if (auto t = type_of_var(callee); t && t->kind == TypeKind::FnPtr)
            mark(RuleId::FnPtr);
          auto fit = ctx.functions.find(callee);
          if (fit != ctx.functions.end()) {
            for (const auto& p : fit->second->params)
              if (p.type.kind == TypeKind::FnPtr)
                for (const auto& a : e.args)
                  if (a->kind == ExprKind::Ident &&
                      ctx.functions.count(a->spelling))
                    mark(RuleId::FnPtr);
          }
        } else {
          scan_expr(*e.a);
        }
        for (const auto& a : e.args) scan_expr(*a);
        break;
      }
      case ExprKind::Member: {
        // chained record member access: outer.inner.value
        if (e.a->kind == ExprKind::Member) mark(RuleId::Nested);
        // bitfield / union member access by declared type
        const Expr* base = e.a.get();
        while (base && base->kind == ExprKind::Paren) base = base->a.get();
        if (base && base->kind == ExprKind::Ident) {
          if (auto t = type_of_var(base->spelling)) {
            CType rt = *t;
            if (rt.is_pointer() && rt.inner) rt = *rt.inner;
            if (rt.kind == TypeKind::Record) {
              auto it = ctx.records.find(rt.name);
              if (it != ctx.records.end()) {
                if (it->second.kind == RecordKind::Union) mark(RuleId::Union);
                const FieldDecl* f = ctx.find_field(rt.name, e.member);
                if (f && f->bit_width >= 0) mark(RuleId::Bitfield);
                if (f && f->type.kind == TypeKind::Record) mark(RuleId::Nested);
              }
            }
          }
        }
        scan_expr(*e.a);
        break;
      }
      case ExprKind::Index:
        scan_expr(*e.a);
        scan_expr(*e.b);
        break;
      case ExprKind::Cast:
        scan_type(e.type);
        scan_expr(*e.a);
        break;
      case ExprKind::SizeofType:
        mark(RuleId::Sizeof);
        break;
      case ExprKind::SizeofExpr:
        mark(RuleId::Sizeof);
        if (e.a) scan_expr(*e.a);
        break;
      case ExprKind::Paren:
        scan_expr(*e.a);
        break;
      case ExprKind::InitList:
        for (const auto& a : e.args) scan_expr(*a);
        break;
      default:
        break;
    }
  }

  void scan_stmt(const Stmt& s) {
    switch (s.kind) {
      case StmtKind::Block:
        for (const auto& st : s.stmts) scan_stmt(*st);
        break;
      case StmtKind::Decl: {
        const VarDecl& d = *s.decl;
        locals.insert(d.name);
        var_types[d.name] = d.type;
        scan_type(d.type);
        if (d.type.is_pointer() && d.init) {
          const Expr* init = d.init.get();
          while (init && init->kind == ExprKind::Paren) init = init->a.get();
          if (init && init->kind == ExprKind::Ident) {
            if (auto t = type_of_var(init->spelling); t && t->is_array())
              mark(RuleId::Ptr);
          }
        }
        if (d.init) scan_expr(*d.init);
        break;
      }
      case StmtKind::ExprStmt:
        if (s.expr) scan_expr(*s.expr);
        break;
      case StmtKind::If:
        scan_condition(*s.expr);
        scan_stmt(*s.body);
        if (s.else_body) scan_stmt(*s.else_body);
        break;
      case StmtKind::While:
      case StmtKind::DoWhile:
        scan_condition(*s.expr);
        scan_stmt(*s.body);
        break;
      case StmtKind::For:
        if (s.init_stmt) scan_stmt(*s.init_stmt);
        if (s.expr) scan_condition(*s.expr);
        if (s.step) scan_expr(*s.step);
        scan_stmt(*s.body);
        break;
      case StmtKind::Switch:
        mark(RuleId::Switch);
        scan_expr(*s.expr);
        for (const auto& c : s.cases) {
          if (c.label) scan_expr(*c.label);
          for (const auto& st : c.body) scan_stmt(*st);
        }
        break;
      case StmtKind::Return:
        if (s.expr) scan_expr(*s.expr);
        break;
      default:
        break;
    }
  }

  void scan_gotos() {
    // forward vs backward by source position of label vs goto
    std::map<std::string, size_t> label_pos;
    std::vector<std::pair<std::string, size_t>> gotos;
    std::function<void(const Stmt&)> walk = [&](const Stmt& s) {
      if (s.kind == StmtKind::Label) label_pos[s.label] = s.span.begin;
      if (s.kind == StmtKind::Goto) gotos.push_back({s.label, s.span.begin});
      for (const auto& st : s.stmts) walk(*st);
      if (s.body) walk(*s.body);
      if (s.else_body) walk(*s.else_body);
      if (s.init_stmt) walk(*s.init_stmt);
      for (const auto& c : s.cases)
        for (const auto& st : c.body) walk(*st);
    };
    if (fn.body) walk(*fn.body);
    for (const auto& [label, at] : gotos) {
      auto it = label_pos.find(label);
      if (it == label_pos.end()) continue;
      if (it->second > at)
        mark(RuleId::GotoFwd);
      else
        mark(RuleId::GotoBack);
    }
  }

  std::vector<RuleId> run() {
    for (const auto& p : fn.params) {
      locals.insert(p.name);
      var_types[p.name] = p.type;
      scan_type(p.type);
      if (p.type.kind == TypeKind::Record) mark(RuleId::Copy);
    }
    if (fn.body) scan_stmt(*fn.body);
    scan_gotos();
    std::vector<RuleId> out;
    for (const auto& info : kRegistry)
      if (found.count(info.id)) out.push_back(info.id);
    return out;
  }
};

}  // namespace

const std::vector<RuleInfo>& rule_registry() { return kRegistry; }

const char* rule_name(RuleId id) {
  for (const auto& info : kRegistry)
    if (info.id == id) return info.name;
  return "?";
}

std::vector<RuleId> applicable_rules(const FunctionDecl& fn,
                                     const TranslationContext& ctx) {
  Detector d{fn, ctx, {}, {}, {}};
  return d.run();
}

std::vector<RuleId> applicable_rules(const CDecomposition& parts,
                                     const TranslationContext& ctx) {
  std::set<RuleId> all;
  for (const auto& f : parts.functions) {
    for (RuleId id : applicable_rules(*f.decl, ctx)) all.insert(id);
  }
  std::vector<RuleId> out;
  for (const auto& info : rule_registry())
    if (all.count(info.id)) out.push_back(info.id);
  return out;
}

}  // namespace c2j
