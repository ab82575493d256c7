#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "c2j/error.hpp"

namespace c2j {

// ---------------------------------------------------------------------------
// Types

enum class TypeKind {
  Void,
  Char,
  UChar,
  Short,
  UShort,
  Int,
  UInt,
  Long,
  ULong,
  Float,
  Double,
  Record,   // struct or union, by tag name
  Enum,     // by tag name
  Named,    // typedef name, resolved during decomposition
  Pointer,
  Array,
  FnPtr,
};

struct CType {
  TypeKind kind = TypeKind::Int;
  bool is_const = false;
  std::string name;  // Record/Enum/Named
  std::shared_ptr<CType> inner;  // pointee or array element
  long long array_len = -1;      // -1 when unspecified
  std::shared_ptr<CType> ret;    // FnPtr
  std::vector<CType> params;     // FnPtr

  static CType basic(TypeKind k) {
    CType t;
    t.kind = k;
    return t;
  }
  static CType pointer_to(CType pointee) {
    CType t;
    t.kind = TypeKind::Pointer;
    t.inner = std::make_shared<CType>(std::move(pointee));
    return t;
  }
  static CType array_of(CType elem, long long len) {
    CType t;
    t.kind = TypeKind::Array;
    t.inner = std::make_shared<CType>(std::move(elem));
    t.array_len = len;
    return t;
  }

  bool is_pointer() const { return kind == TypeKind::Pointer; }
  bool is_array() const { return kind == TypeKind::Array; }
  bool is_record(const std::string& tag = "") const {
    return kind == TypeKind::Record && (tag.empty() || name == tag);
  }
  bool is_unsigned() const {
    return kind == TypeKind::UInt || kind == TypeKind::UChar ||
           kind == TypeKind::UShort || kind == TypeKind::ULong;
  }
  bool is_char_pointer() const {
    return is_pointer() && inner && inner->kind == TypeKind::Char;
  }
  bool is_char_array() const {
    return is_array() && inner && inner->kind == TypeKind::Char;
  }
  bool is_void_pointer() const {
    return is_pointer() && inner && inner->kind == TypeKind::Void;
  }

  std::string describe() const;
};

// ---------------------------------------------------------------------------
// Expressions

enum class ExprKind {
  IntLit,
  FloatLit,
  StrLit,
  CharLit,
  Ident,
  Unary,
  Binary,
  Assign,
  Ternary,
  Call,
  Member,
  Index,
  Cast,
  SizeofType,
  SizeofExpr,
  Paren,
  InitList,
};

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
  ExprKind kind;
  Span span;

  // literals
  long long int_value = 0;
  bool unsigned_suffix = false;
  std::string spelling;  // original literal text (also: ident name, op text)

  // structure
  bool prefix = true;        // Unary
  bool arrow = false;        // Member
  std::string member;        // Member field name
  ExprPtr a, b, c;           // operands: unary/paren(a), binary(a,b), ternary
  std::vector<ExprPtr> args; // Call arguments, InitList items
  CType type;                // Cast target, SizeofType operand

  explicit Expr(ExprKind k) : kind(k) {}
};

// ---------------------------------------------------------------------------
// Statements and declarations

enum class StmtKind {
  Block,
  Decl,
  ExprStmt,  // expr may be null for the empty statement
  If,
  While,
  DoWhile,
  For,
  Switch,
  Return,
  Break,
  Continue,
  Goto,
  Label,
};

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

struct VarDecl {
  CType type;
  std::string name;
  ExprPtr init;  // may be null
  Span span;
};

struct SwitchCase {
  ExprPtr label;  // null for default
  std::vector<StmtPtr> body;
  bool has_break = false;  // body ends with an explicit break
  Span span;
};

struct Stmt {
  StmtKind kind;
  Span span;

  std::vector<StmtPtr> stmts;   // Block
  std::optional<VarDecl> decl;  // Decl
  ExprPtr expr;                 // ExprStmt, If/While/DoWhile cond, Return,
                                // Switch value, For cond
  StmtPtr body, else_body;      // If(then/else), loops(body)
  StmtPtr init_stmt;            // For init
  ExprPtr step;                 // For step
  std::vector<SwitchCase> cases;
  std::string label;            // Goto target / Label name

  explicit Stmt(StmtKind k) : kind(k) {}
};

struct ParamDecl {
  CType type;
  std::string name;
  Span span;
};

struct FieldDecl {
  CType type;
  std::string name;
  int bit_width = -1;  // -1: not a bitfield
  Span span;
};

struct EnumConstDecl {
  std::string name;
  long long value = 0;
  Span span;
};

enum class RecordKind { Struct, Union, Enum };

struct RecordDecl {
  RecordKind rkind = RecordKind::Struct;
  std::string name;
  std::vector<FieldDecl> fields;      // struct/union
  std::vector<EnumConstDecl> consts;  // enum
  Span span;
};

struct FunctionDecl {
  CType ret;
  std::string name;
  std::vector<ParamDecl> params;
  StmtPtr body;  // null for a prototype
  Span span;     // whole definition including body
  Span signature_span;
};

struct TypedefDecl {
  CType underlying;
  std::string name;
  Span span;
};

enum class TopLevelKind { Global, Record, Function, Prototype, Typedef };

struct TopLevel {
  TopLevelKind kind;
  Span span;
  std::optional<VarDecl> global;
  std::unique_ptr<RecordDecl> record;
  std::unique_ptr<FunctionDecl> function;  // Function or Prototype
  std::optional<TypedefDecl> typedef_decl;
};

struct TranslationUnit {
  std::vector<TopLevel> decls;
};

const char* record_kind_name(RecordKind k);

}  // namespace c2j
