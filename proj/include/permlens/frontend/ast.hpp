#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "permlens/diagnostics.hpp"

namespace permlens::frontend {

struct TypeRef {
  std::string name;
  int dims = 0;
  Span span;

  bool is_array() const { return dims > 0; }
  bool is_primitive() const;  // int, boolean, ... with no array dimensions
  bool is_void() const { return name == "void" && dims == 0; }
  TypeRef element() const;
  std::string to_string() const;
};

bool is_primitive_name(std::string_view name);

struct Expr;
struct Stmt;
using ExprPtr = std::unique_ptr<Expr>;
using StmtPtr = std::unique_ptr<Stmt>;

enum class LiteralKind { Int, Float, String, Char, Bool };

struct NameExpr {
  std::string name;
};
struct ThisExpr {};
struct SuperExpr {};
struct FieldAccessExpr {
  ExprPtr receiver;
  std::string field;
};
struct ArrayAccessExpr {
  ExprPtr array;
  ExprPtr index;
};
struct AssignExpr {
  std::string op;  // "=", "+=", ...
  ExprPtr lhs;
  ExprPtr rhs;
};
// receiver is null for unqualified calls; name is "super" or "this" for
// explicit constructor invocations.
struct CallExpr {
  ExprPtr receiver;
  std::string name;
  std::vector<ExprPtr> args;
};
struct NewExpr {
  TypeRef type;
  std::vector<ExprPtr> args;
};
struct ArrayCreationExpr {
  TypeRef element;  // dims == 0
  std::vector<ExprPtr> dims;
  int extra_dims = 0;  // trailing "[]" without a size
  ExprPtr init;        // ArrayInitExpr or null
};
struct ArrayInitExpr {
  std::vector<ExprPtr> elements;
};
struct LiteralExpr {
  LiteralKind kind = LiteralKind::Int;
  std::string text;
};
struct NullExpr {};
struct InfixExpr {
  std::string op;
  ExprPtr lhs;
  ExprPtr rhs;
};
struct PrefixExpr {
  std::string op;
  ExprPtr operand;
};
struct PostfixExpr {
  std::string op;
  ExprPtr operand;
};
struct CastExpr {
  TypeRef type;
  ExprPtr operand;
};
struct ConditionalExpr {
  ExprPtr cond;
  ExprPtr then_expr;
  ExprPtr else_expr;
};
struct ParenExpr {
  ExprPtr inner;
};

struct Expr {
  using Node = std::variant<NameExpr, ThisExpr, SuperExpr, FieldAccessExpr, ArrayAccessExpr,
                            AssignExpr, CallExpr, NewExpr, ArrayCreationExpr, ArrayInitExpr,
                            LiteralExpr, NullExpr, InfixExpr, PrefixExpr, PostfixExpr, CastExpr,
                            ConditionalExpr, ParenExpr>;
  Span span;
  Node node;

  template <class T>
  const T* as() const {
    return std::get_if<T>(&node);
  }
  template <class T>
  T* as() {
    return std::get_if<T>(&node);
  }
  template <class T>
  bool is() const {
    return std::holds_alternative<T>(node);
  }
};

template <class T>
ExprPtr make_expr(Span span, T node) {
  return std::make_unique<Expr>(Expr{span, Expr::Node(std::move(node))});
}

// Strips parentheses and casts.
const Expr& unwrap(const Expr& expr);

ExprPtr clone(const Expr& expr);

struct Declarator {
  std::string name;
  int extra_dims = 0;
  ExprPtr init;
  Span span;
};

struct ExprStmt {
  ExprPtr expr;
};
struct LocalDeclStmt {
  TypeRef type;
  std::vector<Declarator> vars;
};
struct IfStmt {
  ExprPtr cond;
  StmtPtr then_stmt;
  StmtPtr else_stmt;
};
struct WhileStmt {
  ExprPtr cond;
  StmtPtr body;
  bool do_while = false;
};
struct ForStmt {
  std::vector<StmtPtr> init;
  ExprPtr cond;
  std::vector<ExprPtr> update;
  StmtPtr body;
};
struct ForEachStmt {
  TypeRef type;
  std::string var;
  ExprPtr iterable;
  StmtPtr body;
};
struct SwitchCase {
  std::vector<ExprPtr> labels;
  bool is_default = false;
  std::vector<StmtPtr> body;
  Span span;
};
struct SwitchStmt {
  ExprPtr selector;
  std::vector<SwitchCase> cases;
};
struct ReturnStmt {
  ExprPtr value;
};
struct BlockStmt {
  std::vector<StmtPtr> stmts;
};
struct BreakStmt {};
struct ContinueStmt {};
struct EmptyStmt {};

struct Stmt {
  using Node = std::variant<ExprStmt, LocalDeclStmt, IfStmt, WhileStmt, ForStmt, ForEachStmt,
                            SwitchStmt, ReturnStmt, BlockStmt, BreakStmt, ContinueStmt, EmptyStmt>;
  Span span;
  Node node;

  template <class T>
  const T* as() const {
    return std::get_if<T>(&node);
  }
  template <class T>
  T* as() {
    return std::get_if<T>(&node);
  }
};

template <class T>
StmtPtr make_stmt(Span span, T node) {
  return std::make_unique<Stmt>(Stmt{span, Stmt::Node(std::move(node))});
}

struct Param {
  TypeRef type;
  std::string name;
  Span span;
};

struct FieldDecl {
  TypeRef type;
  std::string name;
  ExprPtr init;
  bool is_static = false;
  std::vector<std::string> modifiers;
  Span span;
};

struct MethodDecl {
  std::string name;
  std::vector<std::string> modifiers;
  std::optional<TypeRef> return_type;  // empty for constructors
  std::vector<Param> params;
  std::vector<StmtPtr> body;
  bool has_body = true;
  bool is_constructor = false;
  bool is_static = false;
  bool is_main = false;
  bool is_synthesized = false;  // implicit constructor built from field initializers
  Span span;
  Span header_span;

  std::size_t arity() const { return params.size(); }
  bool returns_reference() const {
    return return_type && !return_type->is_void() && !return_type->is_primitive();
  }
};

struct ClassDecl {
  std::string name;
  std::optional<std::string> superclass;
  std::vector<std::string> modifiers;
  std::vector<FieldDecl> fields;
  std::vector<MethodDecl> methods;
  bool is_main_holder = false;
  Span span;
  std::size_t body_open = 0;  // offset just past '{'
};

struct CompilationUnit {
  std::string path;
  std::string source;
  std::vector<ClassDecl> classes;
};

struct Program {
  std::vector<CompilationUnit> units;

  std::size_t class_count() const;
  std::size_t method_count() const;
};

}  // namespace permlens::frontend
