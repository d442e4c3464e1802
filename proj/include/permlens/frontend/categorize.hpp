#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "permlens/diagnostics.hpp"
#include "permlens/frontend/ast.hpp"

namespace permlens::frontend {

enum class ExprCategory {
  ReadOnly,
  ValueFlow,
  ObjectCreation,
  AddressFlow,
  NullAddressFlow,
  SelfAddressFlow,
  MethodInvocation,
  Declaration,
};

std::string_view to_string(ExprCategory category);

// Type information the categorizer needs about names in scope.
class TypeEnv {
 public:
  virtual ~TypeEnv() = default;
  // Declared (static) type of the value an expression denotes, if known.
  virtual std::optional<TypeRef> type_of(const Expr& expr) const = 0;
  // Identity of the storage location a reference expression names; two
  // expressions with equal keys denote the same variable or field.
  virtual std::optional<std::string> storage_key(const Expr& expr) const = 0;
};

// Scope-only environment: locals with declared types, everything else is a
// field of the enclosing class.
class ScopeTypeEnv : public TypeEnv {
 public:
  void declare_local(std::string name, TypeRef type) { locals_[std::move(name)] = std::move(type); }
  void declare_field(std::string name, TypeRef type) { fields_[std::move(name)] = std::move(type); }

  std::optional<TypeRef> type_of(const Expr& expr) const override;
  std::optional<std::string> storage_key(const Expr& expr) const override;

 private:
  std::map<std::string, TypeRef> locals_;
  std::map<std::string, TypeRef> fields_;
};

// Best-effort static type of an arbitrary expression (literals, arithmetic,
// string concatenation) on top of what the environment knows.
std::optional<TypeRef> expression_type(const Expr& expr, const TypeEnv& env);

// Exactly one category per expression statement. Assignment categories are
// decided by the right-hand side; see ExprCategory.
ExprCategory categorize(const Expr& expr, const TypeEnv& env, std::vector<Diagnostic>* diags = nullptr);

// Category of a declarator inside a local declaration: Declaration when it
// has no initializer, otherwise that of the equivalent assignment.
ExprCategory categorize_declarator(const TypeRef& type, const Declarator& decl, const TypeEnv& env,
                                   std::vector<Diagnostic>* diags = nullptr);

}  // namespace permlens::frontend
