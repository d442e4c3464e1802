#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "permlens/diagnostics.hpp"
#include "permlens/frontend/ast.hpp"
#include "permlens/frontend/categorize.hpp"
#include "permlens/ref_id.hpp"

namespace permlens::resolve {

using frontend::ClassDecl;
using frontend::Expr;
using frontend::MethodDecl;
using frontend::Program;
using frontend::TypeRef;

struct FieldInfo {
  std::string owner;
  std::string name;
  TypeRef type;
  bool is_static = false;
  std::size_t index = 0;  // declaration order within the class

  RefId ref() const { return RefId::field(owner, name); }
};

struct ClassInfo {
  const ClassDecl* decl = nullptr;
  std::string unit_path;
  std::size_t order = 0;
  std::vector<FieldInfo> fields;
};

struct MethodInfo {
  std::string id;  // "Class.name/arity"
  std::string class_name;
  const ClassDecl* cls = nullptr;
  const MethodDecl* decl = nullptr;
  std::size_t order = 0;  // program order
  std::string unit_path;

  bool is_constructor() const { return decl->is_constructor; }
  bool is_main() const { return decl->is_main; }
};

enum class ResolutionKind { Field, Local, Param, ClassRef, ArrayLength, External, Unresolved };

struct Resolution {
  ResolutionKind kind = ResolutionKind::Unresolved;
  const FieldInfo* field = nullptr;  // Field
  std::string name;                  // Local / Param / ClassRef
  std::size_t param_index = 0;       // Param
  std::optional<TypeRef> type;
};

class SymbolTable : public frontend::TypeEnv {
 public:
  const ClassInfo* find_class(std::string_view name) const;
  // Both lookups walk the superclass chain.
  const FieldInfo* find_field(std::string_view cls, std::string_view name) const;
  const MethodInfo* find_method(std::string_view cls, std::string_view name, std::size_t arity) const;
  const MethodInfo* find_constructor(std::string_view cls, std::size_t arity) const;

  const MethodInfo* method(std::string_view id) const;
  const MethodInfo* info(const MethodDecl* decl) const;
  const std::vector<MethodInfo>& methods() const { return methods_; }
  const std::vector<std::string>& class_order() const { return class_order_; }
  std::vector<std::string> superclass_chain(std::string_view cls) const;  // cls first
  bool inherits(std::string_view cls, std::string_view ancestor) const;

  const Resolution* resolution(const Expr& expr) const;
  // Resolved user method for a call expression, null for library calls.
  const MethodInfo* callee(const Expr& call) const;
  // Entry-point locals that hold freshly created objects.
  const std::set<std::string>& promoted_locals(const std::string& method_id) const;
  // Same name, different arity within one class.
  bool is_overloaded(const MethodInfo& m) const;

  std::optional<TypeRef> type_of(const Expr& expr) const override;
  std::optional<std::string> storage_key(const Expr& expr) const override;

  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  friend class Builder;
  friend SymbolTable build_symbols(const Program& program);

  std::map<std::string, ClassInfo, std::less<>> classes_;
  std::vector<std::string> class_order_;
  std::vector<MethodInfo> methods_;
  std::map<std::string, std::size_t, std::less<>> method_index_;
  std::unordered_map<const MethodDecl*, std::size_t> decl_index_;
  std::unordered_map<const Expr*, Resolution> resolutions_;
  std::unordered_map<const Expr*, TypeRef> types_;
  std::unordered_map<const Expr*, std::size_t> callees_;
  std::map<std::string, std::set<std::string>> promoted_;
  std::vector<Diagnostic> diagnostics_;
};

std::string method_id(const ClassDecl& cls, const MethodDecl& m);

// The program must outlive the table.
SymbolTable build_symbols(const Program& program);

}  // namespace permlens::resolve
