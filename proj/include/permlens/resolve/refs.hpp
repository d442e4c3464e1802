#pragma once

#include <optional>

#include "permlens/ref_id.hpp"
#include "permlens/resolve/symbols.hpp"

namespace permlens::resolve {

// Maps reference expressions of one method body to RefIds.
class RefMapper {
 public:
  RefMapper(const SymbolTable& symbols, const MethodInfo& method)
      : symbols_(symbols), method_(method), promoted_(symbols.promoted_locals(method.id)) {}

  // The variable or field an expression names directly: x, this.f, C.f.
  std::optional<RefId> direct(const Expr& expr) const;
  // Like direct, but a store or load through r.f or a[i] collapses onto r or a.
  std::optional<RefId> root(const Expr& expr) const;
  // r.f with a receiver other than this, or a[i].
  bool is_interior(const Expr& expr) const;
  // The field an argument expression denotes, whatever its receiver.
  std::optional<RefId> denoted_field(const Expr& expr) const;

  RefId param(std::size_t index) const { return RefId::local(method_.id, method_.decl->params[index].name); }
  RefId local(const std::string& name) const;
  const MethodInfo& method() const { return method_; }
  const SymbolTable& symbols() const { return symbols_; }

 private:
  const SymbolTable& symbols_;
  const MethodInfo& method_;
  const std::set<std::string>& promoted_;
};

}  // namespace permlens::resolve
