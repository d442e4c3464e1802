#include "permlens/resolve/refs.hpp"

namespace permlens::resolve {

using namespace frontend;

RefId RefMapper::local(const std::string& name) const {
  if (promoted_.count(name)) return RefId::main_local(method_.id, name);
  return RefId::local(method_.id, name);
}

std::optional<RefId> RefMapper::direct(const Expr& expr) const {
  const Expr& e = unwrap(expr);
  const Resolution* r = symbols_.resolution(e);
  if (!r) return std::nullopt;
  switch (r->kind) {
    case ResolutionKind::Local:
      return local(r->name);
    case ResolutionKind::Param:
      return param(r->param_index);
    case ResolutionKind::Field: {
      if (const auto* fa = e.as<FieldAccessExpr>()) {
        const Expr& recv = *fa->receiver;
        const Resolution* rr = symbols_.resolution(recv);
        const bool own = recv.is<ThisExpr>() || recv.is<SuperExpr>();
        const bool by_class = rr && rr->kind == ResolutionKind::ClassRef;
        if (!own && !by_class && !r->field->is_static) return std::nullopt;
      }
      return r->field->ref();
    }
    default:
      return std::nullopt;
  }
}

bool RefMapper::is_interior(const Expr& expr) const {
  const Expr& e = unwrap(expr);
  if (e.is<ArrayAccessExpr>()) return true;
  if (e.is<FieldAccessExpr>()) return !direct(e).has_value();
  return false;
}

std::optional<RefId> RefMapper::root(const Expr& expr) const {
  const Expr& e = unwrap(expr);
  if (auto d = direct(e)) return d;
  if (const auto* fa = e.as<FieldAccessExpr>()) return root(*fa->receiver);
  if (const auto* aa = e.as<ArrayAccessExpr>()) return root(*aa->array);
  return std::nullopt;
}

std::optional<RefId> RefMapper::denoted_field(const Expr& expr) const {
  const Expr& e = unwrap(expr);
  if (const Resolution* r = symbols_.resolution(e); r && r->kind == ResolutionKind::Field) {
    return r->field->ref();
  }
  return std::nullopt;
}

}  // namespace permlens::resolve
