#include "permlens/frontend/ast.hpp"

#include <array>

#include "permlens/util/overloaded.hpp"

namespace permlens::frontend {

namespace {

ExprPtr clone_opt(const ExprPtr& e) { return e ? clone(*e) : nullptr; }

std::vector<ExprPtr> clone_all(const std::vector<ExprPtr>& in) {
  std::vector<ExprPtr> out;
  out.reserve(in.size());
  for (const auto& e : in) out.push_back(clone(*e));
  return out;
}

}  // namespace

bool is_primitive_name(std::string_view name) {
  static constexpr std::array<std::string_view, 8> kPrimitives = {
      "int", "boolean", "double", "float", "long", "char", "byte", "short"};
  for (auto p : kPrimitives) {
    if (p == name) return true;
  }
  return false;
}

bool TypeRef::is_primitive() const { return dims == 0 && is_primitive_name(name); }

TypeRef TypeRef::element() const {
  TypeRef out = *this;
  if (out.dims > 0) --out.dims;
  return out;
}

std::string TypeRef::to_string() const {
  std::string out = name;
  for (int i = 0; i < dims; ++i) out += "[]";
  return out;
}

const Expr& unwrap(const Expr& expr) {
  const Expr* cur = &expr;
  for (;;) {
    if (const auto* p = cur->as<ParenExpr>()) {
      cur = p->inner.get();
    } else if (const auto* c = cur->as<CastExpr>()) {
      cur = c->operand.get();
    } else {
      return *cur;
    }
  }
}

ExprPtr clone(const Expr& expr) {
  Expr::Node node = std::visit(
      Overloaded{
          [](const NameExpr& n) -> Expr::Node { return n; },
          [](const ThisExpr& n) -> Expr::Node { return n; },
          [](const SuperExpr& n) -> Expr::Node { return n; },
          [](const FieldAccessExpr& n) -> Expr::Node {
            return FieldAccessExpr{clone(*n.receiver), n.field};
          },
          [](const ArrayAccessExpr& n) -> Expr::Node {
            return ArrayAccessExpr{clone(*n.array), clone(*n.index)};
          },
          [](const AssignExpr& n) -> Expr::Node {
            return AssignExpr{n.op, clone(*n.lhs), clone(*n.rhs)};
          },
          [](const CallExpr& n) -> Expr::Node {
            return CallExpr{clone_opt(n.receiver), n.name, clone_all(n.args)};
          },
          [](const NewExpr& n) -> Expr::Node { return NewExpr{n.type, clone_all(n.args)}; },
          [](const ArrayCreationExpr& n) -> Expr::Node {
            return ArrayCreationExpr{n.element, clone_all(n.dims), n.extra_dims, clone_opt(n.init)};
          },
          [](const ArrayInitExpr& n) -> Expr::Node { return ArrayInitExpr{clone_all(n.elements)}; },
          [](const LiteralExpr& n) -> Expr::Node { return n; },
          [](const NullExpr& n) -> Expr::Node { return n; },
          [](const InfixExpr& n) -> Expr::Node {
            return InfixExpr{n.op, clone(*n.lhs), clone(*n.rhs)};
          },
          [](const PrefixExpr& n) -> Expr::Node { return PrefixExpr{n.op, clone(*n.operand)}; },
          [](const PostfixExpr& n) -> Expr::Node { return PostfixExpr{n.op, clone(*n.operand)}; },
          [](const CastExpr& n) -> Expr::Node { return CastExpr{n.type, clone(*n.operand)}; },
          [](const ConditionalExpr& n) -> Expr::Node {
            return ConditionalExpr{clone(*n.cond), clone(*n.then_expr), clone(*n.else_expr)};
          },
          [](const ParenExpr& n) -> Expr::Node { return ParenExpr{clone(*n.inner)}; },
      },
      expr.node);
  return std::make_unique<Expr>(Expr{expr.span, std::move(node)});
}

std::size_t Program::class_count() const {
  std::size_t n = 0;
  for (const auto& u : units) n += u.classes.size();
  return n;
}

std::size_t Program::method_count() const {
  std::size_t n = 0;
  for (const auto& u : units) {
    for (const auto& c : u.classes) n += c.methods.size();
  }
  return n;
}

}  // namespace permlens::frontend
