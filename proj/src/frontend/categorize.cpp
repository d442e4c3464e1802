#include "permlens/frontend/categorize.hpp"

namespace permlens::frontend {

namespace {

TypeRef named(std::string name) { return TypeRef{std::move(name), 0, {}}; }

bool is_string(const std::optional<TypeRef>& t) { return t && t->dims == 0 && t->name == "String"; }

bool is_literal(const Expr& e) { return e.is<LiteralExpr>(); }

ExprCategory categorize_assignment(const std::string& op, const Expr* lhs, const Expr& rhs_raw,
                                   const std::optional<TypeRef>& lhs_type, const TypeEnv& env,
                                   std::vector<Diagnostic>* diags) {
  if (op != "=") return ExprCategory::ValueFlow;
  const Expr& rhs = unwrap(rhs_raw);
  if (rhs.is<NullExpr>()) return ExprCategory::NullAddressFlow;
  if (rhs.is<NewExpr>() || rhs.is<ArrayCreationExpr>() || rhs.is<ArrayInitExpr>()) {
    return ExprCategory::ObjectCreation;
  }
  if (lhs) {
    const auto lhs_key = env.storage_key(*lhs);
    if (lhs_key && lhs_key == env.storage_key(rhs)) return ExprCategory::SelfAddressFlow;
  }
  if (is_literal(rhs)) return ExprCategory::ValueFlow;
  if (lhs_type && lhs_type->is_primitive()) return ExprCategory::ValueFlow;
  const auto rhs_type = expression_type(rhs_raw, env);
  if (rhs_type && rhs_type->is_primitive()) return ExprCategory::ValueFlow;
  if (!rhs_type && diags && rhs.is<NameExpr>()) {
    diags->push_back(Diagnostic{Severity::Warning, "UnknownType",
                                "cannot resolve the declared type of '" + rhs.as<NameExpr>()->name +
                                    "'; treating the assignment as an address flow",
                                {}, rhs.span});
  }
  return ExprCategory::AddressFlow;
}

}  // namespace

std::string_view to_string(ExprCategory category) {
  switch (category) {
    case ExprCategory::ReadOnly: return "ReadOnly";
    case ExprCategory::ValueFlow: return "ValueFlow";
    case ExprCategory::ObjectCreation: return "ObjectCreation";
    case ExprCategory::AddressFlow: return "AddressFlow";
    case ExprCategory::NullAddressFlow: return "NullAddressFlow";
    case ExprCategory::SelfAddressFlow: return "SelfAddressFlow";
    case ExprCategory::MethodInvocation: return "MethodInvocation";
    case ExprCategory::Declaration: return "Declaration";
  }
  return "?";
}

std::optional<TypeRef> ScopeTypeEnv::type_of(const Expr& expr) const {
  const Expr& e = unwrap(expr);
  if (const auto* n = e.as<NameExpr>()) {
    if (auto it = locals_.find(n->name); it != locals_.end()) return it->second;
    if (auto it = fields_.find(n->name); it != fields_.end()) return it->second;
    return std::nullopt;
  }
  if (const auto* f = e.as<FieldAccessExpr>()) {
    if (f->receiver->is<ThisExpr>()) {
      if (auto it = fields_.find(f->field); it != fields_.end()) return it->second;
    }
    return std::nullopt;
  }
  if (const auto* a = e.as<ArrayAccessExpr>()) {
    auto arr = type_of(*a->array);
    if (arr && arr->is_array()) return arr->element();
  }
  return std::nullopt;
}

std::optional<std::string> ScopeTypeEnv::storage_key(const Expr& expr) const {
  const Expr& e = unwrap(expr);
  if (const auto* n = e.as<NameExpr>()) {
    if (locals_.count(n->name)) return "local:" + n->name;
    return "field:" + n->name;
  }
  if (const auto* f = e.as<FieldAccessExpr>()) {
    if (f->receiver->is<ThisExpr>()) return "field:" + f->field;
  }
  return std::nullopt;
}

std::optional<TypeRef> expression_type(const Expr& expr, const TypeEnv& env) {
  if (auto known = env.type_of(expr)) return known;
  const Expr& e = expr;
  if (const auto* lit = e.as<LiteralExpr>()) {
    switch (lit->kind) {
      case LiteralKind::Int: return named("int");
      case LiteralKind::Float: return named("double");
      case LiteralKind::Bool: return named("boolean");
      case LiteralKind::Char: return named("char");
      case LiteralKind::String: return named("String");
    }
  }
  if (const auto* p = e.as<ParenExpr>()) return expression_type(*p->inner, env);
  if (const auto* c = e.as<CastExpr>()) return c->type;
  if (const auto* in = e.as<InfixExpr>()) {
    const std::string& op = in->op;
    if (op == "==" || op == "!=" || op == "<" || op == ">" || op == "<=" || op == ">=" || op == "&&" ||
        op == "||" || op == "instanceof") {
      return named("boolean");
    }
    auto l = expression_type(*in->lhs, env);
    auto r = expression_type(*in->rhs, env);
    if (op == "+" && (is_string(l) || is_string(r))) return named("String");
    return named("double");  // any numeric primitive will do here
  }
  if (e.is<PrefixExpr>() || e.is<PostfixExpr>()) {
    const auto* pre = e.as<PrefixExpr>();
    if (pre && pre->op == "!") return named("boolean");
    return named("int");
  }
  if (const auto* a = e.as<AssignExpr>()) return expression_type(*a->lhs, env);
  if (const auto* c = e.as<ConditionalExpr>()) {
    if (auto t = expression_type(*c->then_expr, env)) return t;
    return expression_type(*c->else_expr, env);
  }
  if (const auto* n = e.as<NewExpr>()) return n->type;
  if (const auto* n = e.as<ArrayCreationExpr>()) {
    TypeRef t = n->element;
    t.dims = static_cast<int>(n->dims.size()) + n->extra_dims;
    return t;
  }
  return std::nullopt;
}

ExprCategory categorize(const Expr& expr, const TypeEnv& env, std::vector<Diagnostic>* diags) {
  const Expr& e = unwrap(expr);
  if (const auto* a = e.as<AssignExpr>()) {
    return categorize_assignment(a->op, a->lhs.get(), *a->rhs, env.type_of(*a->lhs), env, diags);
  }
  if (e.is<CallExpr>()) return ExprCategory::MethodInvocation;
  if (e.is<NewExpr>() || e.is<ArrayCreationExpr>()) return ExprCategory::ObjectCreation;
  if (const auto* p = e.as<PrefixExpr>()) {
    if (p->op == "++" || p->op == "--") return ExprCategory::ValueFlow;
  }
  if (e.is<PostfixExpr>()) return ExprCategory::ValueFlow;
  return ExprCategory::ReadOnly;
}

ExprCategory categorize_declarator(const TypeRef& type, const Declarator& decl, const TypeEnv& env,
                                   std::vector<Diagnostic>* diags) {
  if (!decl.init) return ExprCategory::Declaration;
  TypeRef full = type;
  full.dims += decl.extra_dims;
  // a fresh local cannot be its own initializer
  return categorize_assignment("=", nullptr, *decl.init, full, env, diags);
}

}  // namespace permlens::frontend
