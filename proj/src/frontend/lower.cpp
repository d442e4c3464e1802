#include "permlens/frontend/lower.hpp"

namespace permlens::frontend {

namespace {

std::vector<StmtPtr> initializer_stmts(const ClassDecl& cls) {
  std::vector<StmtPtr> out;
  for (const auto& f : cls.fields) {
    if (f.is_static || !f.init) continue;
    auto lhs = make_expr(f.span, FieldAccessExpr{make_expr(f.span, ThisExpr{}), f.name});
    auto assign = make_expr(f.span, AssignExpr{"=", std::move(lhs), clone(*f.init)});
    out.push_back(make_stmt(f.span, ExprStmt{std::move(assign)}));
  }
  return out;
}

bool is_ctor_call(const Stmt& s, std::string_view which) {
  const auto* es = s.as<ExprStmt>();
  if (!es) return false;
  const auto* call = es->expr->as<CallExpr>();
  return call && !call->receiver && call->name == which;
}

}  // namespace

void lower_field_initializers(CompilationUnit& unit) {
  for (auto& cls : unit.classes) {
    bool has_ctor = false;
    for (const auto& m : cls.methods) has_ctor = has_ctor || m.is_constructor;
    if (!has_ctor) {
      auto body = initializer_stmts(cls);
      if (body.empty()) continue;
      MethodDecl ctor;
      ctor.name = cls.name;
      ctor.is_constructor = true;
      ctor.is_synthesized = true;
      ctor.body = std::move(body);
      ctor.span = Span{cls.body_open, cls.body_open};
      ctor.header_span = ctor.span;
      cls.methods.insert(cls.methods.begin(), std::move(ctor));
      continue;
    }
    for (auto& m : cls.methods) {
      if (!m.is_constructor || !m.has_body) continue;
      if (!m.body.empty() && is_ctor_call(*m.body.front(), "this")) continue;
      auto inits = initializer_stmts(cls);
      if (inits.empty()) break;
      const std::size_t at = !m.body.empty() && is_ctor_call(*m.body.front(), "super") ? 1 : 0;
      m.body.insert(m.body.begin() + static_cast<std::ptrdiff_t>(at), std::make_move_iterator(inits.begin()),
                    std::make_move_iterator(inits.end()));
    }
  }
}

void lower_field_initializers(Program& program) {
  for (auto& unit : program.units) lower_field_initializers(unit);
}

}  // namespace permlens::frontend
