#pragma once

#include <variant>

#include "permlens/frontend/ast.hpp"
#include "permlens/util/overloaded.hpp"

namespace testsupport {

using namespace permlens::frontend;

// Pre-order over every expression, nested ones included.
template <class F>
void walk_expr(const Expr& e, F& f) {
  f(e);
  auto sub = [&](const ExprPtr& c) {
    if (c) walk_expr(*c, f);
  };
  std::visit(permlens::Overloaded{
                 [&](const FieldAccessExpr& x) { sub(x.receiver); },
                 [&](const ArrayAccessExpr& x) { sub(x.array), sub(x.index); },
                 [&](const AssignExpr& x) { sub(x.lhs), sub(x.rhs); },
                 [&](const CallExpr& x) {
                   sub(x.receiver);
                   for (auto& a : x.args) sub(a);
                 },
                 [&](const NewExpr& x) {
                   for (auto& a : x.args) sub(a);
                 },
                 [&](const ArrayCreationExpr& x) {
                   for (auto& d : x.dims) sub(d);
                   sub(x.init);
                 },
                 [&](const ArrayInitExpr& x) {
                   for (auto& a : x.elements) sub(a);
                 },
                 [&](const InfixExpr& x) { sub(x.lhs), sub(x.rhs); },
                 [&](const PrefixExpr& x) { sub(x.operand); },
                 [&](const PostfixExpr& x) { sub(x.operand); },
                 [&](const CastExpr& x) { sub(x.operand); },
                 [&](const ConditionalExpr& x) { sub(x.cond), sub(x.then_expr), sub(x.else_expr); },
                 [&](const ParenExpr& x) { sub(x.inner); },
                 [](const auto&) {},
             },
             e.node);
}

template <class F>
void walk_stmt(const Stmt& s, F& f) {
  auto ex = [&](const ExprPtr& c) {
    if (c) walk_expr(*c, f);
  };
  auto st = [&](const StmtPtr& c) {
    if (c) walk_stmt(*c, f);
  };
  std::visit(permlens::Overloaded{
                 [&](const ExprStmt& x) { ex(x.expr); },
                 [&](const LocalDeclStmt& x) {
                   for (auto& d : x.vars) ex(d.init);
                 },
                 [&](const IfStmt& x) { ex(x.cond), st(x.then_stmt), st(x.else_stmt); },
                 [&](const WhileStmt& x) { ex(x.cond), st(x.body); },
                 [&](const ForStmt& x) {
                   for (auto& i : x.init) st(i);
                   ex(x.cond);
                   for (auto& u : x.update) ex(u);
                   st(x.body);
                 },
                 [&](const ForEachStmt& x) { ex(x.iterable), st(x.body); },
                 [&](const SwitchStmt& x) {
                   ex(x.selector);
                   for (auto& c : x.cases) {
                     for (auto& l : c.labels) ex(l);
                     for (auto& b : c.body) st(b);
                   }
                 },
                 [&](const ReturnStmt& x) { ex(x.value); },
                 [&](const BlockStmt& x) {
                   for (auto& b : x.stmts) st(b);
                 },
                 [](const auto&) {},
             },
             s.node);
}

template <class F>
void walk_method(const MethodDecl& m, F&& f) {
  for (const auto& s : m.body) walk_stmt(*s, f);
}

template <class F>
void walk_program(const Program& p, F&& f) {
  for (const auto& u : p.units)
    for (const auto& c : u.classes)
      for (const auto& m : c.methods) walk_method(m, f);
}

}  // namespace testsupport
