#include "permlens/frontend/printer.hpp"

#include "permlens/util/overloaded.hpp"

namespace permlens::frontend {

namespace {

std::string pad(int indent) { return std::string(static_cast<std::size_t>(indent) * 2, ' '); }

std::string join_exprs(const std::vector<ExprPtr>& exprs) {
  std::string out;
  for (std::size_t i = 0; i < exprs.size(); ++i) {
    if (i) out += ", ";
    out += print_expr(*exprs[i]);
  }
  return out;
}

std::string mods_prefix(const std::vector<std::string>& mods) {
  std::string out;
  for (const auto& m : mods) out += m + " ";
  return out;
}

std::string print_local_decl(const LocalDeclStmt& d) {
  std::string out = d.type.to_string() + " ";
  for (std::size_t i = 0; i < d.vars.size(); ++i) {
    if (i) out += ", ";
    out += d.vars[i].name;
    for (int k = 0; k < d.vars[i].extra_dims; ++k) out += "[]";
    if (d.vars[i].init) out += " = " + print_expr(*d.vars[i].init);
  }
  return out;
}

std::string print_body(const std::vector<StmtPtr>& body, int indent) {
  std::string out = "{\n";
  for (const auto& s : body) out += print_stmt(*s, indent + 1);
  out += pad(indent) + "}";
  return out;
}

// Nested statements are printed inline after a header, e.g. "if (c) <stmt>".
std::string nested(const Stmt& s, int indent) {
  if (const auto* b = s.as<BlockStmt>()) return print_body(b->stmts, indent);
  std::string inner = print_stmt(s, indent + 1);
  while (!inner.empty() && inner.back() == '\n') inner.pop_back();
  return "\n" + inner;
}

void dump(std::string& out, const Expr& e);
void dump(std::string& out, const Stmt& s);

void dump_list(std::string& out, const std::vector<ExprPtr>& xs) {
  out += '[';
  for (const auto& x : xs) {
    dump(out, *x);
    out += ' ';
  }
  out += ']';
}

void dump_opt(std::string& out, const ExprPtr& e) {
  if (e) {
    dump(out, *e);
  } else {
    out += "_";
  }
}

void dump(std::string& out, const Expr& e) {
  std::visit(
      Overloaded{
          [&](const NameExpr& n) { out += "(name " + n.name + ")"; },
          [&](const ThisExpr&) { out += "(this)"; },
          [&](const SuperExpr&) { out += "(super)"; },
          [&](const FieldAccessExpr& n) {
            out += "(field ";
            dump(out, *n.receiver);
            out += " " + n.field + ")";
          },
          [&](const ArrayAccessExpr& n) {
            out += "(index ";
            dump(out, *n.array);
            out += ' ';
            dump(out, *n.index);
            out += ')';
          },
          [&](const AssignExpr& n) {
            out += "(assign " + n.op + " ";
            dump(out, *n.lhs);
            out += ' ';
            dump(out, *n.rhs);
            out += ')';
          },
          [&](const CallExpr& n) {
            out += "(call ";
            dump_opt(out, n.receiver);
            out += " " + n.name + " ";
            dump_list(out, n.args);
            out += ')';
          },
          [&](const NewExpr& n) {
            out += "(new " + n.type.to_string() + " ";
            dump_list(out, n.args);
            out += ')';
          },
          [&](const ArrayCreationExpr& n) {
            out += "(newarray " + n.element.to_string() + " ";
            dump_list(out, n.dims);
            out += " " + std::to_string(n.extra_dims) + " ";
            dump_opt(out, n.init);
            out += ')';
          },
          [&](const ArrayInitExpr& n) {
            out += "(arrayinit ";
            dump_list(out, n.elements);
            out += ')';
          },
          [&](const LiteralExpr& n) { out += "(lit " + n.text + ")"; },
          [&](const NullExpr&) { out += "(null)"; },
          [&](const InfixExpr& n) {
            out += "(infix " + n.op + " ";
            dump(out, *n.lhs);
            out += ' ';
            dump(out, *n.rhs);
            out += ')';
          },
          [&](const PrefixExpr& n) {
            out += "(prefix " + n.op + " ";
            dump(out, *n.operand);
            out += ')';
          },
          [&](const PostfixExpr& n) {
            out += "(postfix " + n.op + " ";
            dump(out, *n.operand);
            out += ')';
          },
          [&](const CastExpr& n) {
            out += "(cast " + n.type.to_string() + " ";
            dump(out, *n.operand);
            out += ')';
          },
          [&](const ConditionalExpr& n) {
            out += "(cond ";
            dump(out, *n.cond);
            out += ' ';
            dump(out, *n.then_expr);
            out += ' ';
            dump(out, *n.else_expr);
            out += ')';
          },
          [&](const ParenExpr& n) {
            out += "(paren ";
            dump(out, *n.inner);
            out += ')';
          },
      },
      e.node);
}

void dump_stmts(std::string& out, const std::vector<StmtPtr>& xs) {
  out += '[';
  for (const auto& x : xs) {
    dump(out, *x);
    out += ' ';
  }
  out += ']';
}

void dump(std::string& out, const Stmt& s) {
  std::visit(
      Overloaded{
          [&](const ExprStmt& n) {
            out += "(expr ";
            dump(out, *n.expr);
            out += ')';
          },
          [&](const LocalDeclStmt& n) {
            out += "(local " + n.type.to_string();
            for (const auto& v : n.vars) {
              out += " (" + v.name + " " + std::to_string(v.extra_dims) + " ";
              dump_opt(out, v.init);
              out += ')';
            }
            out += ')';
          },
          [&](const IfStmt& n) {
            out += "(if ";
            dump(out, *n.cond);
            out += ' ';
            dump(out, *n.then_stmt);
            out += ' ';
            if (n.else_stmt) {
              dump(out, *n.else_stmt);
            } else {
              out += '_';
            }
            out += ')';
          },
          [&](const WhileStmt& n) {
            out += n.do_while ? "(do " : "(while ";
            dump(out, *n.cond);
            out += ' ';
            dump(out, *n.body);
            out += ')';
          },
          [&](const ForStmt& n) {
            out += "(for ";
            dump_stmts(out, n.init);
            out += ' ';
            dump_opt(out, n.cond);
            out += ' ';
            dump_list(out, n.update);
            out += ' ';
            dump(out, *n.body);
            out += ')';
          },
          [&](const ForEachStmt& n) {
            out += "(foreach " + n.type.to_string() + " " + n.var + " ";
            dump(out, *n.iterable);
            out += ' ';
            dump(out, *n.body);
            out += ')';
          },
          [&](const SwitchStmt& n) {
            out += "(switch ";
            dump(out, *n.selector);
            for (const auto& c : n.cases) {
              out += c.is_default ? " (default " : " (case ";
              dump_list(out, c.labels);
              dump_stmts(out, c.body);
              out += ')';
            }
            out += ')';
          },
          [&](const ReturnStmt& n) {
            out += "(return ";
            dump_opt(out, n.value);
            out += ')';
          },
          [&](const BlockStmt& n) {
            out += "(block ";
            dump_stmts(out, n.stmts);
            out += ')';
          },
          [&](const BreakStmt&) { out += "(break)"; },
          [&](const ContinueStmt&) { out += "(continue)"; },
          [&](const EmptyStmt&) { out += "(empty)"; },
      },
      s.node);
}

}  // namespace

std::string print_expr(const Expr& expr) {
  return std::visit(
      Overloaded{
          [](const NameExpr& n) { return n.name; },
          [](const ThisExpr&) { return std::string("this"); },
          [](const SuperExpr&) { return std::string("super"); },
          [](const FieldAccessExpr& n) { return print_expr(*n.receiver) + "." + n.field; },
          [](const ArrayAccessExpr& n) {
            return print_expr(*n.array) + "[" + print_expr(*n.index) + "]";
          },
          [](const AssignExpr& n) {
            return print_expr(*n.lhs) + " " + n.op + " " + print_expr(*n.rhs);
          },
          [](const CallExpr& n) {
            std::string out = n.receiver ? print_expr(*n.receiver) + "." : std::string();
            return out + n.name + "(" + join_exprs(n.args) + ")";
          },
          [](const NewExpr& n) { return "new " + n.type.to_string() + "(" + join_exprs(n.args) + ")"; },
          [](const ArrayCreationExpr& n) {
            std::string out = "new " + n.element.to_string();
            for (const auto& d : n.dims) out += "[" + print_expr(*d) + "]";
            for (int i = 0; i < n.extra_dims; ++i) out += "[]";
            if (n.init) out += print_expr(*n.init);
            return out;
          },
          [](const ArrayInitExpr& n) { return "{" + join_exprs(n.elements) + "}"; },
          [](const LiteralExpr& n) { return n.text; },
          [](const NullExpr&) { return std::string("null"); },
          [](const InfixExpr& n) {
            return print_expr(*n.lhs) + " " + n.op + " " + print_expr(*n.rhs);
          },
          [](const PrefixExpr& n) {
            std::string operand = print_expr(*n.operand);
            const bool clash = !operand.empty() && (operand.front() == '+' || operand.front() == '-');
            return n.op + (clash ? " " : "") + operand;
          },
          [](const PostfixExpr& n) { return print_expr(*n.operand) + n.op; },
          [](const CastExpr& n) { return "(" + n.type.to_string() + ") " + print_expr(*n.operand); },
          [](const ConditionalExpr& n) {
            return print_expr(*n.cond) + " ? " + print_expr(*n.then_expr) + " : " +
                   print_expr(*n.else_expr);
          },
          [](const ParenExpr& n) { return "(" + print_expr(*n.inner) + ")"; },
      },
      expr.node);
}

std::string print_stmt(const Stmt& stmt, int indent) {
  const std::string p = pad(indent);
  return std::visit(
      Overloaded{
          [&](const ExprStmt& n) { return p + print_expr(*n.expr) + ";\n"; },
          [&](const LocalDeclStmt& n) { return p + print_local_decl(n) + ";\n"; },
          [&](const IfStmt& n) {
            std::string out = p + "if (" + print_expr(*n.cond) + ") " + nested(*n.then_stmt, indent);
            if (n.else_stmt) {
              out += n.then_stmt->as<BlockStmt>() ? " else " : "\n" + p + "else ";
              out += nested(*n.else_stmt, indent);
            }
            return out + "\n";
          },
          [&](const WhileStmt& n) {
            if (n.do_while) {
              return p + "do " + nested(*n.body, indent) + "\n" + p + "while (" + print_expr(*n.cond) +
                     ");\n";
            }
            return p + "while (" + print_expr(*n.cond) + ") " + nested(*n.body, indent) + "\n";
          },
          [&](const ForStmt& n) {
            std::string init;
            for (std::size_t i = 0; i < n.init.size(); ++i) {
              if (i) init += ", ";
              if (const auto* d = n.init[i]->as<LocalDeclStmt>()) {
                init += print_local_decl(*d);
              } else if (const auto* e = n.init[i]->as<ExprStmt>()) {
                init += print_expr(*e->expr);
              }
            }
            std::string out = p + "for (" + init + "; ";
            if (n.cond) out += print_expr(*n.cond);
            out += "; " + join_exprs(n.update) + ") ";
            return out + nested(*n.body, indent) + "\n";
          },
          [&](const ForEachStmt& n) {
            return p + "for (" + n.type.to_string() + " " + n.var + " : " + print_expr(*n.iterable) +
                   ") " + nested(*n.body, indent) + "\n";
          },
          [&](const SwitchStmt& n) {
            std::string out = p + "switch (" + print_expr(*n.selector) + ") {\n";
            for (const auto& c : n.cases) {
              if (c.is_default) {
                out += pad(indent + 1) + "default:\n";
              } else {
                out += pad(indent + 1) + "case " + join_exprs(c.labels) + ":\n";
              }
              for (const auto& s : c.body) out += print_stmt(*s, indent + 2);
            }
            return out + p + "}\n";
          },
          [&](const ReturnStmt& n) {
            return p + "return" + (n.value ? " " + print_expr(*n.value) : std::string()) + ";\n";
          },
          [&](const BlockStmt& n) { return p + print_body(n.stmts, indent) + "\n"; },
          [&](const BreakStmt&) { return p + "break;\n"; },
          [&](const ContinueStmt&) { return p + "continue;\n"; },
          [&](const EmptyStmt&) { return p + ";\n"; },
      },
      stmt.node);
}

std::string print_unit(const CompilationUnit& unit) {
  std::string out;
  for (const auto& cls : unit.classes) {
    out += mods_prefix(cls.modifiers) + "class " + cls.name;
    if (cls.superclass) out += " extends " + *cls.superclass;
    out += " {\n";
    for (const auto& f : cls.fields) {
      out += pad(1) + mods_prefix(f.modifiers) + f.type.to_string() + " " + f.name;
      if (f.init) out += " = " + print_expr(*f.init);
      out += ";\n";
    }
    for (const auto& m : cls.methods) {
      if (m.is_synthesized) continue;
      out += pad(1) + mods_prefix(m.modifiers);
      if (m.return_type) out += m.return_type->to_string() + " ";
      out += m.name + "(";
      for (std::size_t i = 0; i < m.params.size(); ++i) {
        if (i) out += ", ";
        out += m.params[i].type.to_string() + " " + m.params[i].name;
      }
      out += ")";
      out += m.has_body ? " " + print_body(m.body, 1) + "\n" : ";\n";
    }
    out += "}\n";
  }
  return out;
}

std::string dump_structure(const Expr& expr) {
  std::string out;
  dump(out, expr);
  return out;
}

std::string dump_structure(const CompilationUnit& unit) {
  std::string out;
  for (const auto& cls : unit.classes) {
    out += "(class " + cls.name + " " + cls.superclass.value_or("_");
    for (const auto& f : cls.fields) {
      out += " (fielddecl " + f.type.to_string() + " " + f.name + (f.is_static ? " static " : " ");
      dump_opt(out, f.init);
      out += ')';
    }
    for (const auto& m : cls.methods) {
      out += " (method " + m.name + " " + (m.return_type ? m.return_type->to_string() : "ctor");
      for (const auto& mod : m.modifiers) out += " " + mod;
      for (const auto& p : m.params) out += " (param " + p.type.to_string() + " " + p.name + ")";
      out += ' ';
      dump_stmts(out, m.body);
      out += ')';
    }
    out += ")\n";
  }
  return out;
}

}  // namespace permlens::frontend
