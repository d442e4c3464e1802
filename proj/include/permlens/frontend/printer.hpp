#pragma once

#include <string>

#include "permlens/frontend/ast.hpp"

namespace permlens::frontend {

// Canonical source text; reparsing it yields a structurally equal tree.
std::string print_unit(const CompilationUnit& unit);
std::string print_expr(const Expr& expr);
std::string print_stmt(const Stmt& stmt, int indent = 0);

// Span-free s-expression of the tree, used for structural comparison.
std::string dump_structure(const CompilationUnit& unit);
std::string dump_structure(const Expr& expr);

}  // namespace permlens::frontend
