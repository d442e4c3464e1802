#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "permlens/contract.hpp"
#include "permlens/diagnostics.hpp"
#include "permlens/frontend/ast.hpp"

namespace permlens::emit {

// Method id -> contract.
using ContractIndex = std::map<std::string, const MethodContract*>;

inline constexpr std::string_view kStateSuffix = " in alive";
inline constexpr std::string_view kClauseSeparator = " * ";
inline constexpr std::string_view kEndOfClass = "ENDOFCLASS";
inline constexpr std::string_view kImplicitMarker = "/* implicit */";

std::string clause(Permission p, std::string_view name);

struct FieldClauses {
  std::vector<std::string> pre;
  std::vector<std::string> post;
};
FieldClauses field_clauses(const MethodContract& c);

// The original source with a field-level @Perm before every contracted
// method and ENDOFCLASS after every class.
std::string emit_field_level(const frontend::CompilationUnit& unit, const ContractIndex& contracts);

// Removes what emit_field_level inserted.
std::string strip_annotations(std::string_view annotated);

struct ObjectLevel {
  std::string text;
  std::vector<Diagnostic> diagnostics;  // dropped overloads
};

struct ObjectClauses {
  std::vector<std::string> clauses;  // requires and ensures are identical
};
ObjectClauses object_clauses(const MethodContract& c, bool is_static);

ObjectLevel emit_object_level(const frontend::CompilationUnit& unit, const ContractIndex& contracts);

}  // namespace permlens::emit
