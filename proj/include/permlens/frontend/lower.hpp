#pragma once

#include "permlens/frontend/ast.hpp"

namespace permlens::frontend {

// Moves instance field initializers into constructors. Explicit
// constructors get them prepended (after any super(...) call, and not at all
// when they delegate through this(...)). A class with initializers and no
// explicit constructor gets a synthesized no-argument one.
void lower_field_initializers(CompilationUnit& unit);
void lower_field_initializers(Program& program);

}  // namespace permlens::frontend
