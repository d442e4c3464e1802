#include "permlens/permission.hpp"

namespace permlens {

std::string_view to_string(Permission p) {
  switch (p) {
    case Permission::None: return "none";
    case Permission::Pure: return "pure";
    case Permission::Immutable: return "immutable";
    case Permission::Share: return "share";
    case Permission::Full: return "full";
    case Permission::Unique: return "unique";
  }
  return "none";
}

std::optional<Permission> parse_permission(std::string_view text) {
  for (Permission p : kAllPermissions) {
    if (to_string(p) == text) return p;
  }
  return std::nullopt;
}

}  // namespace permlens
