#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace permlens {

// Declaration order is the restrictiveness order used to pick the strongest
// of several candidate permissions.
enum class Permission : std::uint8_t { None, Pure, Immutable, Share, Full, Unique };

inline constexpr std::array<Permission, 6> kAllPermissions = {
    Permission::None,  Permission::Pure, Permission::Immutable,
    Permission::Share, Permission::Full, Permission::Unique};

std::string_view to_string(Permission p);
std::optional<Permission> parse_permission(std::string_view text);

inline bool is_read_only(Permission p) { return p == Permission::Pure || p == Permission::Immutable; }

}  // namespace permlens
