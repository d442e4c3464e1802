#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permlens/permission.hpp"
#include "permlens/ref_id.hpp"

namespace permlens {

struct ContractEntry {
  RefId object;
  Permission pre = Permission::None;
  Permission post = Permission::None;
  bool via_this = false;                // a field of the receiver
  std::vector<std::size_t> via_params;  // parameters bound to this object
};

struct ReturnClause {
  RefId object;
  Permission post = Permission::None;
};

struct MethodContract {
  std::string method;  // method id, "Class.name/arity"
  std::string class_name;
  std::string name;
  bool is_constructor = false;
  bool is_main = false;
  std::vector<ContractEntry> entries;  // emission order
  std::optional<ReturnClause> returns;

  bool empty() const { return entries.empty() && !returns; }
  const ContractEntry* find(const RefId& object) const {
    for (const auto& e : entries) {
      if (e.object == object) return &e;
    }
    return nullptr;
  }
};

}  // namespace permlens
