#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "permlens/ref_id.hpp"
#include "permlens/resolve/symbols.hpp"

namespace permlens::resolve {

enum class BindingMode {
  FirstCallSite,  // bindings from the first call site in program order
  AllCallSites,   // union over every call site
};

std::string_view to_string(BindingMode mode);

struct ParamBinding {
  std::string method;
  std::size_t param_index = 0;
  std::vector<RefId> all;      // discovery order, no duplicates
  std::vector<RefId> primary;  // from the first call site
};

class BindingTable {
 public:
  const std::vector<RefId>& lookup(const std::string& method, std::size_t index, BindingMode mode) const;
  const std::vector<ParamBinding>& bindings() const { return list_; }

 private:
  friend BindingTable bind_parameters(const Program&, const SymbolTable&);
  std::vector<ParamBinding> list_;
  std::map<std::pair<std::string, std::size_t>, std::size_t> index_;
};

// Binds each parameter to the global objects passed at its call sites.
// Arguments that are caller parameters are expanded through the caller's
// own bindings, iterated to a fixpoint.
BindingTable bind_parameters(const Program& program, const SymbolTable& symbols);

}  // namespace permlens::resolve
