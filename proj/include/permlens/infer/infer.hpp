#pragma once

#include <stdexcept>
#include <string_view>
#include <vector>

#include "permlens/contract.hpp"
#include "permlens/extract/access_graph.hpp"
#include "permlens/permission.hpp"

namespace permlens::infer {

// Edge pattern around one variable after normalization.
struct EdgePattern {
  bool this_read = false;
  bool this_write = false;
  bool context_read = false;
  bool context_write = false;
};

enum class InferenceRule {
  UniqueRule,     // ThisM rw, no context
  FullRule,       // ThisM rw, context r
  ShareRule,      // ThisM rw, context rw
  ImmutableRule,  // ThisM r, context r
  PureRule,       // ThisM r, context rw
  NoneReadRule,   // ThisM r, no context
  NoneRule,       // no ThisM edge
};

std::string_view to_string(InferenceRule rule);

class InferenceGap : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Every rule whose premise matches; exactly one for any normalized pattern.
std::vector<InferenceRule> matching_rules(const EdgePattern& pattern);
Permission permission_of(InferenceRule rule);
// Normalizes (a write implies a read on the same side) and infers.
Permission infer_from_pattern(const EdgePattern& pattern);
EdgePattern pattern_of(const extract::AccessGraph& graph, const RefId& var);
Permission infer_permission(const extract::AccessGraph& graph, const RefId& var);

struct MethodFacts {
  std::string method;
  std::string class_name;
  std::string name;
  bool is_constructor = false;
  bool is_main = false;
};

MethodContract infer_contract(const MethodFacts& facts, const extract::AccessGraph& graph);

}  // namespace permlens::infer
