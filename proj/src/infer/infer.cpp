#include "permlens/infer/infer.hpp"

namespace permlens::infer {

using extract::AccessGraph;
using extract::LifeEvent;

std::string_view to_string(InferenceRule rule) {
  switch (rule) {
    case InferenceRule::UniqueRule: return "unique";
    case InferenceRule::FullRule: return "full";
    case InferenceRule::ShareRule: return "share";
    case InferenceRule::ImmutableRule: return "immutable";
    case InferenceRule::PureRule: return "pure";
    case InferenceRule::NoneReadRule: return "none-read";
    case InferenceRule::NoneRule: return "none";
  }
  return "?";
}

namespace {

EdgePattern normalize(EdgePattern p) {
  p.this_read = p.this_read || p.this_write;
  p.context_read = p.context_read || p.context_write;
  return p;
}

}  // namespace

std::vector<InferenceRule> matching_rules(const EdgePattern& raw) {
  const EdgePattern p = normalize(raw);
  std::vector<InferenceRule> out;
  const bool ctx_none = !p.context_read;
  const bool ctx_r = p.context_read && !p.context_write;
  const bool ctx_rw = p.context_read && p.context_write;
  if (p.this_write) {
    if (ctx_none) out.push_back(InferenceRule::UniqueRule);
    if (ctx_r) out.push_back(InferenceRule::FullRule);
    if (ctx_rw) out.push_back(InferenceRule::ShareRule);
  } else if (p.this_read) {
    if (ctx_r) out.push_back(InferenceRule::ImmutableRule);
    if (ctx_rw) out.push_back(InferenceRule::PureRule);
    if (ctx_none) out.push_back(InferenceRule::NoneReadRule);
  } else {
    out.push_back(InferenceRule::NoneRule);
  }
  return out;
}

Permission permission_of(InferenceRule rule) {
  switch (rule) {
    case InferenceRule::UniqueRule: return Permission::Unique;
    case InferenceRule::FullRule: return Permission::Full;
    case InferenceRule::ShareRule: return Permission::Share;
    case InferenceRule::ImmutableRule: return Permission::Immutable;
    case InferenceRule::PureRule: return Permission::Pure;
    case InferenceRule::NoneReadRule:
    case InferenceRule::NoneRule: return Permission::None;
  }
  return Permission::None;
}

Permission infer_from_pattern(const EdgePattern& pattern) {
  const auto rules = matching_rules(pattern);
  if (rules.size() != 1) throw InferenceGap("no unique inference rule for edge pattern");
  return permission_of(rules.front());
}

EdgePattern pattern_of(const AccessGraph& graph, const RefId& var) {
  return EdgePattern{graph.this_reads(var), graph.this_writes(var), graph.context_reads(var),
                     graph.context_writes(var)};
}

Permission infer_permission(const AccessGraph& graph, const RefId& var) {
  return infer_from_pattern(pattern_of(graph, var));
}

MethodContract infer_contract(const MethodFacts& facts, const AccessGraph& graph) {
  MethodContract c;
  c.method = facts.method;
  c.class_name = facts.class_name;
  c.name = facts.name;
  c.is_constructor = facts.is_constructor;
  c.is_main = facts.is_main;
  for (const auto& v : graph.accessed_globals()) {
    ContractEntry e;
    e.object = v;
    const Permission inferred = infer_permission(graph, v);
    const auto ev = graph.last_event.find(v);
    const bool instantiated = ev != graph.last_event.end() && ev->second == LifeEvent::Instantiated;
    e.pre = (facts.is_main || facts.is_constructor || instantiated) ? Permission::None : inferred;
    if (ev == graph.last_event.end()) {
      e.post = inferred;
    } else {
      e.post = instantiated ? Permission::Unique : Permission::None;
    }
    if (auto o = graph.origins.find(v); o != graph.origins.end()) {
      e.via_this = o->second.via_this;
      e.via_params = o->second.via_params;
    }
    c.entries.push_back(std::move(e));
  }
  if (!graph.returned.empty()) {
    const RefId& r = *graph.returned.begin();
    Permission post = Permission::None;
    if (const auto* e = c.find(r)) post = e->post;
    c.returns = ReturnClause{r, post};
  }
  return c;
}

}  // namespace permlens::infer
