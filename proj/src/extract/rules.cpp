#include "permlens/extract/rules.hpp"

#include <algorithm>

namespace permlens::extract {

void WorldSummary::declare(const std::string& method, bool is_constructor) {
  if (is_constructor) constructors_.insert(method);
  accesses_[method];
}

void WorldSummary::record(const std::string& method, bool is_constructor, const RefId& ref, AccessBits bits) {
  if (is_constructor) constructors_.insert(method);
  accesses_[method][ref] |= bits;
}

void WorldSummary::add_callee(const std::string& method, const std::string& callee) {
  auto& list = callees_[method];
  for (const auto& c : list) {
    if (c == callee) return;
  }
  list.push_back(callee);
}

AccessBits WorldSummary::others(const std::string& method, const RefId& ref) const {
  AccessBits out;
  for (const auto& [m, refs] : accesses_) {
    if (m == method || constructors_.count(m)) continue;
    if (auto it = refs.find(ref); it != refs.end()) out |= it->second;
  }
  return out;
}

AccessBits WorldSummary::of(const std::string& method, const RefId& ref) const {
  auto it = accesses_.find(method);
  if (it == accesses_.end()) return {};
  auto r = it->second.find(ref);
  return r == it->second.end() ? AccessBits{} : r->second;
}

const std::vector<std::string>& WorldSummary::callees(const std::string& method) const {
  static const std::vector<std::string> kNone;
  auto it = callees_.find(method);
  return it == callees_.end() ? kNone : it->second;
}

GraphBuilder::GraphBuilder(std::string method, bool is_main, bool is_constructor)
    : graph_(std::move(method)) {
  graph_.is_main = is_main;
  graph_.is_constructor = is_constructor;
}

void GraphBuilder::this_edge(const RefId& v, EdgeLabel label) {
  first_seen_.emplace(v, first_seen_.size());
  graph_.add_edge(Node::this_m(), Node::var(v), label);
}

void GraphBuilder::read(const RefId& ref) {
  for (const auto& g : aliases_.grv_targets(ref)) this_edge(g, EdgeLabel::Read);
}

void GraphBuilder::value_flow(const RefId& target) {
  for (const auto& r : aliases_.component(target)) {
    if (r.is_grv()) this_edge(r, EdgeLabel::Write);
  }
}

void GraphBuilder::object_creation(const RefId& target) {
  aliases_.clear(target);
  if (!target.is_grv()) return;
  this_edge(target, EdgeLabel::Write);
  apply_context(target, ContextKind::None);
  graph_.last_event[target] = LifeEvent::Instantiated;
}

void GraphBuilder::address_flow(const RefId& target, const std::optional<RefId>& source) {
  if (!source) {
    aliases_.clear(target);
    return;
  }
  std::set<RefId> next;
  if (source->is_grv() || aliases_.targets(*source).empty()) {
    next.insert(*source);
  } else {
    next = aliases_.targets(*source);
  }
  for (const auto& t : next) {
    if (t == target || aliases_.reaches(t, target)) return;  // assigning a reference to itself
  }
  read(*source);
  if (!target.is_grv() && resolve::classify(*source, aliases_) == resolve::RefKind::Lv) {
    aliases_.clear(target);  // local to local: nothing to track
    return;
  }
  aliases_.retarget(target, std::move(next));
}

void GraphBuilder::address_flow_to(const RefId& target, const std::set<RefId>& sources) {
  if (sources.empty()) {
    aliases_.clear(target);
    return;
  }
  for (const auto& s : sources) {
    if (s == target || aliases_.reaches(s, target)) return;
  }
  aliases_.retarget(target, sources);
}

void GraphBuilder::null_address_flow(const RefId& target) {
  const auto comp = aliases_.component(target);
  for (const auto& r : comp) {
    if (!r.is_grv()) continue;
    this_edge(r, EdgeLabel::Write);
    apply_context(r, ContextKind::None);
    graph_.last_event[r] = LifeEvent::Nulled;
  }
  aliases_.clear_all(comp);
}

void GraphBuilder::apply_context(const RefId& var, ContextKind kind) {
  graph_.add_var(var);
  switch (kind) {
    case ContextKind::Read:
      graph_.add_edge(Node::context(), Node::var(var), EdgeLabel::Read);
      break;
    case ContextKind::ReadWrite:
      graph_.add_edge(Node::context(), Node::var(var), EdgeLabel::Read);
      graph_.add_edge(Node::context(), Node::var(var), EdgeLabel::Write);
      break;
    case ContextKind::None:
      graph_.forced_none.insert(var);
      graph_.remove_edge(Node::context(), Node::var(var), EdgeLabel::Read);
      graph_.remove_edge(Node::context(), Node::var(var), EdgeLabel::Write);
      break;
  }
}

void GraphBuilder::apply_mcall(const RefId& var, Permission callee_post) {
  switch (callee_post) {
    case Permission::Immutable:
      this_edge(var, EdgeLabel::Read);
      apply_context(var, ContextKind::Read);
      break;
    case Permission::Pure:
      this_edge(var, EdgeLabel::Read);
      apply_context(var, ContextKind::ReadWrite);
      break;
    case Permission::Full:
      this_edge(var, EdgeLabel::Read);
      this_edge(var, EdgeLabel::Write);
      apply_context(var, ContextKind::Read);
      break;
    case Permission::Share:
      this_edge(var, EdgeLabel::Read);
      this_edge(var, EdgeLabel::Write);
      apply_context(var, ContextKind::ReadWrite);
      break;
    case Permission::Unique:
      this_edge(var, EdgeLabel::Read);
      this_edge(var, EdgeLabel::Write);
      apply_context(var, ContextKind::None);
      break;
    case Permission::None:
      break;
  }
}

bool GraphBuilder::safe_approximate(const std::vector<RefId>& refs) {
  bool any = false;
  for (const auto& r : refs) {
    if (!r.is_grv()) continue;
    this_edge(r, EdgeLabel::Read);
    this_edge(r, EdgeLabel::Write);
    any = true;
  }
  return any;
}

std::map<RefId, AccessBits> GraphBuilder::own_accesses() const {
  std::map<RefId, AccessBits> out;
  for (const auto& v : graph_.vars()) {
    if (!v.is_grv()) continue;
    AccessBits bits{graph_.this_reads(v), graph_.this_writes(v)};
    if (bits.read || bits.write) out[v] = bits;
  }
  return out;
}

AccessGraph GraphBuilder::finish(const WorldSummary* world) {
  AccessGraph g = graph_;
  for (const auto& v : graph_.vars()) {
    if (!v.is_grv() || !(g.this_reads(v) || g.this_writes(v))) continue;
    if (world) {
      const AccessBits others = world->others(g.method(), v);
      if (others.read) g.add_edge(Node::context(), Node::var(v), EdgeLabel::Read);
      if (others.write) g.add_edge(Node::context(), Node::var(v), EdgeLabel::Write);
    }
    if (g.is_main || g.forced_none.count(v)) {
      g.remove_edge(Node::context(), Node::var(v), EdgeLabel::Read);
      g.remove_edge(Node::context(), Node::var(v), EdgeLabel::Write);
    }
    if (g.this_writes(v)) g.add_edge(Node::this_m(), Node::var(v), EdgeLabel::Read);
  }
  for (const auto& [src, dst] : aliases_.edges()) g.add_edge(Node::var(src), Node::var(dst), EdgeLabel::Alias);
  if (g.order.empty()) {
    std::vector<std::pair<std::size_t, RefId>> seen;
    for (const auto& [ref, idx] : first_seen_) seen.emplace_back(idx, ref);
    std::sort(seen.begin(), seen.end());
    for (const auto& [idx, ref] : seen) g.order.push_back(ref);
  }
  return g;
}

}  // namespace permlens::extract
