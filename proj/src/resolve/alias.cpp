#include "permlens/resolve/alias.hpp"

#include <deque>

namespace permlens::resolve {

std::string_view to_string(RefKind kind) {
  switch (kind) {
    case RefKind::Grv: return "Grv";
    case RefKind::Lrv: return "Lrv";
    case RefKind::Lv: return "Lv";
  }
  return "?";
}

void AliasState::retarget(const RefId& src, std::set<RefId> targets) {
  targets.erase(src);
  if (targets.empty()) {
    edges_.erase(src);
  } else {
    edges_[src] = std::move(targets);
  }
}

void AliasState::clear(const RefId& src) { edges_.erase(src); }

void AliasState::clear_all(const std::set<RefId>& refs) {
  for (const auto& r : refs) edges_.erase(r);
}

const std::set<RefId>& AliasState::targets(const RefId& src) const {
  static const std::set<RefId> kEmpty;
  auto it = edges_.find(src);
  return it == edges_.end() ? kEmpty : it->second;
}

std::set<RefId> AliasState::grv_targets(const RefId& ref) const {
  if (ref.is_grv()) return {ref};
  std::set<RefId> out;
  std::set<RefId> seen{ref};
  std::deque<RefId> work{ref};
  while (!work.empty()) {
    RefId cur = work.front();
    work.pop_front();
    for (const auto& t : targets(cur)) {
      if (!seen.insert(t).second) continue;
      if (t.is_grv()) {
        out.insert(t);
      } else {
        work.push_back(t);
      }
    }
  }
  return out;
}

std::set<RefId> AliasState::component(const RefId& ref) const {
  std::set<RefId> seen{ref};
  std::deque<RefId> work{ref};
  while (!work.empty()) {
    RefId cur = work.front();
    work.pop_front();
    for (const auto& [src, dsts] : edges_) {
      if (src == cur) {
        for (const auto& d : dsts) {
          if (seen.insert(d).second) work.push_back(d);
        }
      } else if (dsts.count(cur) && seen.insert(src).second) {
        work.push_back(src);
      }
    }
  }
  return seen;
}

bool AliasState::reaches(const RefId& from, const RefId& to) const {
  std::set<RefId> seen{from};
  std::deque<RefId> work{from};
  while (!work.empty()) {
    RefId cur = work.front();
    work.pop_front();
    if (cur == to) return true;
    for (const auto& t : targets(cur)) {
      if (seen.insert(t).second) work.push_back(t);
    }
  }
  return false;
}

bool AliasState::acyclic() const {
  for (const auto& [src, dsts] : edges_) {
    for (const auto& d : dsts) {
      if (d == src || reaches(d, src)) return false;
    }
  }
  return true;
}

bool AliasState::functional() const {
  for (const auto& [src, dsts] : edges_) {
    if (dsts.size() > 1) return false;
  }
  return true;
}

void AliasState::merge(const AliasState& other) {
  for (const auto& [src, dsts] : other.edges_) {
    auto& mine = edges_[src];
    for (const auto& d : dsts) {
      // never merge in an edge that would close a cycle
      if (d != src && !reaches(d, src)) mine.insert(d);
    }
    if (mine.empty()) edges_.erase(src);
  }
}

std::vector<std::pair<RefId, RefId>> AliasState::edges() const {
  std::vector<std::pair<RefId, RefId>> out;
  for (const auto& [src, dsts] : edges_) {
    for (const auto& d : dsts) out.emplace_back(src, d);
  }
  return out;
}

RefKind classify(const RefId& ref, const AliasState& state) {
  if (ref.is_grv()) return RefKind::Grv;
  return state.grv_targets(ref).empty() ? RefKind::Lv : RefKind::Lrv;
}

}  // namespace permlens::resolve
