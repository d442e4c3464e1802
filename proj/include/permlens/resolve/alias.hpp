#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "permlens/ref_id.hpp"

namespace permlens::resolve {

enum class RefKind {
  Grv,  // global reference variable (field or promoted entry-point local)
  Lrv,  // local that currently aliases a global
  Lv,   // plain local
};

std::string_view to_string(RefKind kind);

// Flow-sensitive alias edges, source -> target. Straight-line updates keep
// at most one target per source; merging two control-flow paths can leave
// several.
class AliasState {
 public:
  void retarget(const RefId& src, std::set<RefId> targets);
  void clear(const RefId& src);
  void clear_all(const std::set<RefId>& refs);
  const std::set<RefId>& targets(const RefId& src) const;

  // The ref itself when it is a global, otherwise the first globals reached
  // by following alias edges.
  std::set<RefId> grv_targets(const RefId& ref) const;
  // Undirected alias-connected component, including ref.
  std::set<RefId> component(const RefId& ref) const;
  bool reaches(const RefId& from, const RefId& to) const;
  bool acyclic() const;
  bool functional() const;

  void merge(const AliasState& other);
  std::vector<std::pair<RefId, RefId>> edges() const;

  bool operator==(const AliasState&) const = default;

 private:
  std::map<RefId, std::set<RefId>> edges_;
};

RefKind classify(const RefId& ref, const AliasState& state);

}  // namespace permlens::resolve
