#include "permlens/algebra/algebra.hpp"

#include <algorithm>
#include <deque>

namespace permlens::algebra {

namespace {

using P = Permission;

// Rows of the coexistence table: which permissions other references may hold.
bool row_allows(P p, P other) {
  switch (p) {
    case P::Unique: return false;
    case P::Full: return other == P::Pure;
    case P::Share: return other == P::Share || other == P::Pure;
    case P::Pure: return other == P::Full || other == P::Pure || other == P::Immutable;
    case P::Immutable: return other == P::Immutable || other == P::Pure;
    case P::None: return true;
  }
  return false;
}

}  // namespace

const std::vector<SplitRule>& split_rules() {
  static const std::vector<SplitRule> rules = {
      {1, P::Unique, P::Full, P::Pure},
      {2, P::Unique, P::Immutable, P::Immutable},
      {3, P::Full, P::Share, P::Pure},
      {4, P::Share, P::Full, P::Pure},
      {5, P::Immutable, P::Pure, P::Immutable},
      {6, P::Unique, P::Share, P::Share},
      {7, P::Immutable, P::Immutable, P::Immutable},
      {8, P::Share, P::Share, P::Pure},
      {9, P::Share, P::Share, P::Share},
      {10, P::Full, P::Full, P::Pure},
  };
  return rules;
}

bool coexists(Permission p, Permission q) {
  if (p == P::None || q == P::None) return true;
  return row_allows(p, q) || row_allows(q, p);
}

std::vector<std::pair<FracPermission, FracPermission>> split(const FracPermission& p) {
  if (p.kind == P::Pure || p.kind == P::None) throw NotSplittable("permission cannot be split");
  if (p.k <= 0 || p.k > 1) throw std::invalid_argument("fraction out of range");
  const Fraction half = p.k / 2;
  std::vector<std::pair<FracPermission, FracPermission>> out;
  for (const auto& r : split_rules()) {
    if (r.whole != p.kind) continue;
    out.emplace_back(FracPermission{r.left, half}, FracPermission{r.right, half});
  }
  return out;
}

std::set<Permission> join_all(Permission a, Permission b) {
  std::set<Permission> out;
  for (const auto& r : split_rules()) {
    if ((r.left == a && r.right == b) || (r.left == b && r.right == a)) out.insert(r.whole);
  }
  return out;
}

std::optional<FracPermission> join(const FracPermission& a, const FracPermission& b) {
  const auto kinds = join_all(a.kind, b.kind);
  if (kinds.empty()) return std::nullopt;
  return FracPermission{*kinds.rbegin(), std::min(a.k + b.k, Fraction{1})};
}

bool supplies(Permission post, Permission required) {
  if (post == required) return true;
  std::set<P> seen{post};
  std::deque<P> work{post};
  while (!work.empty()) {
    const P cur = work.front();
    work.pop_front();
    for (const auto& r : split_rules()) {
      if (r.whole != cur) continue;
      for (P next : {r.left, r.right}) {
        if (next == required) return true;
        if (seen.insert(next).second) work.push_back(next);
      }
    }
  }
  return false;
}

Permission max_restrictive(Permission p, Permission q) { return std::max(p, q); }

bool bag_consistent(const std::vector<FracPermission>& bag) {
  for (std::size_t i = 0; i < bag.size(); ++i) {
    for (std::size_t j = i + 1; j < bag.size(); ++j) {
      if (!coexists(bag[i].kind, bag[j].kind)) return false;
    }
  }
  return true;
}

}  // namespace permlens::algebra
