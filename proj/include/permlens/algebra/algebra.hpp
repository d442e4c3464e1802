#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "permlens/permission.hpp"

namespace permlens::algebra {

using Fraction = boost::rational<std::int64_t>;

struct FracPermission {
  Permission kind = Permission::Unique;
  Fraction k{1};

  bool operator==(const FracPermission&) const = default;
};

class NotSplittable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// One splitting rule: whole <=> left (x) right.
struct SplitRule {
  int number;
  Permission whole;
  Permission left;
  Permission right;
};

const std::vector<SplitRule>& split_rules();

bool coexists(Permission p, Permission q);

// Kind-level successors with halved fractions.
std::vector<std::pair<FracPermission, FracPermission>> split(const FracPermission& p);

// Every kind the pair joins back into; empty when unjoinable.
std::set<Permission> join_all(Permission a, Permission b);
std::optional<FracPermission> join(const FracPermission& a, const FracPermission& b);

bool supplies(Permission post, Permission required);
Permission max_restrictive(Permission p, Permission q);

// Pairwise coexistence over every distinct pair in the bag.
bool bag_consistent(const std::vector<FracPermission>& bag);

}  // namespace permlens::algebra
