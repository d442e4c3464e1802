#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "permlens/contract.hpp"
#include "permlens/permission.hpp"

namespace permlens::analyze {

enum class Status { Satisfiable, Unsatisfiable };
std::string_view to_string(Status s);

struct Requirement {
  RefId object;
  Permission required = Permission::None;
};

struct SatisfiabilityVerdict {
  std::string method;
  Status status = Status::Satisfiable;
  std::vector<Requirement> unmet;
};

struct SatisfiabilityResult {
  std::vector<SatisfiabilityVerdict> verdicts;  // input order, overloads removed
  std::vector<std::string> excluded;            // overloaded method ids

  std::size_t satisfiable() const;
  std::size_t unsatisfiable() const;
  const SatisfiabilityVerdict* find(const std::string& method) const;
};

// A requirement is met when another method that is itself satisfiable
// leaves a permission on the object that splits into the required one.
// Solved as a least fixpoint from the methods that need nothing.
SatisfiabilityResult check_satisfiability(const std::vector<MethodContract>& contracts,
                                          const std::set<std::string>& overloaded = {});

enum class NullCode { NP1, NP2 };
std::string_view to_string(NullCode c);

struct NullWarning {
  NullCode code = NullCode::NP1;
  std::string method;  // the consumer
  RefId object;
  std::string message;
};

// Objects for which `nullable` is false (primitive fields) are skipped.
std::vector<NullWarning> null_diagnostics(const std::vector<MethodContract>& contracts,
                                          const SatisfiabilityResult& sat,
                                          const std::function<bool(const RefId&)>& nullable = {});

bool pair_parallel(const MethodContract& a, const MethodContract& b);
bool self_parallel(const MethodContract& m);

struct Ratio {
  std::size_t num = 0;
  std::size_t den = 0;
  int percent() const;  // rounded half up; 0 for an empty denominator
};

struct ConcurrencyMatrix {
  std::string class_name;
  std::vector<std::string> methods;  // method ids
  std::vector<std::string> names;
  std::vector<std::vector<bool>> cells;
  Ratio concur_m;
  Ratio concur_mp;

  bool symmetric() const;
};

// Contracts of one class; empty contracts are skipped.
ConcurrencyMatrix class_matrix(const std::string& class_name,
                               const std::vector<const MethodContract*>& contracts);

}  // namespace permlens::analyze
