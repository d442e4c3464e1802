#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "permlens/contract.hpp"

namespace permlens::emit {

struct Term {
  std::string name;
  std::size_t value = 0;
};

struct Metrics {
  std::size_t classes = 0;        // C
  std::size_t contracts = 0;      // N, non-empty contracts
  std::size_t m_c = 0;            // constructors with a contract
  std::size_t m_nc_f = 0;         // other methods touching a global
  std::size_t m_nc_r = 0;         // other methods returning a global
  std::size_t bound_params = 0;   // sum of P(m)
  std::size_t field_entries = 0;  // sum of F(m)
  std::size_t loc_p = 0;
  std::size_t anns_p = 0;
  std::size_t anns_f = 0;
  std::size_t safe_approx = 0;
  double time_ms = 0.0;
  std::vector<Term> anns_p_terms;
  std::vector<Term> anns_f_terms;
};

// Parameters of a contract that are bound to some global it mentions.
std::size_t bound_parameter_count(const MethodContract& c);

Metrics compute_metrics(const std::vector<MethodContract>& contracts, std::size_t classes,
                        std::size_t safe_approx, double time_ms = 0.0);

}  // namespace permlens::emit
