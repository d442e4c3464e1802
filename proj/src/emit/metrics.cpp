#include "permlens/emit/metrics.hpp"

#include <set>

namespace permlens::emit {

std::size_t bound_parameter_count(const MethodContract& c) {
  std::set<std::size_t> params;
  for (const auto& e : c.entries) params.insert(e.via_params.begin(), e.via_params.end());
  return params.size();
}

Metrics compute_metrics(const std::vector<MethodContract>& contracts, std::size_t classes,
                        std::size_t safe_approx, double time_ms) {
  Metrics m;
  m.classes = classes;
  m.safe_approx = safe_approx;
  m.time_ms = time_ms;
  for (const auto& c : contracts) {
    if (c.empty()) continue;
    ++m.contracts;
    m.field_entries += c.entries.size();
    if (c.is_constructor) {
      ++m.m_c;
      continue;
    }
    if (!c.entries.empty()) ++m.m_nc_f;
    if (c.returns) ++m.m_nc_r;
    m.bound_params += bound_parameter_count(c);
  }
  m.loc_p = m.contracts + m.classes + 1;
  m.anns_p_terms = {{"2*M_C", 2 * m.m_c},
                    {"4*M_NC^F", 4 * m.m_nc_f},
                    {"sum 2*P(m)", 2 * m.bound_params},
                    {"2*M_NC^R", 2 * m.m_nc_r},
                    {"C", m.classes}};
  m.anns_f_terms = {{"sum 2*F(m)", 2 * m.field_entries}, {"2*M_NC^R", 2 * m.m_nc_r}};
  for (const auto& t : m.anns_p_terms) m.anns_p += t.value;
  for (const auto& t : m.anns_f_terms) m.anns_f += t.value;
  return m;
}

}  // namespace permlens::emit
