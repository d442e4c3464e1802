#pragma once

#include <string>

#include "json.hpp"
#include "permlens/pipeline.hpp"

namespace permlens::emit {

inline constexpr const char* kReportSchemaVersion = "1.0";

nlohmann::ordered_json report_json(const Analysis& a, bool with_timing = false);
std::string report_markdown(const Analysis& a);

}  // namespace permlens::emit
