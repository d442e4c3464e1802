#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "permlens/resolve/bindings.hpp"

namespace permlens::cli {

enum class FailOn { Never, Unsatisfiable, Warnings };

enum ExitCode : int { kOk = 0, kInputError = 1, kFailOn = 2, kEnvironmentError = 3 };

struct Config {
  std::vector<std::string> inputs;
  std::filesystem::path out_dir = "permlens-out";
  std::set<std::string> emit = {"annotated", "pulse", "json", "md"};
  FailOn fail_on = FailOn::Never;
  resolve::BindingMode binding_mode = resolve::BindingMode::FirstCallSite;
  bool timing = false;
  int verbosity = 0;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// key = value lines; '#' starts a comment. Keys: out, emit, fail-on,
// param-binding, timing.
void apply_config_file(const std::filesystem::path& file, Config& config, const std::set<std::string>& locked);

std::set<std::string> parse_emit_list(const std::string& text);
FailOn parse_fail_on(const std::string& text);
resolve::BindingMode parse_binding_mode(const std::string& text);

// Inputs expanded to files: directories are searched recursively for
// .java and .jsub files, sorted by path.
std::vector<std::filesystem::path> expand_inputs(const std::vector<std::string>& inputs);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permlens::cli
