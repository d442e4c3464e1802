#include "permlens/cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "permlens/emit/report.hpp"
#include "permlens/pipeline.hpp"

namespace permlens::cli {

namespace fs = std::filesystem;

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + p.string());
  out << text;
  if (!out) throw ConfigError("cannot write " + p.string());
}

std::string safe_file_name(std::string s) {
  for (char& c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '_' || c == '-')) c = '_';
  }
  return s;
}

}  // namespace

std::set<std::string> parse_emit_list(const std::string& text) {
  static const std::set<std::string> known = {"annotated", "pulse", "json", "md", "dot"};
  std::set<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    item = trim(item);
    if (item.empty()) continue;
    if (!known.count(item)) throw ConfigError("unknown emit kind '" + item + "'");
    out.insert(item);
  }
  return out;
}

FailOn parse_fail_on(const std::string& text) {
  if (text == "never") return FailOn::Never;
  if (text == "unsatisfiable") return FailOn::Unsatisfiable;
  if (text == "warnings") return FailOn::Warnings;
  throw ConfigError("unknown fail-on value '" + text + "'");
}

resolve::BindingMode parse_binding_mode(const std::string& text) {
  if (text == "first") return resolve::BindingMode::FirstCallSite;
  if (text == "all") return resolve::BindingMode::AllCallSites;
  throw ConfigError("unknown param-binding value '" + text + "'");
}

void apply_config_file(const fs::path& file, Config& config, const std::set<std::string>& locked) {
  std::istringstream in(read_file(file));
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(file.string() + ":" + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (locked.count(key)) continue;
    if (key == "out") {
      config.out_dir = value;
    } else if (key == "emit") {
      config.emit = parse_emit_list(value);
    } else if (key == "fail-on") {
      config.fail_on = parse_fail_on(value);
    } else if (key == "param-binding") {
      config.binding_mode = parse_binding_mode(value);
    } else if (key == "timing") {
      config.timing = value == "true" || value == "1";
    } else {
      throw ConfigError(file.string() + ":" + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
}

std::vector<fs::path> expand_inputs(const std::vector<std::string>& inputs) {
  std::vector<fs::path> out;
  for (const auto& in : inputs) {
    const fs::path p(in);
    std::error_code ec;
    if (fs::is_directory(p, ec)) {
      std::vector<fs::path> found;
      for (const auto& e : fs::recursive_directory_iterator(p)) {
        const auto ext = e.path().extension();
        if (e.is_regular_file() && (ext == ".java" || ext == ".jsub")) found.push_back(e.path());
      }
      std::sort(found.begin(), found.end());
      out.insert(out.end(), found.begin(), found.end());
    } else if (fs::is_regular_file(p, ec)) {
      out.push_back(p);
    } else {
      throw ConfigError("no such input: " + in);
    }
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"permlens: access-permission contract inference"};
  app.require_subcommand(1);
  auto* analyze = app.add_subcommand("analyze", "analyze Java-subset sources");
  Config cfg;
  std::string out_dir, emit_list, fail_on, binding, config_file;
  analyze->add_option("paths", cfg.inputs, "source files or directories")->required();
  auto* o_out = analyze->add_option("--out", out_dir, "output directory");
  auto* o_emit = analyze->add_option("--emit", emit_list, "comma list of annotated,pulse,json,md,dot");
  auto* o_fail = analyze->add_option("--fail-on", fail_on, "never|unsatisfiable|warnings");
  auto* o_bind = analyze->add_option("--param-binding", binding, "first|all");
  analyze->add_option("--config", config_file, "key = value configuration file");
  auto* o_timing = analyze->add_flag("--timing", cfg.timing, "record wall time in report.json");
  analyze->add_flag("-v,--verbose", cfg.verbosity, "more output");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kEnvironmentError;
  }

  try {
    if (!config_file.empty()) {
      std::set<std::string> locked;
      if (*o_out) locked.insert("out");
      if (*o_emit) locked.insert("emit");
      if (*o_fail) locked.insert("fail-on");
      if (*o_bind) locked.insert("param-binding");
      if (*o_timing) locked.insert("timing");
      apply_config_file(config_file, cfg, locked);
    }
    if (*o_out) cfg.out_dir = out_dir;
    if (*o_emit) cfg.emit = parse_emit_list(emit_list);
    if (*o_fail) cfg.fail_on = parse_fail_on(fail_on);
    if (*o_bind) cfg.binding_mode = parse_binding_mode(binding);

    std::vector<SourceFile> files;
    for (const auto& p : expand_inputs(cfg.inputs)) files.push_back({p.string(), read_file(p)});
    if (files.empty()) throw ConfigError("no source files found");

    Analysis a = analyze_sources(files, Options{cfg.binding_mode});
    for (const auto& d : a.diagnostics) {
      if (d.severity == Severity::Error || cfg.verbosity > 0) {
        std::string src;
        for (const auto& f : files) {
          if (f.path == d.file) src = f.text;
        }
        err << format_diagnostic(d, src) << "\n";
      }
    }
    if (a.has_errors) return kInputError;

    fs::create_directories(cfg.out_dir);
    const auto idx = a.index();
    for (const auto& unit : a.program->units) {
      const std::string stem = fs::path(unit.path).stem().string();
      if (cfg.emit.count("annotated")) {
        write_file(cfg.out_dir / (stem + ".annotated.java"), emit::emit_field_level(unit, idx));
      }
      if (cfg.emit.count("pulse")) {
        write_file(cfg.out_dir / (stem + ".pulse.java"), emit::emit_object_level(unit, idx).text);
      }
    }
    if (cfg.emit.count("json")) write_file(cfg.out_dir / "report.json", emit::report_json(a, cfg.timing).dump(2) + "\n");
    if (cfg.emit.count("md")) write_file(cfg.out_dir / "report.md", emit::report_markdown(a));
    if (cfg.emit.count("dot")) {
      fs::create_directories(cfg.out_dir / "graphs");
      for (const auto& [id, g] : a.graphs) {
        write_file(cfg.out_dir / "graphs" / (safe_file_name(id) + ".dot"), extract::to_dot(g));
      }
    }

    const auto& sat = a.satisfiability;
    out << sat.satisfiable() << " satisfiable, " << sat.unsatisfiable() << " unsatisfiable, "
        << a.null_warnings.size() << " null-reference warnings\n";
    if (cfg.verbosity > 0) {
      for (const auto& m : a.matrices) {
        out << m.class_name << ": " << m.concur_m.num << "/" << m.concur_m.den << " methods concurrent ("
            << m.concur_m.percent() << "%)\n";
      }
    }
    if (cfg.fail_on == FailOn::Unsatisfiable && sat.unsatisfiable() > 0) return kFailOn;
    if (cfg.fail_on == FailOn::Warnings && (sat.unsatisfiable() > 0 || a.warning_count() > 0)) return kFailOn;
    return kOk;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kEnvironmentError;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kEnvironmentError;
  }
}

}  // namespace permlens::cli
