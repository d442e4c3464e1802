#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace testsupport {

namespace fs = std::filesystem;

inline fs::path fixture_dir() { return fs::path(PERMLENS_FIXTURE_DIR); }

inline std::string read_text(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string example() { return read_text(fixture_dir() / "example.java"); }
inline std::string example_no_ctor() { return read_text(fixture_dir() / "example_no_ctor.java"); }

inline std::vector<fs::path> corpus_files() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(fixture_dir() / "corpus")) {
    if (e.path().extension() == ".java") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// example, its mutant and the corpus
inline std::vector<fs::path> all_fixtures() {
  std::vector<fs::path> out{fixture_dir() / "example.java", fixture_dir() / "example_no_ctor.java"};
  for (auto& p : corpus_files()) out.push_back(p);
  return out;
}

inline fs::path scratch_dir(const std::string& name) {
  auto p = fs::temp_directory_path() / ("permlens-test-" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace testsupport
