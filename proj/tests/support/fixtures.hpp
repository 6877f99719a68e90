#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#ifndef MDL_SOURCE_DIR
#error "MDL_SOURCE_DIR must be defined by the build"
#endif

namespace fixtures {

inline std::filesystem::path source_dir() { return MDL_SOURCE_DIR; }
inline std::filesystem::path fixture_dir() { return source_dir() / "tests" / "fixtures"; }

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

struct Fragment {
  std::string anchor;
  std::string text;
};

inline std::vector<Fragment> license_fragments() {
  auto j = nlohmann::json::parse(read_file(fixture_dir() / "license_fragments.json"));
  std::vector<Fragment> out;
  for (const auto& f : j) out.push_back({f["anchor"], f["text"]});
  return out;
}

// paper.md with its mis-decoded punctuation repaired; empty if absent.
inline std::string paper_text() {
  auto path = source_dir() / "paper.md";
  if (!std::filesystem::exists(path)) return {};
  std::string s = read_file(path);
  const std::pair<std::string, std::string> fixes[] = {
      {"\xC3\x94\xC3\x87\xC5\xA5", "\xE2\x80\x9C"},  // left double quote
      {"\xC3\x94\xC3\x87\xC5\x81", "\xE2\x80\x9D"},  // right double quote
      {"\xC3\x94\xC3\x87\xC3\x96", "\xE2\x80\x99"},  // apostrophe
  };
  for (const auto& [bad, good] : fixes)
    for (auto pos = s.find(bad); pos != std::string::npos; pos = s.find(bad, pos + good.size()))
      s.replace(pos, bad.size(), good);
  return s;
}

inline std::vector<std::filesystem::path> json_files(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fixtures
