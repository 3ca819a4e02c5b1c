#include "frackansa/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <stdexcept>

namespace frackansa {

namespace {

std::string trim(const std::string& s) {
  auto issp = [](unsigned char c) { return std::isspace(c) != 0; };
  auto b = std::find_if_not(s.begin(), s.end(), issp);
  auto e = std::find_if_not(s.rbegin(), s.rend(), issp).base();
  return b < e ? std::string(b, e) : std::string();
}

[[noreturn]] void fail(const std::string& path, int line, const std::string& what) {
  throw std::runtime_error(path + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

std::map<std::string, std::string> read_key_values(
    const std::string& path, const std::vector<std::string>& allowed_keys) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);

  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    auto eq = line.find('=');
    if (eq == std::string::npos) fail(path, lineno, "expected 'key = value', got \"" + line + "\"");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(path, lineno, "missing key before '='");
    if (value.empty()) fail(path, lineno, "empty value for key \"" + key + "\"");
    if (!allowed_keys.empty() &&
        std::find(allowed_keys.begin(), allowed_keys.end(), key) == allowed_keys.end())
      fail(path, lineno, "unknown key \"" + key + "\"");
    if (out.count(key)) fail(path, lineno, "duplicate key \"" + key + "\"");
    out.emplace(std::move(key), std::move(value));
  }
  return out;
}

}  // namespace frackansa
