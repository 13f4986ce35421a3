#include "latticelab/config.hpp"

#include "latticelab/bigreal.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace latticelab {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("config key '" + std::string(key) + "': bad value '" + std::string(value) + "'");
  }
  return out;
}

void set_key(RunnerConfig& c, std::string_view key, std::string_view value) {
  if (key == "precision") {
    c.precision = parse_number<unsigned>(key, value);
    if (c.precision < 10) throw ParseError("precision must be at least 10");
  } else if (key == "guard_digits") {
    c.guard_digits = parse_number<unsigned>(key, value);
  } else if (key == "parallelism") {
    c.parallelism = parse_number<unsigned>(key, value);
    if (c.parallelism == 0) throw ParseError("parallelism must be positive");
  } else if (key == "timeout_secs") {
    c.timeout_secs = parse_number<double>(key, value);
    if (!(c.timeout_secs > 0)) throw ParseError("timeout_secs must be positive");
  } else {
    throw ParseError("unknown config key '" + std::string(key) + "'");
  }
}

}  // namespace

RunnerConfig parse_config(std::string_view text, RunnerConfig base) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string_view key = trim(line.substr(0, eq));
    std::string_view value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') && value.back() == value.front()) {
      value = value.substr(1, value.size() - 2);
    }
    set_key(base, key, value);
  }
  return base;
}

RunnerConfig load_config_file(const std::string& path, RunnerConfig base) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), base);
}

RunnerConfig apply_environment(RunnerConfig base, const EnvLookup& lookup) {
  const EnvLookup get = lookup ? lookup : EnvLookup([](const char* name) { return std::getenv(name); });
  const std::pair<const char*, const char*> keys[] = {{"LATTICELAB_PRECISION", "precision"},
                                                      {"LATTICELAB_GUARD_DIGITS", "guard_digits"},
                                                      {"LATTICELAB_PARALLELISM", "parallelism"},
                                                      {"LATTICELAB_TIMEOUT_SECS", "timeout_secs"}};
  for (const auto& [var, key] : keys) {
    if (const char* v = get(var); v && *v) set_key(base, key, trim(v));
  }
  return base;
}

}  // namespace latticelab
