#pragma once

// Runner settings from a key = value file and LATTICELAB_* environment
// variables. Later sources override earlier ones: defaults, file, environment,
// then command-line flags (applied by the caller).
//
//     # latticelab.toml
//     precision = 40
//     guard_digits = 14
//     parallelism = 4
//     timeout_secs = 600

#include "latticelab/bigreal.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace latticelab {

struct RunnerConfig {
  unsigned precision = 40;
  std::optional<unsigned> guard_digits;
  unsigned parallelism = 1;
  double timeout_secs = 600;

  friend bool operator==(const RunnerConfig&, const RunnerConfig&) = default;
};

/// Applies the keys found in `text` on top of `base`. Blank lines and '#'
/// comments are ignored; values may be quoted. Throws ParseError on unknown
/// keys or malformed values.
RunnerConfig parse_config(std::string_view text, RunnerConfig base = {});

RunnerConfig load_config_file(const std::string& path, RunnerConfig base = {});

using EnvLookup = std::function<const char*(const char*)>;

/// LATTICELAB_PRECISION, LATTICELAB_GUARD_DIGITS, LATTICELAB_PARALLELISM,
/// LATTICELAB_TIMEOUT_SECS override the matching keys.
RunnerConfig apply_environment(RunnerConfig base, const EnvLookup& lookup = {});

}  // namespace latticelab
