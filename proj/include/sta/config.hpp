#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "sta/harness.hpp"
#include "sta/report_io.hpp"

namespace sta {

/**
 * Experiment settings read from a flat `key = value` document.
 *
 * Blank lines and lines starting with `#` are ignored. Recognized keys:
 * functions, variants (comma lists), runs, epochs, seed, threads, se,
 * alpha_max, alpha_min, beta, gamma, delta, fc, format, out. Every key is
 * optional; missing keys keep the ExperimentSpec::defaults() value.
 */
struct ExperimentConfig {
  ExperimentSpec spec{ExperimentSpec::defaults()};
  std::optional<Format> format;
  std::optional<std::string> out;
  bool seed_given{false};
};

/// Throws ConfigError naming every malformed line, unknown key and bad value.
ExperimentConfig parse_experiment_config(std::istream& is);

/// Applies a single key; returns false when the key is unknown or the value
/// does not parse.
bool apply_config_key(ExperimentConfig& config, const std::string& key, const std::string& value);

}  // namespace sta
