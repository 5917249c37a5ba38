#include "sta/config.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>
#include <vector>

namespace sta {
namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::istringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <typename T>
bool to_integer(const std::string& text, T& out) {
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

bool to_real(const std::string& text, double& out) {
  try {
    std::size_t used = 0;
    out = std::stod(text, &used);
    return used == text.size();
  } catch (const std::exception&) {
    return false;
  }
}

bool set_real(std::optional<double>& slot, const std::string& value) {
  double v = 0;
  if (!to_real(value, v)) return false;
  slot = v;
  return true;
}

}  // namespace

bool apply_config_key(ExperimentConfig& config, const std::string& key, const std::string& value) {
  auto& spec = config.spec;
  auto& o = spec.overrides;
  if (key == "functions") {
    auto names = split_list(value);
    if (names.empty()) return false;
    const auto all = registry<double>();
    for (const auto& n : names) {
      if (std::none_of(all.begin(), all.end(), [&](const auto& b) { return b.name == n; }))
        return false;
    }
    spec.benchmarks = std::move(names);
    return true;
  }
  if (key == "variants") {
    std::vector<StaVariant> variants;
    try {
      for (const auto& v : split_list(value)) variants.push_back(parse_variant(v));
    } catch (const ConfigError&) {
      return false;
    }
    if (variants.empty()) return false;
    spec.variants = std::move(variants);
    return true;
  }
  if (key == "runs") return to_integer(value, spec.runs) && spec.runs >= 1;
  if (key == "epochs") return to_integer(value, spec.epochs) && spec.epochs >= 1;
  if (key == "seed") return config.seed_given = to_integer(value, spec.master_seed);
  if (key == "threads") return to_integer(value, spec.threads);
  if (key == "se") {
    int se = 0;
    if (!to_integer(value, se) || se < 1) return false;
    o.se = se;
    return true;
  }
  if (key == "alpha_max") return set_real(o.alpha_max, value);
  if (key == "alpha_min") return set_real(o.alpha_min, value);
  if (key == "beta") return set_real(o.beta, value);
  if (key == "gamma") return set_real(o.gamma, value);
  if (key == "delta") return set_real(o.delta, value);
  if (key == "fc") return set_real(o.fc, value);
  if (key == "format") {
    try {
      config.format = parse_format(value);
    } catch (const ConfigError&) {
      return false;
    }
    return true;
  }
  if (key == "out") {
    if (value.empty()) return false;
    config.out = value;
    return true;
  }
  return false;
}

ExperimentConfig parse_experiment_config(std::istream& is) {
  ExperimentConfig config;
  std::vector<std::string> offending;
  std::string line;
  int number = 0;
  while (std::getline(is, line)) {
    ++number;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      offending.push_back("line " + std::to_string(number));
      continue;
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (!apply_config_key(config, key, value)) {
      offending.push_back(key.empty() ? "line " + std::to_string(number) : key);
    }
  }
  if (!offending.empty()) {
    std::string msg = "malformed config, offending keys:";
    for (const auto& k : offending) msg += " " + k;
    throw ConfigError(msg);
  }
  return config;
}

}  // namespace sta
