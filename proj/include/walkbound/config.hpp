#pragma once

#include <optional>

#include <json.hpp>

#include "walkbound/action.hpp"
#include "walkbound/measure.hpp"

namespace walkbound {

struct TaskParams {
  long aperiodicity_bound = 64;
  long n_max = 50;
  std::uint64_t seed = 1;
  long n_paths = 100000;
  long n_steps = 64;
};

// Parsed batch-job description. The JSON schema keeps every rational as an
// "a/b" string so configs and reports round-trip without loss.
struct SystemConfig {
  GroupSpec group;
  JumpMeasure measure;
  std::optional<TargetAction> action;
  TaskParams task;
};

// Throws InputError with a field path on any validation failure.
SystemConfig parse_config(const nlohmann::json& doc);

// Canonical echo; parse_config(config_to_json(c)) reproduces c exactly.
nlohmann::ordered_json config_to_json(const SystemConfig& config);

}  // namespace walkbound
