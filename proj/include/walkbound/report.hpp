#pragma once

#include "walkbound/config.hpp"

namespace walkbound {

inline constexpr const char* kVersion = "0.1.0";

// Exit-code contract: 0 success, 2 config error, 3 oracle disagreement.
// Code 2 is raised by the caller on InputError; cmd_validate returns 3 itself
// when an oracle disagrees (a disagreement is a defect, not a warning).
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitDisagreement = 3;

struct CliResult {
  int exit_code = kExitOk;
  nlohmann::ordered_json report;
};

// Boundary analysis of the walk alone (no action required).
CliResult cmd_analyze(const SystemConfig& config);

// Ergodicity/exactness decisions for the skew product; requires an action.
CliResult cmd_decide(const SystemConfig& config);

// Decisions plus independent spectral/transfer oracles; spectral parts are
// skipped (with explicit status) when the target has a torus factor.
CliResult cmd_validate(const SystemConfig& config);

// Seeded Monte Carlo of the Y-marginal with the exact pushforward residual.
CliResult cmd_simulate(const SystemConfig& config);

}  // namespace walkbound
