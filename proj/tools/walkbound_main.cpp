#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "walkbound/report.hpp"

namespace {

struct CommonOpts {
  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> seed_override;
  bool pretty = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path, "path to a JSON system config")
      ->required();
  cmd->add_option("--out", opts.out_path,
                  "write the report here instead of stdout");
  cmd->add_option("--seed", opts.seed_override,
                  "override the seed from the config");
  cmd->add_flag("--pretty", opts.pretty, "indent the JSON report");
}

int emit(const walkbound::CliResult& result, const CommonOpts& opts) {
  std::string text = result.report.dump(opts.pretty ? 2 : -1);
  text += "\n";
  if (opts.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opts.out_path);
    if (!out) {
      std::cerr << "error: cannot write " << opts.out_path << "\n";
      return 1;
    }
    out << text;
  }
  return result.exit_code;
}

int run(const std::string& command, const CommonOpts& opts) {
  std::ifstream in(opts.config_path);
  if (!in) {
    std::cerr << "error: cannot read config " << opts.config_path << "\n";
    return walkbound::kExitConfig;
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return walkbound::kExitConfig;
  }
  try {
    walkbound::SystemConfig config = walkbound::parse_config(doc);
    if (opts.seed_override) config.task.seed = *opts.seed_override;
    walkbound::CliResult result;
    if (command == "analyze")
      result = walkbound::cmd_analyze(config);
    else if (command == "decide")
      result = walkbound::cmd_decide(config);
    else if (command == "validate")
      result = walkbound::cmd_validate(config);
    else
      result = walkbound::cmd_simulate(config);
    return emit(result, opts);
  } catch (const walkbound::InputError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return walkbound::kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "walkbound: boundaries of random walks on finitely generated abelian "
      "groups and exactness of the skew products they drive"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string chosen;
  for (const char* name : {"analyze", "decide", "validate", "simulate"}) {
    CLI::App* sub = app.add_subcommand(
        name, std::string(name) == "analyze"
                  ? "walk boundaries, adaptedness, steadiness, aperiodicity"
              : std::string(name) == "decide"
                  ? "ergodicity/exactness decisions for the skew product"
              : std::string(name) == "validate"
                  ? "decisions cross-checked by spectral and transfer oracles"
                  : "seeded Monte Carlo of the target marginal");
    add_common(sub, opts);
    sub->callback([&chosen, name] { chosen = name; });
  }

  CLI11_PARSE(app, argc, argv);
  return run(chosen, opts);
}
