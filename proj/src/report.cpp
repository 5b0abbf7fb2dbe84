#include "walkbound/report.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "walkbound/rng.hpp"
#include "walkbound/simulate.hpp"
#include "walkbound/spectral.hpp"
#include "walkbound/walk.hpp"

namespace walkbound {

using nlohmann::ordered_json;

namespace {

ordered_json subgroup_to_json(const Subgroup& s) {
  ordered_json j;
  ordered_json basis = ordered_json::array();
  for (int c = 0; c < s.basis.cols; ++c) {
    ordered_json col = ordered_json::array();
    for (int r = 0; r < s.basis.rows; ++r) col.push_back(to_int64(s.basis.at(r, c)));
    basis.push_back(col);
  }
  j["basis"] = basis;
  j["finite"] = s.is_finite();
  auto n = s.order();
  j["order"] = n ? ordered_json(to_int64(*n)) : ordered_json(nullptr);
  return j;
}

ordered_json quotient_to_json(const QuotientStructure& q) {
  ordered_json j;
  j["name"] = q.describe();
  j["free_rank"] = q.free_rank;
  ordered_json factors = ordered_json::array();
  for (const Int& d : q.invariant_factors) factors.push_back(to_int64(d));
  j["invariant_factors"] = factors;
  auto n = q.order();
  j["order"] = n ? ordered_json(to_int64(*n)) : ordered_json(nullptr);
  return j;
}

ordered_json tri_state(const std::optional<bool>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json walk_to_json(const WalkAnalysis& wa) {
  ordered_json j;
  j["h_poisson"] = subgroup_to_json(wa.h_poisson);
  j["h_tail"] = subgroup_to_json(wa.h_tail);
  j["poisson_boundary"] = quotient_to_json(wa.poisson_boundary);
  j["tail_boundary"] = quotient_to_json(wa.tail_boundary);
  j["adapted"] = wa.adapted;
  j["steady"] = wa.steady;
  j["aperiodic"] = tri_state(wa.aperiodic);
  j["aperiodic_witness"] =
      wa.aperiodic_witness ? ordered_json(*wa.aperiodic_witness)
                           : ordered_json(nullptr);
  ordered_json notes = ordered_json::array();
  if (wa.aperiodic && *wa.aperiodic)
    notes.push_back(
        "aperiodic: on a countable group this already forces the Poisson and "
        "tail boundaries to coincide; the steady flag above is decided "
        "directly from the subgroup identification");
  j["notes"] = notes;
  return j;
}

ordered_json report_shell(const SystemConfig& config, const char* command) {
  ordered_json j;
  j["version"] = kVersion;
  j["command"] = command;
  j["seed"] = config.task.seed;
  j["config"] = config_to_json(config);
  return j;
}

ordered_json decisions_to_json(const SystemConfig& config,
                               const WalkAnalysis& wa,
                               const RokhlinSystem& sys) {
  ordered_json d;
  d["ergodic"] = decide_ergodic(sys);
  d["exact"] = decide_exact(sys);
  d["steady"] = wa.steady;
  d["adapted"] = wa.adapted;
  d["aperiodic"] = tri_state(wa.aperiodic);

  DichotomyResult dich = reducibility_dichotomy(config.measure);
  ordered_json dj;
  dj["branch"] = dich.branch == DichotomyBranch::kCompactlyReducible
                     ? "CompactlyReducible"
                     : "ExactForMildlyMixing";
  if (dich.branch == DichotomyBranch::kCompactlyReducible) {
    ordered_json t = ordered_json::array();
    for (const Int& c : dich.shift->coords) t.push_back(to_int64(c));
    dj["t"] = t;
    dj["k"] = subgroup_to_json(*dich.compact_part);
  } else {
    dj["t"] = nullptr;
    dj["k"] = nullptr;
  }
  d["dichotomy"] = dj;

  if (config.group.free_rank == 1 && config.group.torsion.empty()) {
    MeilijsonResult m = meilijson_check(config.measure, sys.action);
    ordered_json mj;
    mj["d"] = to_int64(m.d);
    mj["degenerate"] = m.degenerate;
    mj["exact"] = m.exact;
    mj["s_d_ergodic"] = m.s_d_ergodic;
    d["meilijson"] = mj;
  } else {
    d["meilijson"] = nullptr;
  }
  d["poisson_quotient_weakly_mixing"] =
      is_weakly_mixing_quotient(wa.poisson_boundary);
  return d;
}

std::complex<double> unit_phase(const Rat& turns) {
  double t = 2.0 * std::numbers::pi * turns.get_d();
  return {std::cos(t), std::sin(t)};
}

std::vector<std::complex<double>> random_function(const FiniteTarget& target,
                                                  SplitMix64& rng) {
  auto unit = [&rng] {
    return 2.0 * (static_cast<double>(rng.next() >> 11) * 0x1.0p-53) - 1.0;
  };
  std::vector<std::complex<double>> h(target.size);
  for (auto& v : h) v = {unit(), unit()};
  return h;
}

double sup_distance_to_mean(const std::vector<std::complex<double>>& h) {
  std::complex<double> mean = 0.0;
  for (const auto& v : h) mean += v;
  mean /= static_cast<double>(h.size());
  double sup = 0.0;
  for (const auto& v : h) sup = std::max(sup, std::abs(v - mean));
  return sup;
}

struct TransferCheck {
  bool agrees = true;
  std::string status;  // "converged", "witness-persists", "inconclusive", ...
  long steps = 0;
  double residual = 0.0;
};

// Transfer-operator oracle against the algebraic exactness decision. Exact
// systems must flatten random functions to their mean; non-exact systems must
// keep a unit character alive. The iteration budget adapts to the measured
// contraction rate; when even the budgeted power cannot separate tol from the
// spectral bound, the check reports inconclusive instead of a fake verdict.
TransferCheck transfer_check(const RokhlinSystem& sys,
                             const SpectrumReport& spec, bool exact,
                             std::uint64_t seed, long base_steps, double tol) {
  FiniteTarget target = FiniteTarget::make(sys.action.finite_part);
  TransferCheck out;
  if (!exact) {
    // Drive the first nontrivial unit character: its sup norm is preserved.
    size_t chi = spec.unit_character_indices.front();
    std::vector<std::complex<double>> h(target.size);
    for (size_t y = 0; y < target.size; ++y)
      h[y] = unit_phase(target.character_phase(chi, y));
    auto res = transfer_iterate(sys, std::move(h), base_steps);
    out.steps = base_steps;
    out.residual = sup_distance_to_mean(res);
    out.agrees = out.residual > 0.5;  // should sit at 1 up to rounding
    out.status = out.agrees ? "witness-persists" : "witness-decayed";
    return out;
  }
  double rate = spec.max_nontrivial_modulus;
  long steps = base_steps;
  const long step_cap = 200000;
  bool certifiable = false;
  if (rate <= 0.0) {
    certifiable = true;
  } else if (rate < 1.0) {
    double needed = std::log(tol / (10.0 * static_cast<double>(target.size))) /
                    std::log(rate);
    steps = std::max(base_steps, static_cast<long>(std::ceil(needed)));
    certifiable = steps <= step_cap;
    steps = std::min(steps, step_cap);
  }
  SplitMix64 rng(seed ^ 0x7472616E73666572ULL);
  double worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    auto h = random_function(target, rng);
    auto res = transfer_iterate(sys, std::move(h), steps);
    worst = std::max(worst, sup_distance_to_mean(res));
  }
  out.steps = steps;
  out.residual = worst;
  if (worst < tol) {
    out.agrees = true;
    out.status = "converged";
  } else if (!certifiable) {
    // Contraction too weak to certify within the budget; not a disagreement.
    out.agrees = true;
    out.status = "inconclusive-slow-mixing";
  } else {
    out.agrees = false;
    out.status = "did-not-converge";
  }
  return out;
}

}  // namespace

CliResult cmd_analyze(const SystemConfig& config) {
  WalkAnalysis wa = analyze(config.measure, config.task.aperiodicity_bound);
  CliResult out;
  out.report = report_shell(config, "analyze");
  out.report["walk"] = walk_to_json(wa);
  return out;
}

CliResult cmd_decide(const SystemConfig& config) {
  if (!config.action)
    throw InputError("config.action: the decide command needs a target action");
  RokhlinSystem sys = RokhlinSystem::make(config.measure, *config.action);
  WalkAnalysis wa = analyze(config.measure, config.task.aperiodicity_bound);
  CliResult out;
  out.report = report_shell(config, "decide");
  out.report["walk"] = walk_to_json(wa);
  out.report["decisions"] = decisions_to_json(config, wa, sys);
  return out;
}

CliResult cmd_validate(const SystemConfig& config) {
  CliResult out = cmd_decide(config);
  out.report["command"] = "validate";
  RokhlinSystem sys = RokhlinSystem::make(config.measure, *config.action);

  ordered_json spectral;
  ordered_json validation;
  ordered_json agreement = ordered_json::object();
  bool all_agree = true;

  if (sys.action.target_is_finite()) {
    SpectrumReport spec = character_spectrum(sys);
    spectral["status"] = "ok";
    spectral["size"] = static_cast<long>(spec.eigenvalues.size());
    spectral["gap"] = spec.gap;
    spectral["max_nontrivial_modulus"] = spec.max_nontrivial_modulus;
    ordered_json units = ordered_json::array();
    for (size_t idx : spec.unit_character_indices) units.push_back(idx);
    spectral["unit_characters"] = units;

    bool exact = out.report["decisions"]["exact"].get<bool>();
    bool ergodic = out.report["decisions"]["ergodic"].get<bool>();
    bool exact_spectral = !spec.has_nontrivial_unit;
    bool ergodic_spectral = !spec.has_nontrivial_one;
    TransferCheck tc =
        transfer_check(sys, spec, exact, config.task.seed, 100, 1e-6);
    agreement["exact_vs_spectral"] = exact == exact_spectral;
    agreement["ergodic_vs_spectral"] = ergodic == ergodic_spectral;
    agreement["exact_vs_transfer"] = tc.agrees;
    validation["transfer"] = {{"status", tc.status},
                              {"steps", tc.steps},
                              {"residual", tc.residual}};
    all_agree =
        exact == exact_spectral && ergodic == ergodic_spectral && tc.agrees;
  } else {
    spectral["status"] = "skipped";
    spectral["reason"] = "target has a torus factor; finite-Y oracles only";
  }

  if (config.group.is_finite()) {
    auto profile = mixing_profile(config.measure, config.task.n_max);
    ordered_json tail = ordered_json::array();
    size_t first = profile.size() > 5 ? profile.size() - 5 : 0;
    for (size_t i = first; i < profile.size(); ++i) tail.push_back(profile[i]);
    validation["tv_profile_n"] = config.task.n_max;
    validation["tv_profile_tail"] = tail;
  } else {
    validation["tv_profile_n"] = nullptr;
    validation["tv_profile_tail"] = ordered_json::array();
  }
  validation["oracle_agreement"] = agreement;
  validation["all_agree"] = all_agree;

  out.report["spectral"] = spectral;
  out.report["validation"] = validation;
  if (!all_agree) out.exit_code = kExitDisagreement;
  return out;
}

CliResult cmd_simulate(const SystemConfig& config) {
  if (!config.action)
    throw InputError(
        "config.action: the simulate command needs a target action");
  RokhlinSystem sys = RokhlinSystem::make(config.measure, *config.action);
  if (!sys.action.target_is_finite())
    throw InputError(
        "config.action: simulation needs a finite target (no torus factor)");
  TrajectorySample sample = simulate(sys, config.task.seed,
                                     config.task.n_steps, config.task.n_paths);
  std::vector<Rat> law = config.task.n_steps >= 1
                             ? pushforward_power(sys, config.task.n_steps)
                             : [&] {
                                 FiniteTarget t =
                                     FiniteTarget::make(sys.action.finite_part);
                                 std::vector<Rat> l(t.size);
                                 l[0] = 1;
                                 return l;
                               }();
  CliResult out;
  out.report = report_shell(config, "simulate");
  ordered_json sim;
  sim["n_paths"] = sample.n_paths;
  sim["n_steps"] = sample.n_steps;
  ordered_json hist = ordered_json::array();
  for (std::uint64_t c : sample.empirical_marginal) hist.push_back(c);
  sim["histogram"] = hist;
  sim["tv_vs_exact"] = tv_distance(sample.empirical_marginal, law);
  out.report["simulation"] = sim;
  return out;
}

}  // namespace walkbound
