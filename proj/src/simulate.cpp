#include "walkbound/simulate.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "walkbound/rng.hpp"
#include "walkbound/spectral.hpp"

namespace walkbound {

namespace {

struct SamplerPlan {
  FiniteTarget target;
  std::vector<std::uint64_t> thresholds;  // cumulative weights scaled to 2^64
  std::vector<size_t> transition;         // [jump * size + y] -> y + phi(jump)
  size_t n_jumps = 0;
};

SamplerPlan make_plan(const RokhlinSystem& sys) {
  if (!sys.action.target_is_finite())
    throw UnsupportedOracle("simulation requires a finite target");
  SamplerPlan plan{FiniteTarget::make(sys.action.finite_part), {}, {}, 0};
  plan.n_jumps = sys.p.support.size();

  // Inverse-CDF thresholds on the full 64-bit range: jump j is chosen for
  // draws u < floor(2^64 * cum_j) not claimed by earlier jumps. The final
  // bucket absorbs the remainder, so the selection is total.
  auto to_u64 = [](const Int& v) {
    Int lo = v & Int(0xFFFFFFFF);
    Int hi = v >> 32;
    return (static_cast<std::uint64_t>(hi.get_ui()) << 32) |
           static_cast<std::uint64_t>(lo.get_ui());
  };
  Rat cum = 0;
  Int two64 = Int(1) << 64;
  for (size_t j = 0; j < plan.n_jumps; ++j) {
    cum += sys.p.weights[j];
    Int scaled = (cum.get_num() << 64) / cum.get_den();
    if (scaled >= two64) scaled = two64 - 1;
    plan.thresholds.push_back(to_u64(scaled));
  }

  std::vector<size_t> img;
  for (const GroupElement& s : sys.p.support)
    img.push_back(plan.target.index_of(sys.action.apply(s).finite));
  plan.transition.resize(plan.n_jumps * plan.target.size);
  for (size_t j = 0; j < plan.n_jumps; ++j)
    for (size_t y = 0; y < plan.target.size; ++y)
      plan.transition[j * plan.target.size + y] = plan.target.add(y, img[j]);
  return plan;
}

size_t pick_jump(const SamplerPlan& plan, std::uint64_t u) {
  for (size_t j = 0; j + 1 < plan.n_jumps; ++j)
    if (u < plan.thresholds[j]) return j;
  return plan.n_jumps - 1;
}

// One path end-to-end; the only source of randomness is the path's own
// SplitMix64 stream, so paths are schedule-independent.
size_t run_path(const SamplerPlan& plan, const RokhlinSystem& sys,
                std::uint64_t seed, long path, long n_steps,
                GroupElement* jump_sum) {
  SplitMix64 rng(path_stream_seed(seed, static_cast<std::uint64_t>(path)));
  size_t y = 0;
  for (long t = 0; t < n_steps; ++t) {
    size_t j = pick_jump(plan, rng.next());
    y = plan.transition[j * plan.target.size + y];
    if (jump_sum) *jump_sum = sys.p.group.add(*jump_sum, sys.p.support[j]);
  }
  return y;
}

int resolve_threads(const SimulateOptions& options) {
  int n = options.max_threads;
  if (n <= 0) {
    if (const char* env = std::getenv("WALKBOUND_THREADS")) {
      n = std::atoi(env);
    }
  }
#ifdef _OPENMP
  if (n <= 0) n = omp_get_max_threads();
#else
  n = 1;
#endif
  return n < 1 ? 1 : n;
}

void validate_run(long n_steps, long n_paths) {
  if (n_paths < 1) throw InputError("n_paths must be >= 1");
  if (n_steps < 0) throw InputError("n_steps must be nonnegative");
}

}  // namespace

TrajectorySample simulate_reference(const RokhlinSystem& sys,
                                    std::uint64_t seed, long n_steps,
                                    long n_paths,
                                    const SimulateOptions& options) {
  validate_run(n_steps, n_paths);
  SamplerPlan plan = make_plan(sys);
  TrajectorySample out;
  out.seed = seed;
  out.n_steps = n_steps;
  out.n_paths = n_paths;
  out.empirical_marginal.assign(plan.target.size, 0);
  if (options.record_jumps)
    out.jump_partial_products.assign(static_cast<size_t>(n_paths),
                                     sys.p.group.zero());
  for (long i = 0; i < n_paths; ++i) {
    GroupElement* slot = options.record_jumps
                             ? &out.jump_partial_products[static_cast<size_t>(i)]
                             : nullptr;
    ++out.empirical_marginal[run_path(plan, sys, seed, i, n_steps, slot)];
  }
  return out;
}

TrajectorySample simulate(const RokhlinSystem& sys, std::uint64_t seed,
                          long n_steps, long n_paths,
                          const SimulateOptions& options) {
  validate_run(n_steps, n_paths);
  SamplerPlan plan = make_plan(sys);
  TrajectorySample out;
  out.seed = seed;
  out.n_steps = n_steps;
  out.n_paths = n_paths;
  out.empirical_marginal.assign(plan.target.size, 0);
  if (options.record_jumps)
    out.jump_partial_products.assign(static_cast<size_t>(n_paths),
                                     sys.p.group.zero());
#ifdef _OPENMP
  const int n_threads = resolve_threads(options);
#pragma omp parallel num_threads(n_threads)
  {
    // Per-thread histograms merged with commutative integer addition: the
    // totals cannot depend on the schedule.
    std::vector<std::uint64_t> local(plan.target.size, 0);
#pragma omp for schedule(static)
    for (long i = 0; i < n_paths; ++i) {
      GroupElement* slot =
          options.record_jumps
              ? &out.jump_partial_products[static_cast<size_t>(i)]
              : nullptr;
      ++local[run_path(plan, sys, seed, i, n_steps, slot)];
    }
#pragma omp critical
    for (size_t y = 0; y < local.size(); ++y)
      out.empirical_marginal[y] += local[y];
  }
#else
  (void)resolve_threads;
  for (long i = 0; i < n_paths; ++i) {
    GroupElement* slot = options.record_jumps
                             ? &out.jump_partial_products[static_cast<size_t>(i)]
                             : nullptr;
    ++out.empirical_marginal[run_path(plan, sys, seed, i, n_steps, slot)];
  }
#endif
  return out;
}

double tv_distance(const std::vector<std::uint64_t>& counts,
                   const std::vector<Rat>& law) {
  if (counts.size() != law.size())
    throw InputError("histogram and law sizes differ");
  std::uint64_t total = 0;
  for (std::uint64_t c : counts) total += c;
  double tv = 0.0;
  for (size_t y = 0; y < counts.size(); ++y)
    tv += std::abs(static_cast<double>(counts[y]) /
                       static_cast<double>(total) -
                   law[y].get_d());
  return tv / 2.0;
}

}  // namespace walkbound
