#pragma once

#include <cstdint>
#include <vector>

#include "walkbound/rokhlin.hpp"

namespace walkbound {

// Seeded Monte Carlo sample of the skew product's Y-marginal: i.i.d. jumps
// from p drive y <- y + phi(jump) from y_0 = 0; the histogram collects the
// positions after n_steps. Identical (seed, n_steps, n_paths) give
// bit-identical histograms for every thread count.
struct TrajectorySample {
  std::uint64_t seed = 0;
  long n_steps = 0;
  long n_paths = 0;
  std::vector<std::uint64_t> empirical_marginal;  // counts per target index
  // Final cocycle values f_n (cumulative jumps in G) per path; filled only
  // when requested.
  std::vector<GroupElement> jump_partial_products;
};

struct SimulateOptions {
  int max_threads = 0;       // 0: WALKBOUND_THREADS env or OpenMP default
  bool record_jumps = false;
};

TrajectorySample simulate(const RokhlinSystem& sys, std::uint64_t seed,
                          long n_steps, long n_paths,
                          const SimulateOptions& options = {});

// Serial reference: same draws, plain loop, no OpenMP.
TrajectorySample simulate_reference(const RokhlinSystem& sys,
                                    std::uint64_t seed, long n_steps,
                                    long n_paths,
                                    const SimulateOptions& options = {});

// Total variation distance between a count histogram and an exact law on the
// same index space.
double tv_distance(const std::vector<std::uint64_t>& counts,
                   const std::vector<Rat>& law);

}  // namespace walkbound
