#pragma once

#include <optional>

#include "walkbound/measure.hpp"
#include "walkbound/subgroup.hpp"

namespace walkbound {

// Boundary data of RW(G, p): H_p = <supp p> drives the Poisson boundary,
// H_t = <supp p - supp p> the tail boundary; both boundaries are the
// translation actions of G on the corresponding quotients.
struct WalkAnalysis {
  Subgroup h_poisson;
  Subgroup h_tail;
  QuotientStructure poisson_boundary;
  QuotientStructure tail_boundary;
  bool adapted = false;
  bool steady = false;
  std::optional<bool> aperiodic;      // nullopt: undecided within the bound
  std::optional<long> aperiodic_witness;  // n with supp(p^n) meeting supp(p^(n+1))
};

Subgroup poisson_subgroup(const JumpMeasure& p);
Subgroup tail_subgroup(const JumpMeasure& p);

// Full walk analysis. Aperiodicity is decided exactly on finite groups; on
// infinite groups the support-overlap search stops at the bound and reports
// unknown when nothing was found.
WalkAnalysis analyze(const JumpMeasure& p, long aperiodicity_bound = 64);

}  // namespace walkbound
