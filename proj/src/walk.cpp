#include "walkbound/walk.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace walkbound {

Subgroup poisson_subgroup(const JumpMeasure& p) {
  return subgroup_generated(p.group, p.support);
}

Subgroup tail_subgroup(const JumpMeasure& p) {
  std::vector<GroupElement> diffs;
  for (size_t i = 1; i < p.support.size(); ++i)
    diffs.push_back(p.group.sub(p.support[i], p.support[0]));
  return subgroup_generated(p.group, diffs);
}

namespace {

bool overlaps(const std::set<GroupElement>& a, const std::set<GroupElement>& b) {
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& big = a.size() <= b.size() ? b : a;
  return std::any_of(small.begin(), small.end(),
                     [&](const GroupElement& x) { return big.count(x) > 0; });
}

// First n <= n_max with supp(p^n) meeting supp(p^(n+1)), or nullopt.
std::optional<long> overlap_witness(const JumpMeasure& p, long n_max,
                                    size_t support_cap) {
  std::set<GroupElement> cur(p.support.begin(), p.support.end());
  for (long n = 1; n <= n_max; ++n) {
    std::set<GroupElement> nxt;
    for (const GroupElement& s : cur)
      for (const GroupElement& t : p.support) {
        nxt.insert(p.group.add(s, t));
        if (nxt.size() > support_cap)
          throw ResourceError("aperiodicity search support exceeds cap");
      }
    if (overlaps(cur, nxt)) return n;
    cur = std::move(nxt);
  }
  return std::nullopt;
}

}  // namespace

WalkAnalysis analyze(const JumpMeasure& p, long aperiodicity_bound) {
  if (aperiodicity_bound < 1)
    throw InputError("aperiodicity bound must be >= 1");
  WalkAnalysis a;
  a.h_poisson = poisson_subgroup(p);
  a.h_tail = tail_subgroup(p);
  a.poisson_boundary = quotient(p.group, a.h_poisson);
  a.tail_boundary = quotient(p.group, a.h_tail);
  a.adapted = a.h_poisson.is_full();
  a.steady = a.h_poisson == a.h_tail;

  if (p.group.is_finite()) {
    // supp(p^n) sits inside the coset n*s_0 + H_t; consecutive cosets meet
    // iff s_0 lies in H_t, and then the supports fill the coset, so the
    // search below is guaranteed to terminate.
    if (!member(a.h_tail, p.support[0])) {
      a.aperiodic = false;
    } else {
      Int bound = 4 * p.group.order() + 4;
      long cap = bound.fits_slong_p() ? bound.get_si() : aperiodicity_bound;
      auto n = overlap_witness(p, cap, kDefaultSupportCap);
      if (!n)
        throw std::logic_error("finite-group aperiodicity search did not "
                               "terminate within the theoretical bound");
      a.aperiodic = true;
      a.aperiodic_witness = *n;
    }
  } else {
    auto n = overlap_witness(p, aperiodicity_bound, kDefaultSupportCap);
    if (n) {
      a.aperiodic = true;
      a.aperiodic_witness = *n;
    }
    // else: unknown within the bound; left unset.
  }
  return a;
}

}  // namespace walkbound
