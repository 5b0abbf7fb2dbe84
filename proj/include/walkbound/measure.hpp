#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "walkbound/group.hpp"

namespace walkbound {

// Finitely supported probability with exact rational weights: the jump law of
// the random walk RW(G, p).
struct JumpMeasure {
  GroupSpec group;
  std::vector<GroupElement> support;
  std::vector<Rat> weights;

  // Validates: reduced distinct support, strictly positive weights, exact sum 1.
  static JumpMeasure create(GroupSpec group, std::vector<GroupElement> support,
                            std::vector<Rat> weights);
  // Builds from an aggregation map (support sorted).
  static JumpMeasure from_map(GroupSpec group,
                              const std::map<GroupElement, Rat>& mass);

  size_t size() const { return support.size(); }
  bool is_dirac() const { return support.size() == 1; }

  // p * delta_g (support translated by g).
  JumpMeasure translated(const GroupElement& g) const;

  std::map<GroupElement, Rat> as_map() const;
};

inline constexpr size_t kDefaultSupportCap = 1000000;

// Exact convolution; throws ResourceError when the support would exceed the cap.
JumpMeasure convolve(const JumpMeasure& a, const JumpMeasure& b,
                     size_t support_cap = kDefaultSupportCap);

// Exact n-fold convolution power p^{n*}, n >= 1.
JumpMeasure convolution_power(const JumpMeasure& p, long n,
                              size_t support_cap = kDefaultSupportCap);

// Supports of p^{n*} for n = 1..n_max (weights ignored; used by the
// aperiodicity search).
std::vector<std::vector<GroupElement>> support_powers(const JumpMeasure& p,
                                                      long n_max,
                                                      size_t support_cap);

}  // namespace walkbound
