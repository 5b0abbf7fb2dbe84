#include "walkbound/measure.hpp"

#include <set>

namespace walkbound {

JumpMeasure JumpMeasure::create(GroupSpec group,
                                std::vector<GroupElement> support,
                                std::vector<Rat> weights) {
  if (support.size() != weights.size())
    throw InputError("support and weight counts differ");
  if (support.empty()) throw InputError("empty support");
  std::set<GroupElement> seen;
  Rat total = 0;
  for (size_t i = 0; i < support.size(); ++i) {
    support[i] = group.reduce(support[i].coords);
    if (!seen.insert(support[i]).second)
      throw InputError("support point " + support[i].to_string() +
                       " repeats after torsion reduction");
    if (weights[i] <= 0)
      throw InputError("weights must be strictly positive");
    total += weights[i];
  }
  if (total != 1)
    throw InputError("weights must sum to exactly 1, got " +
                     rational_to_string(total));
  JumpMeasure p;
  p.group = std::move(group);
  p.support = std::move(support);
  p.weights = std::move(weights);
  return p;
}

JumpMeasure JumpMeasure::from_map(GroupSpec group,
                                  const std::map<GroupElement, Rat>& mass) {
  std::vector<GroupElement> support;
  std::vector<Rat> weights;
  for (const auto& [g, w] : mass) {
    support.push_back(g);
    weights.push_back(w);
  }
  return create(std::move(group), std::move(support), std::move(weights));
}

JumpMeasure JumpMeasure::translated(const GroupElement& g) const {
  JumpMeasure out = *this;
  for (auto& s : out.support) s = group.add(s, g);
  return out;
}

std::map<GroupElement, Rat> JumpMeasure::as_map() const {
  std::map<GroupElement, Rat> m;
  for (size_t i = 0; i < support.size(); ++i) m[support[i]] = weights[i];
  return m;
}

JumpMeasure convolve(const JumpMeasure& a, const JumpMeasure& b,
                     size_t support_cap) {
  if (a.group != b.group) throw InputError("convolution across distinct groups");
  std::map<GroupElement, Rat> acc;
  for (size_t i = 0; i < a.support.size(); ++i)
    for (size_t j = 0; j < b.support.size(); ++j) {
      GroupElement s = a.group.add(a.support[i], b.support[j]);
      acc[s] += a.weights[i] * b.weights[j];
      if (acc.size() > support_cap)
        throw ResourceError("convolution support exceeds cap of " +
                            std::to_string(support_cap) + " points");
    }
  return JumpMeasure::from_map(a.group, acc);
}

JumpMeasure convolution_power(const JumpMeasure& p, long n,
                              size_t support_cap) {
  if (n < 1) throw InputError("convolution power requires n >= 1");
  JumpMeasure acc = p;
  for (long i = 1; i < n; ++i) acc = convolve(acc, p, support_cap);
  return acc;
}

std::vector<std::vector<GroupElement>> support_powers(const JumpMeasure& p,
                                                      long n_max,
                                                      size_t support_cap) {
  std::vector<std::vector<GroupElement>> out;
  std::set<GroupElement> cur(p.support.begin(), p.support.end());
  out.emplace_back(cur.begin(), cur.end());
  for (long n = 2; n <= n_max; ++n) {
    std::set<GroupElement> nxt;
    for (const GroupElement& s : cur)
      for (const GroupElement& t : p.support) {
        nxt.insert(p.group.add(s, t));
        if (nxt.size() > support_cap)
          throw ResourceError("support power exceeds cap");
      }
    out.emplace_back(nxt.begin(), nxt.end());
    cur = std::move(nxt);
  }
  return out;
}

}  // namespace walkbound
