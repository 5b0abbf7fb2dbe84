#pragma once

#include <compare>
#include <string>
#include <vector>

#include "walkbound/ints.hpp"

namespace walkbound {

struct GroupSpec;

// Element of Z^r x prod Z/m_i. Torsion coordinates are kept reduced into
// [0, m_i); all mutating group operations go through GroupSpec so the
// invariant holds by construction.
struct GroupElement {
  std::vector<Int> coords;

  bool operator==(const GroupElement&) const = default;
  bool operator<(const GroupElement& o) const { return coords < o.coords; }

  std::string to_string() const;
};

// A finitely generated abelian group Z^r x prod Z/m_i (m_i >= 2).
struct GroupSpec {
  int free_rank = 0;
  std::vector<Int> torsion;

  static GroupSpec make(int free_rank, std::vector<Int> torsion);

  int dim() const { return free_rank + static_cast<int>(torsion.size()); }
  bool is_finite() const { return free_rank == 0; }
  Int order() const;  // finite groups only

  GroupElement zero() const;
  GroupElement reduce(std::vector<Int> coords) const;
  GroupElement element(std::vector<Int> coords) const;  // validates + reduces

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  GroupElement scale(const Int& k, const GroupElement& a) const;

  bool contains(const GroupElement& a) const;

  // "Z^2 x Z/6", "Z", "Z/3", "trivial"
  std::string describe() const;

  bool operator==(const GroupSpec&) const = default;
};

// All elements of a finite group in lexicographic coordinate order. Guarded by
// max_order to keep enumeration at desk scale.
std::vector<GroupElement> enumerate_elements(const GroupSpec& g,
                                             const Int& max_order = Int(1000000));

}  // namespace walkbound
