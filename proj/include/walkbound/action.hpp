#pragma once

#include <set>
#include <vector>

#include "walkbound/angle.hpp"
#include "walkbound/group.hpp"

namespace walkbound {

// Value of the homomorphism phi: G -> T^k x F at one point.
struct ActionImage {
  std::vector<Angle> angles;  // torus coordinates
  GroupElement finite;        // coordinates in the finite part
};

// Translation-type action S of G on Y = T^k x F: S_g(y) = y + phi(g), given by
// the images of the acting group's standard generators. Construction checks
// the torsion relations m_i * phi(g_i) = 0, so phi is a genuine homomorphism.
struct TargetAction {
  GroupSpec acting_group;
  int torus_dim = 0;
  GroupSpec finite_part;           // free_rank 0
  std::vector<ActionImage> images;  // one per generator of acting_group

  static TargetAction make(GroupSpec acting_group, int torus_dim,
                           GroupSpec finite_part,
                           std::vector<ActionImage> images);

  // The trivial action on a one-point space.
  static TargetAction trivial(GroupSpec acting_group);

  bool target_is_trivial() const;
  bool target_is_finite() const { return torus_dim == 0; }
  Int target_order() const;  // finite targets

  // phi evaluated on an integer coordinate vector (any lift of a group
  // element; well-defined by the validated relations).
  ActionImage apply_raw(const std::vector<Int>& coords) const;
  ActionImage apply(const GroupElement& g) const;

  // Symbol names appearing in any torus angle.
  std::set<std::string> symbols() const;
};

}  // namespace walkbound
