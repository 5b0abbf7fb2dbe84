#pragma once

#include <optional>

#include "walkbound/action.hpp"
#include "walkbound/measure.hpp"
#include "walkbound/subgroup.hpp"
#include "walkbound/walk.hpp"

namespace walkbound {

// The Rokhlin endomorphism over the Bernoulli base of RW(G, p): the base shifts
// the jump sequence, the one-coordinate cocycle feeds jumps into the target
// action. All decisions about it reduce to density of subgroup images in Y.
struct RokhlinSystem {
  JumpMeasure p;
  TargetAction action;

  static RokhlinSystem make(JumpMeasure p, TargetAction action);
};

// True iff the closure of phi(sub) is all of Y = T^k x F, decided exactly: a
// proper closed subgroup exists iff some nontrivial character (n, rho) of Y
// kills phi on every generator of sub. Symbolic irrational angles force their
// coefficient combinations to vanish identically, so the test is an integer
// feasibility problem solved by a kernel-lattice computation.
bool image_closure_is_full(const TargetAction& action, const Subgroup& sub);

// Ergodicity of the skew product: density of phi(H_p).
bool decide_ergodic(const RokhlinSystem& sys);

// Exactness of the skew product: density of phi(H_t).
bool decide_exact(const RokhlinSystem& sys);

// The Z-walk criterion "exact iff S^d is ergodic" with H_t = dZ. For a Dirac
// measure (d = 0) the degenerate branch is reported instead.
struct MeilijsonResult {
  Int d;
  bool degenerate = false;  // d = 0: tail subgroup is trivial
  bool exact = false;
  bool s_d_ergodic = false;
};

MeilijsonResult meilijson_check(const JumpMeasure& p,
                                const TargetAction& action);

// Cocycle dichotomy: either the one-coordinate cocycle splits as a constant t
// plus a cocycle into a finite subgroup K (f = g - g.T + t + fbar with g = 0,
// fbar = f - t), or the skew product is exact for every mildly mixing action.
enum class DichotomyBranch { kCompactlyReducible, kExactForMildlyMixing };

struct DichotomyResult {
  DichotomyBranch branch;
  std::optional<GroupElement> shift;     // t, when reducible
  std::optional<Subgroup> compact_part;  // K = H_t, finite, when reducible
};

DichotomyResult reducibility_dichotomy(const JumpMeasure& p);

// Weak mixing of the translation action of G on a boundary quotient: no
// nonconstant character eigenfunction, which for quotient translations means
// the quotient is trivial.
bool is_weakly_mixing_quotient(const QuotientStructure& q);

}  // namespace walkbound
