#pragma once

#include <optional>
#include <string>
#include <vector>

#include "walkbound/group.hpp"
#include "walkbound/lattice.hpp"

namespace walkbound {

// Subgroup of a finitely generated abelian group, represented by the canonical
// column-HNF basis of its preimage lattice in Z^(r+k). The lattice always
// contains the torsion relation vectors m_i * e_{r+i}, so one integer-lattice
// pipeline covers free and torsion parts alike. Equal subgroups compare
// bit-identical.
struct Subgroup {
  GroupSpec group;
  IntMat basis;

  int rank() const { return basis.cols; }
  bool is_finite() const {
    return basis.cols == static_cast<int>(group.torsion.size());
  }
  bool is_trivial() const;
  bool is_full() const;
  std::optional<Int> order() const;

  // Elements of a finite subgroup, sorted; closure from the basis columns.
  std::vector<GroupElement> elements(const Int& max_order = Int(1000000)) const;

  bool operator==(const Subgroup&) const = default;
};

// Invariant-factor decomposition of G / H together with the projection
// homomorphism (from the Smith form of H's lattice basis).
struct QuotientStructure {
  GroupSpec group;
  Subgroup sub;
  int free_rank = 0;
  std::vector<Int> invariant_factors;  // d_1 | d_2 | ..., each >= 2

  IntMat u;                   // row transform of the Smith form
  std::vector<Int> snf_diag;  // all positive diagonal entries, rank of them
  int snf_rank = 0;

  GroupSpec quotient_spec() const;
  GroupElement project(const GroupElement& x) const;

  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  bool is_finite() const { return free_rank == 0; }
  std::optional<Int> order() const;
  std::string describe() const { return quotient_spec().describe(); }
};

// Minimal subgroup containing the generators.
Subgroup subgroup_generated(const GroupSpec& group,
                            const std::vector<GroupElement>& gens);

Subgroup trivial_subgroup(const GroupSpec& group);
Subgroup full_subgroup(const GroupSpec& group);

bool member(const Subgroup& sub, const GroupElement& x);

QuotientStructure quotient(const GroupSpec& group, const Subgroup& sub);

}  // namespace walkbound
