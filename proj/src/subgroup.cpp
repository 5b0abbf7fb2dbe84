#include "walkbound/subgroup.hpp"

#include <set>

namespace walkbound {

namespace {

// Columns m_i * e_{r+i} spanning the torsion relation lattice.
std::vector<std::vector<Int>> relation_columns(const GroupSpec& g) {
  std::vector<std::vector<Int>> cols;
  for (size_t i = 0; i < g.torsion.size(); ++i) {
    std::vector<Int> c(g.dim());
    c[g.free_rank + i] = g.torsion[i];
    cols.push_back(std::move(c));
  }
  return cols;
}

}  // namespace

bool Subgroup::is_trivial() const {
  return basis == hnf_columns(IntMat::from_columns(
                      group.dim(), relation_columns(group)));
}

bool Subgroup::is_full() const {
  return basis == IntMat::identity(group.dim());
}

std::optional<Int> Subgroup::order() const {
  if (!is_finite()) return std::nullopt;
  // |H| = [L : R], the determinant of the relation columns expressed in the
  // basis of L.
  int k = static_cast<int>(group.torsion.size());
  IntMat coeffs(k, k);
  auto rels = relation_columns(group);
  for (int j = 0; j < k; ++j) {
    auto c = solve_in_lattice(basis, rels[j]);
    if (!c) throw InputError("corrupt subgroup: relations outside lattice");
    for (int i = 0; i < k; ++i) coeffs.at(i, j) = (*c)[i];
  }
  return abs_det(coeffs);
}

std::vector<GroupElement> Subgroup::elements(const Int& max_order) const {
  auto n = order();
  if (!n) throw InputError("cannot enumerate an infinite subgroup");
  if (*n > max_order)
    throw ResourceError("subgroup order " + n->get_str() +
                        " exceeds enumeration cap");
  std::set<GroupElement> seen;
  std::vector<GroupElement> queue;
  seen.insert(group.zero());
  queue.push_back(group.zero());
  std::vector<GroupElement> gens;
  for (int j = 0; j < basis.cols; ++j) {
    GroupElement g = group.reduce(basis.column(j));
    gens.push_back(g);
    gens.push_back(group.negate(g));
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    GroupElement cur = queue[head];
    for (const GroupElement& g : gens) {
      GroupElement nxt = group.add(cur, g);
      if (seen.insert(nxt).second) queue.push_back(nxt);
    }
  }
  return {seen.begin(), seen.end()};
}

Subgroup subgroup_generated(const GroupSpec& group,
                            const std::vector<GroupElement>& gens) {
  std::vector<std::vector<Int>> cols;
  for (const GroupElement& g : gens) {
    if (static_cast<int>(g.coords.size()) != group.dim())
      throw InputError("generator dimension mismatch");
    cols.push_back(group.reduce(g.coords).coords);
  }
  for (auto& r : relation_columns(group)) cols.push_back(std::move(r));
  Subgroup s;
  s.group = group;
  s.basis = hnf_columns(IntMat::from_columns(group.dim(), cols));
  return s;
}

Subgroup trivial_subgroup(const GroupSpec& group) {
  return subgroup_generated(group, {});
}

Subgroup full_subgroup(const GroupSpec& group) {
  std::vector<GroupElement> gens;
  for (int i = 0; i < group.dim(); ++i) {
    std::vector<Int> c(group.dim());
    c[i] = 1;
    gens.push_back(group.reduce(std::move(c)));
  }
  return subgroup_generated(group, gens);
}

bool member(const Subgroup& sub, const GroupElement& x) {
  if (static_cast<int>(x.coords.size()) != sub.group.dim())
    throw InputError("element dimension mismatch in membership test");
  return in_column_lattice(sub.basis, sub.group.reduce(x.coords).coords);
}

QuotientStructure quotient(const GroupSpec& group, const Subgroup& sub) {
  if (sub.group != group)
    throw InputError("subgroup does not live in the given group");
  QuotientStructure q;
  q.group = group;
  q.sub = sub;
  SmithForm s = smith_form(sub.basis);
  q.u = std::move(s.u);
  q.snf_diag = std::move(s.diag);
  q.snf_rank = s.rank;
  q.free_rank = group.dim() - s.rank;
  for (const Int& d : q.snf_diag)
    if (d >= 2) q.invariant_factors.push_back(d);
  return q;
}

GroupSpec QuotientStructure::quotient_spec() const {
  return GroupSpec::make(free_rank, invariant_factors);
}

GroupElement QuotientStructure::project(const GroupElement& x) const {
  if (static_cast<int>(x.coords.size()) != group.dim())
    throw InputError("element dimension mismatch in projection");
  std::vector<Int> y = u.apply(group.reduce(x.coords).coords);
  std::vector<Int> out;
  out.reserve(quotient_spec().dim());
  for (int i = snf_rank; i < group.dim(); ++i) out.push_back(y[i]);
  for (int i = 0; i < snf_rank; ++i)
    if (snf_diag[i] >= 2) out.push_back(mod_floor(y[i], snf_diag[i]));
  return quotient_spec().reduce(std::move(out));
}

std::optional<Int> QuotientStructure::order() const {
  if (!is_finite()) return std::nullopt;
  Int n = 1;
  for (const Int& d : invariant_factors) n *= d;
  return n;
}

}  // namespace walkbound
