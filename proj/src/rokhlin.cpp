#include "walkbound/rokhlin.hpp"

#include <stdexcept>

namespace walkbound {

RokhlinSystem RokhlinSystem::make(JumpMeasure p, TargetAction action) {
  if (p.group != action.acting_group)
    throw InputError("measure and action act for different groups");
  RokhlinSystem s;
  s.p = std::move(p);
  s.action = std::move(action);
  return s;
}

bool image_closure_is_full(const TargetAction& action, const Subgroup& sub) {
  if (sub.group != action.acting_group)
    throw InputError("subgroup does not live in the acting group");
  const int k = action.torus_dim;
  const int fdim = action.finite_part.dim();
  const int ngen = sub.basis.cols;
  if (k == 0 && fdim == 0) return true;  // one-point target

  // Images of the subgroup generators (the HNF basis columns; torsion relation
  // columns evaluate to the identity and contribute vacuous constraints).
  std::vector<ActionImage> imgs;
  imgs.reserve(ngen);
  for (int j = 0; j < ngen; ++j)
    imgs.push_back(action.apply_raw(sub.basis.column(j)));

  std::vector<std::string> syms(action.symbols().begin(),
                                action.symbols().end());

  // Variables: n_1..n_k (torus character), a_1..a_fdim (finite character),
  // one integer slack per generator congruence.
  const int nvars = k + fdim + ngen;
  std::vector<std::vector<Int>> rows;

  // Irrational parts must cancel exactly: for each generator and symbol,
  // sum_j n_j * coeff = 0.
  for (int g = 0; g < ngen; ++g)
    for (const std::string& s : syms) {
      std::vector<Rat> coeff(k);
      bool any = false;
      for (int j = 0; j < k; ++j) {
        auto it = imgs[g].angles[j].symbols.find(s);
        if (it != imgs[g].angles[j].symbols.end() && it->second != 0) {
          coeff[j] = it->second;
          any = true;
        }
      }
      if (!any) continue;
      Int scale = 1;
      for (const Rat& c : coeff) scale = lcm(scale, c.get_den());
      std::vector<Int> row(nvars);
      for (int j = 0; j < k; ++j) row[j] = Int(coeff[j] * Rat(scale));
      rows.push_back(std::move(row));
    }

  // Rational congruence per generator:
  //   sum_j n_j * rat_j + sum_l a_l * f_l / c_l  is an integer.
  for (int g = 0; g < ngen; ++g) {
    Int scale = 1;
    for (int j = 0; j < k; ++j)
      scale = lcm(scale, imgs[g].angles[j].rational_part.get_den());
    for (int l = 0; l < fdim; ++l)
      scale = lcm(scale, action.finite_part.torsion[l]);
    std::vector<Int> row(nvars);
    for (int j = 0; j < k; ++j)
      row[j] = Int(imgs[g].angles[j].rational_part * Rat(scale));
    for (int l = 0; l < fdim; ++l)
      row[k + l] = scale / action.finite_part.torsion[l] *
                   imgs[g].finite.coords[l];
    row[k + fdim + g] = scale;
    rows.push_back(std::move(row));
  }

  IntMat constraints(static_cast<int>(rows.size()), nvars);
  for (int i = 0; i < constraints.rows; ++i)
    for (int j = 0; j < nvars; ++j) constraints.at(i, j) = rows[i][j];

  // The characters annihilating phi(sub) form the projection of this kernel
  // onto the (n, a) block; the closure is everything iff only the trivial
  // character survives, i.e. every kernel vector has zero n-part and a-part
  // divisible by the finite orders.
  IntMat ker = kernel_columns(constraints);
  for (int c = 0; c < ker.cols; ++c) {
    for (int j = 0; j < k; ++j)
      if (ker.at(j, c) != 0) return false;
    for (int l = 0; l < fdim; ++l)
      if (mod_floor(ker.at(k + l, c), action.finite_part.torsion[l]) != 0)
        return false;
  }
  return true;
}

bool decide_ergodic(const RokhlinSystem& sys) {
  return image_closure_is_full(sys.action, poisson_subgroup(sys.p));
}

bool decide_exact(const RokhlinSystem& sys) {
  return image_closure_is_full(sys.action, tail_subgroup(sys.p));
}

MeilijsonResult meilijson_check(const JumpMeasure& p,
                                const TargetAction& action) {
  if (p.group.free_rank != 1 || !p.group.torsion.empty())
    throw InputError("the S^d criterion applies to walks on Z only");
  Subgroup h_tail = tail_subgroup(p);
  MeilijsonResult r;
  if (h_tail.rank() == 0) {
    r.d = 0;
    r.degenerate = true;
  } else {
    r.d = h_tail.basis.at(0, 0);
  }
  r.s_d_ergodic = image_closure_is_full(action, h_tail);
  r.exact = decide_exact(RokhlinSystem::make(p, action));
  if (r.exact != r.s_d_ergodic)
    throw std::logic_error("S^d criterion diverged from the density rule");
  return r;
}

DichotomyResult reducibility_dichotomy(const JumpMeasure& p) {
  Subgroup h_tail = tail_subgroup(p);
  DichotomyResult r{DichotomyBranch::kExactForMildlyMixing, {}, {}};
  if (!h_tail.is_finite()) return r;
  r.branch = DichotomyBranch::kCompactlyReducible;
  r.shift = p.support[0];
  for (const GroupElement& s : p.support)
    if (!member(h_tail, p.group.sub(s, *r.shift)))
      throw std::logic_error("dichotomy witness failed membership check");
  r.compact_part = std::move(h_tail);
  return r;
}

bool is_weakly_mixing_quotient(const QuotientStructure& q) {
  return q.is_trivial();
}

}  // namespace walkbound
