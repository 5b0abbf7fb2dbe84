#include "walkbound/action.hpp"

namespace walkbound {

TargetAction TargetAction::make(GroupSpec acting_group, int torus_dim,
                                GroupSpec finite_part,
                                std::vector<ActionImage> images) {
  if (torus_dim < 0) throw InputError("torus dimension must be nonnegative");
  if (finite_part.free_rank != 0)
    throw InputError("finite part of a target must have free rank 0");
  if (static_cast<int>(images.size()) != acting_group.dim())
    throw InputError("need one image per generator of the acting group");
  TargetAction a;
  a.acting_group = std::move(acting_group);
  a.torus_dim = torus_dim;
  a.finite_part = std::move(finite_part);
  a.images = std::move(images);
  for (auto& img : a.images) {
    if (static_cast<int>(img.angles.size()) != torus_dim)
      throw InputError("angle list length must equal the torus dimension");
    for (auto& ang : img.angles) ang = ang.normalized();
    img.finite = a.finite_part.reduce(img.finite.coords);
  }
  // Torsion generators must map to elements killed by their order.
  for (size_t i = 0; i < a.acting_group.torsion.size(); ++i) {
    const Int& m = a.acting_group.torsion[i];
    const ActionImage& img = a.images[a.acting_group.free_rank + i];
    for (const Angle& ang : img.angles)
      if (!ang.scaled(m).is_integral())
        throw InputError("torus image of a torsion generator violates its "
                         "order-" + m.get_str() + " relation");
    if (a.finite_part.scale(m, img.finite) != a.finite_part.zero())
      throw InputError("finite image of a torsion generator violates its "
                       "order-" + m.get_str() + " relation");
  }
  return a;
}

TargetAction TargetAction::trivial(GroupSpec acting_group) {
  std::vector<ActionImage> images(acting_group.dim());
  GroupSpec point = GroupSpec::make(0, {});
  for (auto& img : images) img.finite = point.zero();
  return make(std::move(acting_group), 0, point, std::move(images));
}

bool TargetAction::target_is_trivial() const {
  return torus_dim == 0 && finite_part.dim() == 0;
}

Int TargetAction::target_order() const {
  if (!target_is_finite())
    throw InputError("target has a torus factor; not finite");
  return finite_part.order();
}

ActionImage TargetAction::apply_raw(const std::vector<Int>& coords) const {
  if (static_cast<int>(coords.size()) != acting_group.dim())
    throw InputError("coordinate dimension mismatch in action evaluation");
  ActionImage out;
  out.angles.assign(torus_dim, Angle{});
  std::vector<Int> fin(finite_part.dim());
  for (int i = 0; i < acting_group.dim(); ++i) {
    if (coords[i] == 0) continue;
    for (int j = 0; j < torus_dim; ++j)
      out.angles[j] = out.angles[j].plus(images[i].angles[j].scaled(coords[i]));
    for (int l = 0; l < finite_part.dim(); ++l)
      fin[l] += coords[i] * images[i].finite.coords[l];
  }
  out.finite = finite_part.reduce(std::move(fin));
  return out;
}

ActionImage TargetAction::apply(const GroupElement& g) const {
  return apply_raw(acting_group.reduce(g.coords).coords);
}

std::set<std::string> TargetAction::symbols() const {
  std::set<std::string> names;
  for (const ActionImage& img : images)
    for (const Angle& ang : img.angles)
      for (const auto& [name, c] : ang.symbols)
        if (c != 0) names.insert(name);
  return names;
}

}  // namespace walkbound
