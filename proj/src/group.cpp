#include "walkbound/group.hpp"

#include <sstream>

namespace walkbound {

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ",";
    os << coords[i].get_str();
  }
  os << ")";
  return os.str();
}

GroupSpec GroupSpec::make(int free_rank, std::vector<Int> torsion) {
  if (free_rank < 0) throw InputError("free_rank must be nonnegative");
  for (const Int& m : torsion)
    if (m < 2) throw InputError("torsion moduli must be >= 2");
  GroupSpec g;
  g.free_rank = free_rank;
  g.torsion = std::move(torsion);
  return g;
}

Int GroupSpec::order() const {
  if (!is_finite()) throw InputError("order() requires a finite group");
  Int n = 1;
  for (const Int& m : torsion) n *= m;
  return n;
}

GroupElement GroupSpec::zero() const {
  GroupElement e;
  e.coords.resize(dim());
  return e;
}

GroupElement GroupSpec::reduce(std::vector<Int> coords) const {
  if (static_cast<int>(coords.size()) != dim())
    throw InputError("element dimension mismatch: expected " +
                     std::to_string(dim()) + " coordinates, got " +
                     std::to_string(coords.size()));
  for (size_t i = 0; i < torsion.size(); ++i) {
    Int& c = coords[free_rank + i];
    c = mod_floor(c, torsion[i]);
  }
  GroupElement e;
  e.coords = std::move(coords);
  return e;
}

GroupElement GroupSpec::element(std::vector<Int> coords) const {
  return reduce(std::move(coords));
}

GroupElement GroupSpec::add(const GroupElement& a, const GroupElement& b) const {
  std::vector<Int> c(dim());
  for (int i = 0; i < dim(); ++i) c[i] = a.coords[i] + b.coords[i];
  return reduce(std::move(c));
}

GroupElement GroupSpec::sub(const GroupElement& a, const GroupElement& b) const {
  std::vector<Int> c(dim());
  for (int i = 0; i < dim(); ++i) c[i] = a.coords[i] - b.coords[i];
  return reduce(std::move(c));
}

GroupElement GroupSpec::negate(const GroupElement& a) const {
  std::vector<Int> c(dim());
  for (int i = 0; i < dim(); ++i) c[i] = -a.coords[i];
  return reduce(std::move(c));
}

GroupElement GroupSpec::scale(const Int& k, const GroupElement& a) const {
  std::vector<Int> c(dim());
  for (int i = 0; i < dim(); ++i) c[i] = k * a.coords[i];
  return reduce(std::move(c));
}

bool GroupSpec::contains(const GroupElement& a) const {
  if (static_cast<int>(a.coords.size()) != dim()) return false;
  for (size_t i = 0; i < torsion.size(); ++i) {
    const Int& c = a.coords[free_rank + i];
    if (c < 0 || c >= torsion[i]) return false;
  }
  return true;
}

std::string GroupSpec::describe() const {
  if (dim() == 0) return "trivial";
  std::ostringstream os;
  if (free_rank == 1)
    os << "Z";
  else if (free_rank > 1)
    os << "Z^" << free_rank;
  for (size_t i = 0; i < torsion.size(); ++i) {
    if (free_rank > 0 || i > 0) os << " x ";
    os << "Z/" << torsion[i].get_str();
  }
  return os.str();
}

std::vector<GroupElement> enumerate_elements(const GroupSpec& g,
                                             const Int& max_order) {
  if (!g.is_finite())
    throw InputError("cannot enumerate an infinite group");
  Int n = g.order();
  if (n > max_order)
    throw ResourceError("group order " + n.get_str() +
                        " exceeds enumeration cap");
  std::vector<GroupElement> out;
  out.reserve(static_cast<size_t>(n.get_ui()));
  GroupElement cur = g.zero();
  while (true) {
    out.push_back(cur);
    int i = g.dim() - 1;
    for (; i >= 0; --i) {
      cur.coords[i] += 1;
      if (cur.coords[i] < g.torsion[i]) break;
      cur.coords[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

}  // namespace walkbound
