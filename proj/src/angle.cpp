#include "walkbound/angle.hpp"

#include <sstream>

namespace walkbound {

Angle Angle::of_rational(const Rat& q) {
  Angle a;
  a.rational_part = frac_mod_one(q);
  return a;
}

Angle Angle::of_symbol(const std::string& name, const Rat& coeff) {
  Angle a;
  if (name.empty()) throw InputError("empty symbol name");
  if (coeff != 0) a.symbols[name] = coeff;
  return a;
}

Angle Angle::normalized() const {
  Angle a;
  a.rational_part = frac_mod_one(rational_part);
  for (const auto& [name, c] : symbols)
    if (c != 0) a.symbols[name] = c;
  return a;
}

Angle Angle::plus(const Angle& o) const {
  Angle a;
  a.rational_part = rational_part + o.rational_part;
  a.symbols = symbols;
  for (const auto& [name, c] : o.symbols) a.symbols[name] += c;
  return a.normalized();
}

Angle Angle::scaled(const Int& k) const {
  Angle a;
  Rat kk(k);
  a.rational_part = kk * rational_part;
  for (const auto& [name, c] : symbols) a.symbols[name] = kk * c;
  return a.normalized();
}

bool Angle::is_integral() const {
  Angle n = normalized();
  return n.rational_part == 0 && n.symbols.empty();
}

std::string Angle::to_string() const {
  std::ostringstream os;
  os << rational_to_string(rational_part);
  for (const auto& [name, c] : symbols)
    os << " + " << rational_to_string(c) << "*" << name;
  return os.str();
}

}  // namespace walkbound
