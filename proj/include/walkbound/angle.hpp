#pragma once

#include <map>
#include <string>

#include "walkbound/ints.hpp"

namespace walkbound {

// Point of the circle R/Z written as rational_part + sum c_s * alpha_s, where
// each named symbol alpha_s stands for an irrational number. The standing
// assumption is that 1 and the declared symbols are rationally independent,
// which makes integrality (and hence every character test) exactly decidable:
// a combination is an integer iff the rational part is one and every symbol
// coefficient vanishes.
struct Angle {
  Rat rational_part;                    // kept in [0,1)
  std::map<std::string, Rat> symbols;   // zero coefficients dropped

  static Angle of_rational(const Rat& q);
  static Angle of_symbol(const std::string& name, const Rat& coeff = Rat(1));

  Angle normalized() const;
  Angle plus(const Angle& o) const;
  Angle scaled(const Int& k) const;
  bool is_integral() const;

  bool operator==(const Angle&) const = default;

  std::string to_string() const;
};

}  // namespace walkbound
