#include "walkbound/ints.hpp"

namespace walkbound {

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw InputError("empty rational literal");
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw InputError("malformed rational literal: '" + text + "'");
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw InputError("zero denominator in rational literal: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rat& q) { return q.get_str(); }

Rat frac_mod_one(const Rat& q) {
  Int fl = floor_div(q.get_num(), q.get_den());
  Rat r = q - Rat(fl);
  return r;
}

std::int64_t to_int64(const Int& v) {
  if (!v.fits_slong_p())
    throw ResourceError("integer exceeds 64-bit range: " + v.get_str());
  return static_cast<std::int64_t>(v.get_si());
}

}  // namespace walkbound
