#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace walkbound {

// Exact arithmetic everywhere: Int is an arbitrary-precision integer, Rat an
// exact rational. Floating point only appears in the spectral/sampling oracles.
using Int = mpz_class;
using Rat = mpq_class;

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedOracle : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Nonnegative remainder for positive modulus.
inline Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// g = p*a + q*b with g >= 0.
inline void gcdext(const Int& a, const Int& b, Int& g, Int& p, Int& q) {
  mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
}

// Parses "a/b" or "a"; canonicalizes. Throws InputError on garbage or zero
// denominator.
Rat parse_rational(const std::string& text);

std::string rational_to_string(const Rat& q);

// Fractional part in [0,1).
Rat frac_mod_one(const Rat& q);

// Checked narrowing; throws ResourceError when out of range (values this large
// indicate inputs far beyond desk scale).
std::int64_t to_int64(const Int& v);

}  // namespace walkbound
