#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "walkbound/rokhlin.hpp"

namespace walkbound {

// Mixed-radix indexing of a finite target Y = prod Z/c_j and of its character
// group (same shape). Character chi_a , evaluated at y, has phase
// sum_j a_j y_j / c_j (mod 1), held exactly as a rational.
struct FiniteTarget {
  GroupSpec spec;
  size_t size = 1;
  std::vector<long> radix;
  std::vector<size_t> stride;

  static FiniteTarget make(const GroupSpec& finite_spec,
                           size_t size_cap = size_t(1) << 16);

  size_t index_of(const GroupElement& y) const;
  GroupElement element_at(size_t idx) const;
  size_t add(size_t a, size_t b) const;
  size_t negate(size_t a) const;
  Rat character_phase(size_t chi, size_t y) const;  // in [0,1)
};

struct CharacterEigenvalue {
  size_t index = 0;  // mixed-radix character index; 0 is trivial
  std::complex<double> value;
  bool unit_modulus_exact = false;  // |lambda| = 1, decided algebraically
  bool equals_one_exact = false;    // lambda = 1, decided algebraically
};

struct SpectrumReport {
  std::vector<CharacterEigenvalue> eigenvalues;
  double max_nontrivial_modulus = 0.0;
  double gap = 1.0;  // 1 - max nontrivial |lambda|
  bool has_nontrivial_unit = false;
  bool has_nontrivial_one = false;
  std::vector<size_t> unit_character_indices;  // nontrivial unit characters
};

// Character eigenvalues lambda_chi = sum_s p(s) chi(phi(s)) of the Y-marginal
// Markov operator. Finite targets only; unit modulus and equality to 1 are
// decided by exact phase comparison (chi . phi constant / trivial on supp p),
// never by floating-point magnitude.
SpectrumReport character_spectrum(const RokhlinSystem& sys);

// Exact pushforward of p^{n*} to Y through phi, indexed by FiniteTarget.
std::vector<Rat> pushforward_power(const RokhlinSystem& sys, long n);

// TV(p^{n*}, uniform on the coset n*s_1 + H_t) for n = 1..n_max, computed from
// exact convolutions and rounded to double at the end. Finite groups only.
std::vector<double> mixing_profile(const JumpMeasure& p, long n_max);

// n-fold application of the Y-marginal transfer operator
//   (P h)(y) = sum_s p(s) h(y - phi(s)).
// Characters are eigenfunctions with P chi = conj(lambda_chi) * chi (the
// conjugate appears because P shifts by -phi). Parallel over Y; results are
// bit-identical to transfer_iterate_reference for every thread count.
std::vector<std::complex<double>> transfer_iterate(
    const RokhlinSystem& sys, std::vector<std::complex<double>> h, long n);

// Serial reference implementation.
std::vector<std::complex<double>> transfer_iterate_reference(
    const RokhlinSystem& sys, std::vector<std::complex<double>> h, long n);

}  // namespace walkbound
