#pragma once

#include <optional>
#include <vector>

#include "walkbound/ints.hpp"

namespace walkbound {

// Dense integer matrix, row-major. Sizes stay tiny here (group ranks), so all
// normal-form routines use the textbook quadratic algorithms with exact
// arithmetic.
struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }

  static IntMat identity(int n);
  static IntMat from_columns(int rows, const std::vector<std::vector<Int>>& cols);

  std::vector<Int> column(int j) const;
  std::vector<Int> apply(const std::vector<Int>& x) const;  // matrix * vector

  bool operator==(const IntMat&) const = default;
};

// Canonical basis of the column lattice of `gens`: column-style Hermite normal
// form. Pivot rows strictly increase left to right, pivots are positive,
// entries above a pivot are zero and entries to its left in the pivot row lie
// in [0, pivot). Two generator sets spanning the same lattice yield identical
// output.
IntMat hnf_columns(const IntMat& gens);

// Coefficients expressing x in the columns of an HNF basis, or nullopt when x
// is outside the lattice.
std::optional<std::vector<Int>> solve_in_lattice(const IntMat& hnf,
                                                 const std::vector<Int>& x);

bool in_column_lattice(const IntMat& hnf, const std::vector<Int>& x);

// Smith normal form data for an n x m integer matrix A: a unimodular U with
// U*A*V diagonal (V not retained). diag holds the positive invariant factors
// d_1 | d_2 | ... | d_rank.
struct SmithForm {
  IntMat u;
  std::vector<Int> diag;
  int rank = 0;
};

SmithForm smith_form(const IntMat& mat);

// Basis (as columns) of the integer kernel {x : A x = 0}.
IntMat kernel_columns(const IntMat& mat);

// |det| of a square matrix via its Smith form.
Int abs_det(const IntMat& mat);

}  // namespace walkbound
