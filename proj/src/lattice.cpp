#include "walkbound/lattice.hpp"

#include <algorithm>
#include <utility>

namespace walkbound {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_columns(int rows,
                            const std::vector<std::vector<Int>>& cols) {
  IntMat m(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols; ++j) {
    if (static_cast<int>(cols[j].size()) != rows)
      throw InputError("column length mismatch");
    for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

std::vector<Int> IntMat::column(int j) const {
  std::vector<Int> c(rows);
  for (int i = 0; i < rows; ++i) c[i] = at(i, j);
  return c;
}

std::vector<Int> IntMat::apply(const std::vector<Int>& x) const {
  std::vector<Int> y(rows);
  for (int i = 0; i < rows; ++i) {
    Int acc = 0;
    for (int j = 0; j < cols; ++j) acc += at(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

namespace {

void swap_columns(IntMat& m, int j0, int j1) {
  if (j0 == j1) return;
  for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, j0), m.at(i, j1));
}

void negate_column(IntMat& m, int j) {
  for (int i = 0; i < m.rows; ++i) m.at(i, j) = -m.at(i, j);
}

// col_j -= q * col_r
void submul_column(IntMat& m, int j, const Int& q, int r) {
  if (q == 0) return;
  for (int i = 0; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, r);
}

// Unimodular combination putting gcd(m(i,r), m(i,j)) at column r and zero at
// column j, in row i.
void gcd_combine_columns(IntMat& m, int i, int r, int j) {
  Int a = m.at(i, r), b = m.at(i, j);
  Int g, p, q;
  gcdext(a, b, g, p, q);
  Int ar = a / g, br = b / g;
  for (int k = 0; k < m.rows; ++k) {
    Int vr = m.at(k, r), vj = m.at(k, j);
    m.at(k, r) = p * vr + q * vj;
    m.at(k, j) = ar * vj - br * vr;
  }
}

void swap_rows(IntMat& m, int i0, int i1) {
  if (i0 == i1) return;
  for (int j = 0; j < m.cols; ++j) std::swap(m.at(i0, j), m.at(i1, j));
}

void negate_row(IntMat& m, int i) {
  for (int j = 0; j < m.cols; ++j) m.at(i, j) = -m.at(i, j);
}

// row_i -= q * row_r
void submul_row(IntMat& m, int i, const Int& q, int r) {
  if (q == 0) return;
  for (int j = 0; j < m.cols; ++j) m.at(i, j) -= q * m.at(r, j);
}

void gcd_combine_rows(IntMat& m, IntMat& u, int j, int r, int i) {
  Int a = m.at(r, j), b = m.at(i, j);
  Int g, p, q;
  gcdext(a, b, g, p, q);
  Int ar = a / g, br = b / g;
  for (int k = 0; k < m.cols; ++k) {
    Int vr = m.at(r, k), vi = m.at(i, k);
    m.at(r, k) = p * vr + q * vi;
    m.at(i, k) = ar * vi - br * vr;
  }
  for (int k = 0; k < u.cols; ++k) {
    Int vr = u.at(r, k), vi = u.at(i, k);
    u.at(r, k) = p * vr + q * vi;
    u.at(i, k) = ar * vi - br * vr;
  }
}

}  // namespace

IntMat hnf_columns(const IntMat& gens) {
  IntMat w = gens;
  int r = 0;  // next basis slot
  for (int i = 0; i < w.rows && r < w.cols; ++i) {
    int j0 = -1;
    for (int j = r; j < w.cols; ++j)
      if (w.at(i, j) != 0) {
        j0 = j;
        break;
      }
    if (j0 < 0) continue;
    swap_columns(w, r, j0);
    for (int j = r + 1; j < w.cols; ++j)
      if (w.at(i, j) != 0) gcd_combine_columns(w, i, r, j);
    if (w.at(i, r) < 0) negate_column(w, r);
    for (int j = 0; j < r; ++j)
      submul_column(w, j, floor_div(w.at(i, j), w.at(i, r)), r);
    ++r;
  }
  IntMat h(w.rows, r);
  for (int i = 0; i < w.rows; ++i)
    for (int j = 0; j < r; ++j) h.at(i, j) = w.at(i, j);
  return h;
}

std::optional<std::vector<Int>> solve_in_lattice(const IntMat& hnf,
                                                 const std::vector<Int>& x) {
  if (static_cast<int>(x.size()) != hnf.rows)
    throw InputError("vector dimension does not match lattice");
  std::vector<Int> rem = x;
  std::vector<Int> coeff(hnf.cols);
  for (int j = 0; j < hnf.cols; ++j) {
    int p = 0;
    while (p < hnf.rows && hnf.at(p, j) == 0) ++p;
    // HNF columns are nonzero with strictly increasing pivot rows.
    if (p == hnf.rows) throw InputError("zero column in lattice basis");
    const Int& piv = hnf.at(p, j);
    if (mod_floor(rem[p], piv) != 0) return std::nullopt;
    Int q = rem[p] / piv;
    if (q != 0)
      for (int i = p; i < hnf.rows; ++i) rem[i] -= q * hnf.at(i, j);
    coeff[j] = q;
  }
  for (const Int& v : rem)
    if (v != 0) return std::nullopt;
  return coeff;
}

bool in_column_lattice(const IntMat& hnf, const std::vector<Int>& x) {
  return solve_in_lattice(hnf, x).has_value();
}

SmithForm smith_form(const IntMat& mat) {
  IntMat d = mat;
  IntMat u = IntMat::identity(mat.rows);
  int limit = std::min(mat.rows, mat.cols);
  int t = 0;
  for (; t < limit; ++t) {
    // Choose a nonzero pivot of minimal magnitude in the trailing block.
    int pi = -1, pj = -1;
    for (int i = t; i < d.rows; ++i)
      for (int j = t; j < d.cols; ++j) {
        if (d.at(i, j) == 0) continue;
        if (pi < 0 || cmpabs(d.at(i, j).get_mpz_t(),
                             d.at(pi, pj).get_mpz_t()) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    swap_rows(d, t, pi);
    swap_rows(u, t, pi);
    swap_columns(d, t, pj);
    while (true) {
      for (int i = t + 1; i < d.rows; ++i)
        if (d.at(i, t) != 0) gcd_combine_rows(d, u, t, t, i);
      bool row_clear = true;
      for (int j = t + 1; j < d.cols; ++j)
        if (d.at(t, j) != 0) {
          gcd_combine_columns(d, t, t, j);
          row_clear = false;
        }
      if (row_clear) break;  // column t untouched by the column pass
    }
  }
  int rank = t;
  for (int i = 0; i < rank; ++i)
    if (d.at(i, i) < 0) {
      negate_row(d, i);
      negate_row(u, i);
    }
  // Enforce the divisibility chain with the 2x2 gcd/lcm exchange.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s + 1 < rank; ++s) {
      Int a = d.at(s, s), b = d.at(s + 1, s + 1);
      if (mod_floor(b, a) == 0) continue;
      changed = true;
      submul_row(d, s, Int(-1), s + 1);  // row_s += row_{s+1}
      submul_row(u, s, Int(-1), s + 1);
      gcd_combine_columns(d, s, s, s + 1);
      Int q = d.at(s + 1, s) / d.at(s, s);
      submul_row(d, s + 1, q, s);
      submul_row(u, s + 1, q, s);
    }
  }
  SmithForm out;
  out.u = std::move(u);
  out.rank = rank;
  out.diag.resize(rank);
  for (int i = 0; i < rank; ++i) out.diag[i] = d.at(i, i);
  return out;
}

IntMat kernel_columns(const IntMat& mat) {
  IntMat w = mat;
  IntMat v = IntMat::identity(mat.cols);
  int r = 0;
  for (int i = 0; i < w.rows && r < w.cols; ++i) {
    int j0 = -1;
    for (int j = r; j < w.cols; ++j)
      if (w.at(i, j) != 0) {
        j0 = j;
        break;
      }
    if (j0 < 0) continue;
    swap_columns(w, r, j0);
    swap_columns(v, r, j0);
    for (int j = r + 1; j < w.cols; ++j)
      if (w.at(i, j) != 0) {
        Int a = w.at(i, r), b = w.at(i, j);
        Int g, p, q;
        gcdext(a, b, g, p, q);
        Int ar = a / g, br = b / g;
        for (int k = 0; k < w.rows; ++k) {
          Int vr = w.at(k, r), vj = w.at(k, j);
          w.at(k, r) = p * vr + q * vj;
          w.at(k, j) = ar * vj - br * vr;
        }
        for (int k = 0; k < v.rows; ++k) {
          Int vr = v.at(k, r), vj = v.at(k, j);
          v.at(k, r) = p * vr + q * vj;
          v.at(k, j) = ar * vj - br * vr;
        }
      }
    ++r;
  }
  IntMat ker(mat.cols, mat.cols - r);
  for (int i = 0; i < mat.cols; ++i)
    for (int j = r; j < mat.cols; ++j) ker.at(i, j - r) = v.at(i, j);
  return ker;
}

Int abs_det(const IntMat& mat) {
  if (mat.rows != mat.cols) throw InputError("abs_det requires a square matrix");
  if (mat.rows == 0) return 1;
  SmithForm s = smith_form(mat);
  if (s.rank < mat.rows) return 0;
  Int det = 1;
  for (const Int& d : s.diag) det *= d;
  return det;
}

}  // namespace walkbound
