#pragma once

// Exact arithmetic helpers: GMP-backed rationals and integers, dense
// vectors/matrices over them, row reduction, and integer lattice
// normal forms (Hermite, Smith, integer kernels).

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rgc/errors.hpp"

namespace rgc {

using Q = mpq_class;
using Z = mpz_class;
using QVec = std::vector<Q>;
using ZVec = std::vector<Z>;
using QMat = std::vector<QVec>;
using ZMat = std::vector<ZVec>;

inline std::string to_string(const Q& q) {
  Q c = q;
  c.canonicalize();
  return c.get_str();
}

inline std::string to_string(const Z& z) { return z.get_str(); }

/// Largest integer not exceeding q.
inline Z floor_div(const Q& q) {
  Z r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline QVec to_qvec(const ZVec& v) { return QVec(v.begin(), v.end()); }

template <class T>
inline T dot(const std::vector<T>& a, const std::vector<T>& b) {
  T s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const ZVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Z& x) { return x == 0; });
}

inline bool is_zero(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Q& x) { return x == 0; });
}

/// Divides out the gcd of the entries. The zero vector is returned unchanged.
inline ZVec make_primitive(ZVec v) {
  Z g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

/// Smallest positive integer multiple of a rational vector, made primitive.
inline ZVec primitive_integer(const QVec& v) {
  Z l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  ZVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Q s = v[i] * l;
    out[i] = s.get_num();
  }
  return make_primitive(std::move(out));
}

inline QMat transpose(const QMat& m, std::size_t cols) {
  QMat t(cols, QVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

inline QVec mat_vec(const QMat& m, const QVec& v) {
  QVec out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
  return out;
}

/// v^T M (row vector times matrix); M has v.size() rows.
inline QVec vec_mat(const QVec& v, const QMat& m, std::size_t cols) {
  QVec out(cols, Q(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < cols; ++j) out[j] += v[i] * m[i][j];
  }
  return out;
}

/// In-place reduced row echelon form. Returns pivot columns.
inline std::vector<std::size_t> rref(QMat& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    Q inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Q f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(QMat m, std::size_t cols) { return rref(m, cols).size(); }

inline std::size_t rank(const ZMat& m, std::size_t cols) {
  QMat q;
  q.reserve(m.size());
  for (const auto& r : m) q.push_back(to_qvec(r));
  return rank(std::move(q), cols);
}

/// Basis of { x : M x = 0 }.
inline QMat nullspace(QMat m, std::size_t cols) {
  auto piv = rref(m, cols);
  std::vector<bool> is_piv(cols, false);
  for (auto p : piv) is_piv[p] = true;
  QMat basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    QVec v(cols, Q(0));
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Row basis of the span of the given vectors (reduced echelon rows).
inline QMat row_space(QMat m, std::size_t cols) {
  auto piv = rref(m, cols);
  m.resize(piv.size());
  return m;
}

/// Solves sum_i c_i rows[i] = target. Returns nullopt when target is not in
/// the span; when rows are dependent one particular solution is returned.
inline std::optional<QVec> solve_combination(const QMat& rows, const QVec& target) {
  const std::size_t n = rows.size();
  const std::size_t d = target.size();
  // Augmented system: columns are the rows, d equations.
  QMat a(d, QVec(n + 1));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = rows[j][i];
    a[i][n] = target[i];
  }
  auto piv = rref(a, n + 1);
  if (!piv.empty() && piv.back() == n) return std::nullopt;
  QVec c(n, Q(0));
  for (std::size_t r = 0; r < piv.size(); ++r) c[piv[r]] = a[r][n];
  return c;
}

inline std::optional<QMat> inverse(const QMat& m) {
  const std::size_t n = m.size();
  QMat a(n, QVec(2 * n, Q(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  auto piv = rref(a, 2 * n);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  QMat inv(n, QVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

inline Q determinant(QMat m) {
  const std::size_t n = m.size();
  Q det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && m[sel][c] == 0) ++sel;
    if (sel == n) return 0;
    if (sel != c) {
      std::swap(m[sel], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Q f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

// ---------------------------------------------------------------------------
// Integer lattices

/// Row-style Hermite normal form: returns a basis (rows) of the lattice
/// spanned by the given integer rows, in echelon form with positive pivots.
inline ZMat hermite_basis(ZMat rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    // Euclid on column c among rows r.. until a single nonzero remains.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Z q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        for (std::size_t k = c; k < cols; ++k) rows[i][k] -= q * rows[r][k];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r < rows.size() && rows[r][c] != 0) {
      if (rows[r][c] < 0)
        for (auto& x : rows[r]) x = -x;
      for (std::size_t i = 0; i < r; ++i) {
        Z q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        if (q != 0)
          for (std::size_t k = c; k < cols; ++k) rows[i][k] -= q * rows[r][k];
      }
      ++r;
    }
  }
  rows.resize(r);
  return rows;
}

/// Basis of the integer solutions { x in Z^cols : M x = 0 } (saturated).
inline ZMat integer_kernel(const ZMat& m, std::size_t cols) {
  // Column operations on M tracked in a unimodular U (cols x cols):
  // M U = [H | 0]; the columns of U matching zero columns span the kernel.
  ZMat a = m;
  ZMat u(cols, ZVec(cols, Z(0)));
  for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;
  auto col_op = [&](std::size_t dst, std::size_t src, const Z& f) {
    for (auto& row : a) row[dst] -= f * row[src];
    for (auto& row : u) row[dst] -= f * row[src];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (auto& row : a) std::swap(row[x], row[y]);
    for (auto& row : u) std::swap(row[x], row[y]);
  };
  std::size_t c = 0;
  for (std::size_t r = 0; r < a.size() && c < cols; ++r) {
    while (true) {
      std::size_t best = cols;
      for (std::size_t j = c; j < cols; ++j) {
        if (a[r][j] == 0) continue;
        if (best == cols || abs(a[r][j]) < abs(a[r][best])) best = j;
      }
      if (best == cols) break;
      col_swap(c, best);
      bool done = true;
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (a[r][j] == 0) continue;
        Z q;
        mpz_fdiv_q(q.get_mpz_t(), a[r][j].get_mpz_t(), a[r][c].get_mpz_t());
        col_op(j, c, q);
        if (a[r][j] != 0) done = false;
      }
      if (done) {
        ++c;
        break;
      }
    }
  }
  ZMat kernel;
  for (std::size_t j = c; j < cols; ++j) {
    ZVec v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = u[i][j];
    kernel.push_back(std::move(v));
  }
  return hermite_basis(std::move(kernel), cols);
}

/// Smith normal form with transforms: U * M * V = D (diagonal, d_i | d_{i+1}).
struct SmithForm {
  ZMat u, v;
  std::vector<Z> diag;  // length min(rows, cols)
};

inline SmithForm smith_form(const ZMat& m, std::size_t cols) {
  const std::size_t rows = m.size();
  ZMat a = m;
  SmithForm s;
  s.u.assign(rows, ZVec(rows, Z(0)));
  s.v.assign(cols, ZVec(cols, Z(0)));
  for (std::size_t i = 0; i < rows; ++i) s.u[i][i] = 1;
  for (std::size_t i = 0; i < cols; ++i) s.v[i][i] = 1;

  auto row_op = [&](std::size_t dst, std::size_t src, const Z& f) {
    for (std::size_t k = 0; k < cols; ++k) a[dst][k] -= f * a[src][k];
    for (std::size_t k = 0; k < rows; ++k) s.u[dst][k] -= f * s.u[src][k];
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const Z& f) {
    for (std::size_t k = 0; k < rows; ++k) a[k][dst] -= f * a[k][src];
    for (std::size_t k = 0; k < cols; ++k) s.v[k][dst] -= f * s.v[k][src];
  };
  auto row_swap = [&](std::size_t x, std::size_t y) {
    std::swap(a[x], a[y]);
    std::swap(s.u[x], s.u[y]);
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (auto& r : a) std::swap(r[x], r[y]);
    for (auto& r : s.v) std::swap(r[x], r[y]);
  };

  const std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    // Pick smallest nonzero entry in the trailing block as pivot.
    while (true) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) break;
      row_swap(t, pi);
      col_swap(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Z q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        row_op(i, t, q);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Z q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        col_op(j, t, q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: the pivot must divide every remaining entry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            // Fold row i into row t and redo.
            row_op(t, i, Z(-1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a[t][t] < 0) {
      for (std::size_t k = 0; k < cols; ++k) a[t][k] = -a[t][k];
      for (std::size_t k = 0; k < rows; ++k) s.u[t][k] = -s.u[t][k];
    }
  }
  s.diag.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.diag[i] = a[i][i];
  return s;
}

/// Inverse of a unimodular integer matrix.
inline ZMat unimodular_inverse(const ZMat& m) {
  QMat q;
  for (const auto& r : m) q.push_back(to_qvec(r));
  auto inv = inverse(q);
  if (!inv) throw ConsistencyError("unimodular_inverse: singular matrix");
  ZMat out(m.size(), ZVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      if ((*inv)[i][j].get_den() != 1)
        throw ConsistencyError("unimodular_inverse: matrix is not unimodular");
      out[i][j] = (*inv)[i][j].get_num();
    }
  return out;
}

}  // namespace rgc
