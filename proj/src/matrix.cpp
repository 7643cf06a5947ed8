#include "cantorv/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace cantorv {

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::string IntMatrix::str() const {
  std::string s;
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) {
      if (j) s += " ";
      s += at(i, j).str();
    }
    s += "\n";
  }
  return s;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("mat_mul: shape mismatch");
  IntMatrix c(a.rows, b.cols);
  for (size_t i = 0; i < a.rows; ++i)
    for (size_t k = 0; k < a.cols; ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (size_t j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

Int determinant(const IntMatrix& a) {
  if (a.rows != a.cols) throw std::invalid_argument("determinant: not square");
  const size_t n = a.rows;
  if (n == 0) return 1;
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  // Bareiss fraction-free elimination.
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = num / prev;  // exact by Bareiss
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

namespace {

struct SnfState {
  IntMatrix a, u, v;

  void row_swap(size_t i, size_t j) {
    for (size_t c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
    for (size_t c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void col_swap(size_t i, size_t j) {
    for (size_t r = 0; r < a.rows; ++r) std::swap(a.at(r, i), a.at(r, j));
    for (size_t r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  void row_add(size_t dst, size_t src, const Int& f) {  // row dst += f*src
    for (size_t c = 0; c < a.cols; ++c) a.at(dst, c) += f * a.at(src, c);
    for (size_t c = 0; c < u.cols; ++c) u.at(dst, c) += f * u.at(src, c);
  }
  void col_add(size_t dst, size_t src, const Int& f) {
    for (size_t r = 0; r < a.rows; ++r) a.at(r, dst) += f * a.at(r, src);
    for (size_t r = 0; r < v.rows; ++r) v.at(r, dst) += f * v.at(r, src);
  }
  void row_negate(size_t i) {
    for (size_t c = 0; c < a.cols; ++c) a.at(i, c) = -a.at(i, c);
    for (size_t c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
  }
};

}  // namespace

SnfResult snf(const IntMatrix& m) {
  SnfState s{m, IntMatrix::identity(m.rows), IntMatrix::identity(m.cols)};
  const size_t n = std::min(m.rows, m.cols);

  for (size_t t = 0; t < n; ++t) {
    // Re-select a pivot of minimal absolute value in the remaining block
    // on every pass; working against the smallest entry keeps the
    // multipliers, and with them the coefficient growth, small.
    for (;;) {
      size_t pi = t, pj = t;
      Int best = 0;
      for (size_t i = t; i < m.rows; ++i)
        for (size_t j = t; j < m.cols; ++j) {
          const Int& x = s.a.at(i, j);
          if (x == 0) continue;
          Int ax = abs(x);
          if (best == 0 || ax < best) {
            best = ax;
            pi = i;
            pj = j;
          }
        }
      if (best == 0) {
        t = n;  // block exhausted; no further diagonal entries
        break;
      }
      if (pi != t) s.row_swap(t, pi);
      if (pj != t) s.col_swap(t, pj);

      // Clear the pivot column and row; remainders stay in place and a
      // strictly smaller pivot is re-selected on the next pass.
      bool residue = false;
      for (size_t i = t + 1; i < m.rows; ++i) {
        if (s.a.at(i, t) == 0) continue;
        Int q = s.a.at(i, t) / s.a.at(t, t);
        if (q != 0) s.row_add(i, t, -q);
        if (s.a.at(i, t) != 0) residue = true;
      }
      for (size_t j = t + 1; j < m.cols; ++j) {
        if (s.a.at(t, j) == 0) continue;
        Int q = s.a.at(t, j) / s.a.at(t, t);
        if (q != 0) s.col_add(j, t, -q);
        if (s.a.at(t, j) != 0) residue = true;
      }
      if (residue) continue;
      // Enforce divisibility of the remaining block by the pivot.
      bool fixed = false;
      for (size_t i = t + 1; i < m.rows && !fixed; ++i)
        for (size_t j = t + 1; j < m.cols && !fixed; ++j)
          if (s.a.at(i, j) % s.a.at(t, t) != 0) {
            s.row_add(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (t >= n) break;
    if (s.a.at(t, t) < 0) s.row_negate(t);
  }
  // Zero out any off-diagonal residue is complete by construction; build D.
  SnfResult res;
  res.d = IntMatrix(m.rows, m.cols);
  for (size_t t = 0; t < n; ++t) res.d.at(t, t) = s.a.at(t, t);
  res.u = std::move(s.u);
  res.v = std::move(s.v);
  return res;
}

bool verify_snf(const IntMatrix& m, const SnfResult& s) {
  if (!(mat_mul(mat_mul(s.u, m), s.v) == s.d)) return false;
  Int du = determinant(s.u), dv = determinant(s.v);
  if (du != 1 && du != -1) return false;
  if (dv != 1 && dv != -1) return false;
  const size_t n = std::min(s.d.rows, s.d.cols);
  for (size_t t = 0; t < n; ++t) {
    for (size_t j = 0; j < s.d.cols; ++j)
      if (j != t && s.d.at(t, j) != 0) return false;
    if (s.d.at(t, t) < 0) return false;
    if (t + 1 < n && s.d.at(t + 1, t + 1) != 0) {
      if (s.d.at(t, t) == 0) return false;
      if (s.d.at(t + 1, t + 1) % s.d.at(t, t) != 0) return false;
    }
  }
  return true;
}

size_t snf_rank(const IntMatrix& d) {
  size_t r = 0;
  const size_t n = std::min(d.rows, d.cols);
  for (size_t t = 0; t < n; ++t)
    if (d.at(t, t) != 0) ++r;
  return r;
}

}  // namespace cantorv
