#include "grodiag/snf.hpp"

#include <cstdlib>

#include "grodiag/error.hpp"

namespace grodiag {

ZMat ZMat::identity(std::size_t n) {
  ZMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ZMat zmul(const ZMat& x, const ZMat& y) {
  ZMat z(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) z.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return z;
}

namespace {

// Row/column operations applied to the work matrix are mirrored into the
// transforms and their inverses, so u*m*v == d and m == u_inv*d*v_inv stay
// true throughout.
struct SnfWork {
  ZMat a, u, v, u_inv, v_inv;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < a.cols; ++k) std::swap(a.at(i, k), a.at(j, k));
    for (std::size_t k = 0; k < u.cols; ++k) std::swap(u.at(i, k), u.at(j, k));
    for (std::size_t k = 0; k < u_inv.rows; ++k) std::swap(u_inv.at(k, i), u_inv.at(k, j));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < a.rows; ++k) std::swap(a.at(k, i), a.at(k, j));
    for (std::size_t k = 0; k < v.rows; ++k) std::swap(v.at(k, i), v.at(k, j));
    for (std::size_t k = 0; k < v_inv.cols; ++k) std::swap(v_inv.at(i, k), v_inv.at(j, k));
  }

  // row i += q * row j
  void add_row(std::size_t i, std::size_t j, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < a.cols; ++k) a.at(i, k) += q * a.at(j, k);
    for (std::size_t k = 0; k < u.cols; ++k) u.at(i, k) += q * u.at(j, k);
    for (std::size_t k = 0; k < u_inv.rows; ++k) u_inv.at(k, j) -= q * u_inv.at(k, i);
  }

  // col i += q * col j
  void add_col(std::size_t i, std::size_t j, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < a.rows; ++k) a.at(k, i) += q * a.at(k, j);
    for (std::size_t k = 0; k < v.rows; ++k) v.at(k, i) += q * v.at(k, j);
    for (std::size_t k = 0; k < v_inv.cols; ++k) v_inv.at(j, k) -= q * v_inv.at(i, k);
  }

  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < a.cols; ++k) a.at(i, k) = -a.at(i, k);
    for (std::size_t k = 0; k < u.cols; ++k) u.at(i, k) = -u.at(i, k);
    for (std::size_t k = 0; k < u_inv.rows; ++k) u_inv.at(k, i) = -u_inv.at(k, i);
  }
};

BigInt babs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

} // namespace

SmithResult smith_normal_form(const ZMat& m) {
  SnfWork w{m, ZMat::identity(m.rows), ZMat::identity(m.cols), ZMat::identity(m.rows),
            ZMat::identity(m.cols)};
  const std::size_t n = std::min(m.rows, m.cols);

  for (std::size_t t = 0; t < n; ++t) {
    // locate the least nonzero entry of the trailing block
    std::size_t pi = t, pj = t;
    bool found = false;
    BigInt best;
    for (std::size_t i = t; i < m.rows; ++i)
      for (std::size_t j = t; j < m.cols; ++j) {
        if (w.a.at(i, j) == 0) continue;
        BigInt v = babs(w.a.at(i, j));
        if (!found || v < best) {
          found = true;
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (!found) break; // trailing block is zero

    while (true) {
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);

      // clear the pivot row and column; truncated division leaves
      // remainders strictly smaller than the pivot, so this terminates
      bool clean = true;
      for (std::size_t i = t + 1; i < m.rows; ++i) {
        if (w.a.at(i, t) == 0) continue;
        BigInt q = w.a.at(i, t) / w.a.at(t, t);
        w.add_row(i, t, -q);
        if (w.a.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < m.cols; ++j) {
        if (w.a.at(t, j) == 0) continue;
        BigInt q = w.a.at(t, j) / w.a.at(t, t);
        w.add_col(j, t, -q);
        if (w.a.at(t, j) != 0) clean = false;
      }

      if (clean) {
        // divisibility: pull a bad entry into the pivot row and restart
        bool divides_all = true;
        for (std::size_t i = t + 1; i < m.rows && divides_all; ++i)
          for (std::size_t j = t + 1; j < m.cols && divides_all; ++j)
            if (w.a.at(i, j) % w.a.at(t, t) != 0) {
              w.add_row(t, i, 1);
              divides_all = false;
            }
        if (divides_all) break;
      }

      // re-locate the least nonzero entry
      found = false;
      for (std::size_t i = t; i < m.rows; ++i)
        for (std::size_t j = t; j < m.cols; ++j) {
          if (w.a.at(i, j) == 0) continue;
          BigInt v = babs(w.a.at(i, j));
          if (!found || v < best) {
            found = true;
            best = v;
            pi = i;
            pj = j;
          }
        }
    }

    if (w.a.at(t, t) < 0) w.negate_row(t);
  }

  return SmithResult{w.u, w.a, w.v, w.u_inv, w.v_inv};
}

BigInt zdet(const ZMat& m) {
  if (m.rows != m.cols) fail(Errc::domain, "determinant of a non-square matrix");
  const std::size_t n = m.rows;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination; every division is exact.
  ZMat b = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (b.at(k, k) == 0) {
      std::size_t i = k + 1;
      while (i < n && b.at(i, k) == 0) ++i;
      if (i == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(b.at(k, j), b.at(i, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        b.at(i, j) = (b.at(i, j) * b.at(k, k) - b.at(i, k) * b.at(k, j)) / prev;
      b.at(i, k) = 0;
    }
    prev = b.at(k, k);
  }
  return sign * b.at(n - 1, n - 1);
}

} // namespace grodiag
