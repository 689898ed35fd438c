#include "grodiag/fp.hpp"

#include <algorithm>
#include <string>

#include "grodiag/grocat.hpp"
#include "grodiag/kernels.hpp"

namespace grodiag {

void check_field_char(std::uint32_t p) {
  if (p > 0x7fffffffu || !is_prime(static_cast<std::int64_t>(p)))
    fail(Errc::input, "field characteristic " + std::to_string(p) + " is not a supported prime");
}

FpMat::FpMat(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

FpMat FpMat::identity(std::uint32_t p, std::size_t n) {
  FpMat m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FpMat FpMat::from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  FpMat m(p, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) fail(Errc::input, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) {
      std::int64_t v = rows[i][j] % static_cast<std::int64_t>(p);
      if (v < 0) v += p;
      m.at(i, j) = static_cast<std::uint32_t>(v);
    }
  }
  return m;
}

std::vector<std::uint32_t> FpMat::column(std::size_t j) const {
  std::vector<std::uint32_t> col(rows_);
  for (std::size_t i = 0; i < rows_; ++i) col[i] = at(i, j);
  return col;
}

FpMat FpMat::transposed() const {
  FpMat t(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool FpMat::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

std::uint32_t fp_inverse(std::uint32_t a, std::uint32_t p) {
  // extended Euclid on (a, p); p prime, a nonzero mod p
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) fail(Errc::domain, "element not invertible mod p");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

FpMat matmul(const FpMat& a, const FpMat& b) {
  if (a.p() != b.p()) fail(Errc::composition, "matmul over different characteristics");
  if (a.cols() != b.rows())
    fail(Errc::composition, "matmul shape mismatch: " + std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()));
  FpMat c(a.p(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto ci = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      std::uint32_t aik = a.at(i, k);
      if (aik == 0) continue;
      kern::axpy_modp(ci.data(), b.row(k).data(), aik, b.cols(), a.p());
    }
  }
  return c;
}

std::vector<std::size_t> rref_in_place(FpMat& m) {
  const std::uint32_t p = m.p();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t piv = r;
    while (piv < m.rows() && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      std::swap_ranges(m.row(piv).begin(), m.row(piv).end(), m.row(r).begin());
    std::uint32_t inv = fp_inverse(m.at(r, col), p);
    if (inv != 1) kern::scale_modp(m.row(r).data(), inv, m.cols(), p);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      std::uint32_t v = m.at(i, col);
      if (v == 0) continue;
      kern::axpy_modp(m.row(i).data(), m.row(r).data(), p - v, m.cols(), p);
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

std::size_t rank(const FpMat& m) {
  FpMat tmp = m;
  return rref_in_place(tmp).size();
}

FpMat kernel_basis(const FpMat& m) {
  FpMat r = m;
  std::vector<std::size_t> pivots = rref_in_place(r);
  const std::uint32_t p = m.p();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  FpMat basis(p, m.cols(), free_cols.size());
  for (std::size_t fj = 0; fj < free_cols.size(); ++fj) {
    std::size_t j = free_cols[fj];
    basis.at(j, fj) = 1;
    for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
      std::uint32_t v = r.at(pi, j);
      if (v != 0) basis.at(pivots[pi], fj) = p - v;
    }
  }
  return basis;
}

std::optional<FpMat> solve(const FpMat& a, const FpMat& b) {
  if (a.p() != b.p() || a.rows() != b.rows()) fail(Errc::composition, "solve shape mismatch");
  FpMat aug = hstack(a, b);
  std::vector<std::size_t> pivots = rref_in_place(aug);
  for (std::size_t c : pivots)
    if (c >= a.cols()) return std::nullopt; // pivot in the rhs block
  FpMat x(a.p(), a.cols(), b.cols());
  for (std::size_t pi = 0; pi < pivots.size(); ++pi)
    for (std::size_t j = 0; j < b.cols(); ++j) x.at(pivots[pi], j) = aug.at(pi, a.cols() + j);
  return x;
}

FpMat column_space_basis(const FpMat& m) {
  FpMat r = m;
  std::vector<std::size_t> pivots = rref_in_place(r);
  FpMat basis(m.p(), m.rows(), pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) basis.at(i, k) = m.at(i, pivots[k]);
  return basis;
}

FpMat hstack(const FpMat& a, const FpMat& b) {
  if (a.rows() != b.rows() || a.p() != b.p()) fail(Errc::composition, "hstack shape mismatch");
  FpMat c(a.p(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::copy(a.row(i).begin(), a.row(i).end(), c.row(i).begin());
    std::copy(b.row(i).begin(), b.row(i).end(), c.row(i).begin() + a.cols());
  }
  return c;
}

FpMat vstack(const FpMat& a, const FpMat& b) {
  if (a.cols() != b.cols() || a.p() != b.p()) fail(Errc::composition, "vstack shape mismatch");
  FpMat c(a.p(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    std::copy(a.row(i).begin(), a.row(i).end(), c.row(i).begin());
  for (std::size_t i = 0; i < b.rows(); ++i)
    std::copy(b.row(i).begin(), b.row(i).end(), c.row(a.rows() + i).begin());
  return c;
}

} // namespace grodiag
