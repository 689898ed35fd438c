#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "grodiag/error.hpp"

namespace grodiag {

// Finite dimensional vector space over GF(p).
struct FieldObject {
  std::uint32_t p = 2;
  std::uint32_t dim = 0;
  friend bool operator==(const FieldObject&, const FieldObject&) = default;
};

// prime and small enough for the kernel contract (p < 2^31)
void check_field_char(std::uint32_t p);

// Dense row-major matrix over GF(p), entries canonical in [0, p).
// Doubles as a linear map: source dim = cols, target dim = rows.
class FpMat {
public:
  FpMat() = default;
  FpMat(std::uint32_t p, std::size_t rows, std::size_t cols);

  static FpMat identity(std::uint32_t p, std::size_t n);
  // reduces arbitrary signed entries into [0, p)
  static FpMat from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows);

  std::uint32_t p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  std::span<std::uint32_t> row(std::size_t i) { return {a_.data() + i * cols_, cols_}; }
  std::span<const std::uint32_t> row(std::size_t i) const { return {a_.data() + i * cols_, cols_}; }

  FieldObject source() const { return {p_, static_cast<std::uint32_t>(cols_)}; }
  FieldObject target() const { return {p_, static_cast<std::uint32_t>(rows_)}; }

  std::vector<std::uint32_t> column(std::size_t j) const;
  FpMat transposed() const;
  bool is_identity() const;

  friend bool operator==(const FpMat&, const FpMat&) = default;

private:
  std::uint32_t p_ = 2;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> a_;
};

std::uint32_t fp_inverse(std::uint32_t a, std::uint32_t p);

FpMat matmul(const FpMat& a, const FpMat& b);

// In-place reduced row echelon form; returns the pivot column of each
// pivot row, in order.
std::vector<std::size_t> rref_in_place(FpMat& m);

std::size_t rank(const FpMat& m);

// Columns form a basis of the null space; deterministic (free columns in
// ascending order, free coordinate set to 1).
FpMat kernel_basis(const FpMat& m);

// Any X with A*X = B, or nullopt when inconsistent. Free variables are 0.
std::optional<FpMat> solve(const FpMat& a, const FpMat& b);

// Column-space basis: the subset of columns that are pivots of rref(m),
// i.e. the earliest spanning subset. Result has full column rank.
FpMat column_space_basis(const FpMat& m);

FpMat hstack(const FpMat& a, const FpMat& b);
FpMat vstack(const FpMat& a, const FpMat& b);

} // namespace grodiag
