#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace grodiag {

// Arbitrary-precision integers: intermediate entries blow up even for
// small inputs, so the normal-form path never uses fixed-width types.
using BigInt = boost::multiprecision::cpp_int;

struct ZMat {
  std::size_t rows = 0, cols = 0;
  std::vector<BigInt> a;

  ZMat() = default;
  ZMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

  static ZMat identity(std::size_t n);

  BigInt& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  friend bool operator==(const ZMat&, const ZMat&) = default;
};

ZMat zmul(const ZMat& x, const ZMat& y);

// U*M*V = D with U, V unimodular and D diagonal, d1 | d2 | ..., di >= 0.
// Uinv and Vinv are maintained alongside so M can be rebuilt exactly as
// Uinv*D*Vinv.
struct SmithResult {
  ZMat u, d, v, u_inv, v_inv;
};

SmithResult smith_normal_form(const ZMat& m);

// determinant by fraction-free elimination (exact)
BigInt zdet(const ZMat& m);

} // namespace grodiag
