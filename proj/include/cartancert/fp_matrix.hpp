// Dense square matrices over a prime field F_p. Dimensions in this project
// never exceed ~20, so everything is plain row-major storage and O(n^3)
// arithmetic.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cartancert/numeric.hpp"

namespace cartancert {

struct FpMat {
  u32 p = 0;
  u32 n = 0;
  std::vector<u32> a;  // row-major, entries reduced mod p

  FpMat() = default;
  FpMat(u32 p_, u32 n_) : p(p_), n(n_), a(static_cast<size_t>(n_) * n_, 0) {}

  static FpMat identity(u32 p, u32 n);

  u32& at(u32 i, u32 j) { return a[static_cast<size_t>(i) * n + j]; }
  u32 at(u32 i, u32 j) const { return a[static_cast<size_t>(i) * n + j]; }

  bool operator==(const FpMat&) const = default;

  FpMat operator*(const FpMat& rhs) const;
  FpMat pow(u64 e) const;
  FpMat transpose() const;
  FpMat scaled(u32 c) const;
  bool is_identity() const;
  bool is_scalar(u32 c) const;

  // Gauss-Jordan inverse; nullopt when singular.
  std::optional<FpMat> inverse() const;
  u32 det() const;
};

// Order of M in GL(n, F_p) by iterated multiplication; returns 0 if the order
// exceeds cap (or M is singular in the sense of never reaching identity).
u64 matrix_order(const FpMat& m, u64 cap);

}  // namespace cartancert
