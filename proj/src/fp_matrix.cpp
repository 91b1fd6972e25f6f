#include "cartancert/fp_matrix.hpp"

#include <stdexcept>

namespace cartancert {

FpMat FpMat::identity(u32 p, u32 n) {
  FpMat m(p, n);
  for (u32 i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FpMat FpMat::operator*(const FpMat& rhs) const {
  if (p != rhs.p || n != rhs.n)
    throw std::invalid_argument("FpMat: dimension/field mismatch");
  FpMat out(p, n);
  for (u32 i = 0; i < n; ++i) {
    for (u32 k = 0; k < n; ++k) {
      u64 lik = at(i, k);
      if (lik == 0) continue;
      for (u32 j = 0; j < n; ++j) {
        out.at(i, j) = static_cast<u32>((out.at(i, j) + lik * rhs.at(k, j)) % p);
      }
    }
  }
  return out;
}

FpMat FpMat::pow(u64 e) const {
  FpMat result = identity(p, n);
  FpMat base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

FpMat FpMat::transpose() const {
  FpMat out(p, n);
  for (u32 i = 0; i < n; ++i)
    for (u32 j = 0; j < n; ++j) out.at(j, i) = at(i, j);
  return out;
}

FpMat FpMat::scaled(u32 c) const {
  FpMat out = *this;
  for (auto& v : out.a) v = static_cast<u32>((static_cast<u64>(v) * c) % p);
  return out;
}

bool FpMat::is_identity() const { return *this == identity(p, n); }

bool FpMat::is_scalar(u32 c) const { return *this == identity(p, n).scaled(c % p); }

std::optional<FpMat> FpMat::inverse() const {
  FpMat m = *this;
  FpMat inv = identity(p, n);
  for (u32 col = 0; col < n; ++col) {
    u32 pivot = col;
    while (pivot < n && m.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (u32 j = 0; j < n; ++j) {
        std::swap(m.at(pivot, j), m.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    u64 scale = *inv_mod(m.at(col, col), p);
    for (u32 j = 0; j < n; ++j) {
      m.at(col, j) = static_cast<u32>(m.at(col, j) * scale % p);
      inv.at(col, j) = static_cast<u32>(inv.at(col, j) * scale % p);
    }
    for (u32 row = 0; row < n; ++row) {
      if (row == col || m.at(row, col) == 0) continue;
      u64 f = m.at(row, col);
      for (u32 j = 0; j < n; ++j) {
        m.at(row, j) =
            static_cast<u32>((m.at(row, j) + (p - f % p) * m.at(col, j)) % p);
        inv.at(row, j) =
            static_cast<u32>((inv.at(row, j) + (p - f % p) * inv.at(col, j)) % p);
      }
    }
  }
  return inv;
}

u32 FpMat::det() const {
  FpMat m = *this;
  u64 det = 1;
  for (u32 col = 0; col < n; ++col) {
    u32 pivot = col;
    while (pivot < n && m.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (u32 j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      det = det * (p - 1) % p;
    }
    det = det * m.at(col, col) % p;
    u64 scale = *inv_mod(m.at(col, col), p);
    for (u32 row = col + 1; row < n; ++row) {
      u64 f = m.at(row, col) * scale % p;
      if (f == 0) continue;
      for (u32 j = col; j < n; ++j) {
        m.at(row, j) =
            static_cast<u32>((m.at(row, j) + (p - f) * m.at(col, j)) % p);
      }
    }
  }
  return static_cast<u32>(det);
}

u64 matrix_order(const FpMat& m, u64 cap) {
  FpMat x = m;
  for (u64 k = 1; k <= cap; ++k) {
    if (x.is_identity()) return k;
    x = x * m;
  }
  return 0;
}

}  // namespace cartancert
