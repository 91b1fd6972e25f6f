// The tower F_p < k < l where k has order p^d and l order p^2d, realized as
// k = F_p[u]/(f) and l = k + k*eta with eta^2 = s*eta + w. All choices
// (defining polynomial, w, distinguished elements) are made by scanning a
// fixed enumeration so that rebuilding the tower is reproducible:
//
//   * field elements are ordered by their coordinate index sum(c_i * p^i);
//   * f is the monic irreducible of degree d with the smallest index over
//     its non-leading coefficients;
//   * for odd p, w is the smallest generator of k^x (so eta^2 = w is a
//     primitive root and {1, eta} identifies l with k^2);
//   * for p = 2, w is the smallest element of k with trace 1, giving
//     tr_{l|k}(eta) = 1 and minimal polynomial eta^2 + eta + w.
//
// Towers are immutable after construction and all operations are pure, so
// instances may be shared freely across threads.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cartancert/numeric.hpp"

namespace cartancert {

struct KElem {
  std::vector<u32> c;  // d coefficients, little-endian in powers of u
  bool operator==(const KElem&) const = default;
};

struct TowerElem {
  std::vector<u32> c;  // 2d coefficients: first d = k-part, last d = eta-part
  bool operator==(const TowerElem&) const = default;
};

class FieldTower {
 public:
  FieldTower(u64 p, u32 d);

  u64 p() const { return p_; }
  u32 d() const { return d_; }
  u64 k_order() const { return k_order_; }    // p^d
  u64 l_order() const { return l_order_; }    // p^2d
  u64 e() const { return e_; }                // (p^d + 1)(p - 1)

  const std::vector<u32>& poly_k() const { return poly_k_; }
  u32 eta_s() const { return s_; }
  const KElem& eta_w() const { return w_; }

  // --- k = F_{p^d} -------------------------------------------------------
  KElem k_zero() const;
  KElem k_one() const;
  KElem k_scalar(u64 v) const;
  KElem k_elem(u64 index) const;
  u64 k_index(const KElem& x) const;
  KElem k_add(const KElem& x, const KElem& y) const;
  KElem k_sub(const KElem& x, const KElem& y) const;
  KElem k_neg(const KElem& x) const;
  KElem k_mul(const KElem& x, const KElem& y) const;
  KElem k_pow(const KElem& x, u64 e) const;
  KElem k_inv(const KElem& x) const;
  bool k_is_zero(const KElem& x) const;
  // Value of a constant element; nullopt if x is not in the prime field.
  std::optional<u64> k_as_prime_field(const KElem& x) const;
  u32 k_trace_to_p(const KElem& x) const;
  u64 k_mult_order(const KElem& x) const;

  // --- l = F_{p^2d} ------------------------------------------------------
  TowerElem l_zero() const;
  TowerElem l_one() const;
  TowerElem eta() const;
  TowerElem l_from_k(const KElem& a) const;
  TowerElem l_from_pair(const KElem& a, const KElem& b) const;
  KElem k_part(const TowerElem& x) const;
  KElem eta_part(const TowerElem& x) const;
  TowerElem l_elem(u64 index) const;
  u64 l_index(const TowerElem& x) const;
  TowerElem l_add(const TowerElem& x, const TowerElem& y) const;
  TowerElem l_sub(const TowerElem& x, const TowerElem& y) const;
  TowerElem l_neg(const TowerElem& x) const;
  TowerElem l_mul(const TowerElem& x, const TowerElem& y) const;
  TowerElem l_pow(const TowerElem& x, u64 e) const;
  TowerElem l_inv(const TowerElem& x) const;
  bool l_is_zero(const TowerElem& x) const;
  // x -> x^(p^i)
  TowerElem frobenius_power(const TowerElem& x, u32 i) const;
  KElem trace_l_to_k(const TowerElem& x) const;
  KElem norm_l_to_k(const TowerElem& x) const;
  u32 trace_l_to_p(const TowerElem& x) const;
  u64 l_mult_order(const TowerElem& x) const;

 private:
  u64 p_;
  u32 d_;
  u64 k_order_, l_order_, e_;
  std::vector<u32> poly_k_;                 // monic, degree d
  std::vector<std::vector<u32>> reduction_; // u^(d+i) mod f for i = 0..d-2
  u32 s_;
  KElem w_;
  std::vector<std::pair<u64, u32>> k_order_factors_;  // of p^d - 1
  std::vector<std::pair<u64, u32>> l_order_factors_;  // of p^2d - 1
};

FieldTower build_tower(u64 p, u32 d);

// First element of l^x (in index order) whose multiplicative order is exactly
// e = (p^d + 1)(p - 1); its norm to k automatically generates F_p^x.
TowerElem find_cartan_generator(const FieldTower& t);

struct AlphaResult {
  TowerElem alpha;               // first solution of Norm_{l|k}(alpha) = eta^(1-p)
  bool in_k_possible;            // whether some solution lies in k^x
  std::optional<KElem> k_alpha;  // smallest such, when it exists
};

// Odd p only.
AlphaResult find_alpha(const FieldTower& t);

}  // namespace cartancert
