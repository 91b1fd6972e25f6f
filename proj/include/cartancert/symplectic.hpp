// The symplectic pairing tr_{k|F_p}(a d - b c) on l = k^2, its Gram matrix
// over the fixed F_p-basis, conversion of tower operators to matrices, and
// the similitude-preserving embedding GSp(2d) -> GSp(2g).
#pragma once

#include <memory>
#include <optional>

#include "cartancert/field_tower.hpp"
#include "cartancert/fp_matrix.hpp"

namespace cartancert {

struct GramForm {
  FpMat j;
};

// Validates antisymmetry, zero diagonal and invertibility.
GramForm make_gram(FpMat j);

struct SympMatrix {
  FpMat m;
  std::shared_ptr<const GramForm> gram;
};

// tr_{k|F_p}(a d - b c) for v1 = a + b eta, v2 = c + d eta.
u32 wedge_pairing(const FieldTower& t, const TowerElem& v1, const TowerElem& v2);

// J[i][j] = wedge(b_i, b_j) over the basis u^0..u^(d-1), u^0 eta..u^(d-1) eta.
GramForm gram_matrix(const FieldTower& t);

// Matrix of z -> beta * z, an F_p-linear operator on l. Multiplicative in beta.
FpMat multiply_operator_matrix(const FieldTower& t, const TowerElem& beta);

// Matrix of z -> alpha * z^(p^i).
FpMat alpha_frobenius_matrix(const FieldTower& t, const TowerElem& alpha, u32 i);

// Matrix of the k-linear map (v1, v2) -> (a v1 + b v2, c v1 + d v2) on k^2.
FpMat k_linear_matrix(const FieldTower& t, const KElem& a, const KElem& b,
                      const KElem& c, const KElem& d);

// c with M^T J M = c J, when such a nonzero scalar exists.
std::optional<u32> similitude_factor(const FpMat& m, const FpMat& j);

// Gram of the 2g-dimensional space: J followed by g - n/2 hyperbolic planes.
FpMat embed_gram(const FpMat& j, u32 g);

// Block matrix acting as M on the first coordinates and as diag(1, c) on each
// appended hyperbolic plane, c = similitude factor of M. Preserves similitude
// factors and is a group homomorphism. Throws if M is not a similitude or
// 2g < dim(M).
FpMat embed_gsp(const FpMat& m, const FpMat& j, u32 g);

}  // namespace cartancert
