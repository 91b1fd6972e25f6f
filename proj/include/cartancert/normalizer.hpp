// Construction of the cyclic subgroup C (image of the norm-one-up-to-F_p^x
// part of l^x) and the subgroup N of its normalizer in GSp(2d, F_p), as
// explicit matrices: X realizes multiplication by a generator of C, and Y the
// pairing-preserving twisted Frobenius (plain Frobenius when p = 2). Every
// structural property is machine-checked at construction time.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cartancert/field_tower.hpp"
#include "cartancert/fp_matrix.hpp"
#include "cartancert/metacyclic.hpp"
#include "cartancert/symplectic.hpp"

namespace cartancert {

struct NormalizerData {
  u64 p = 0;
  u32 d = 0;
  u64 e = 0;  // order of C: (p^d+1)(p-1), which degenerates to 2^d+1 for p = 2
  std::shared_ptr<const FieldTower> tower;
  TowerElem x;                    // generator of C in l^x
  std::optional<TowerElem> alpha; // odd p only
  std::optional<AlphaResult> alpha_search;
  std::shared_ptr<const GramForm> gram;
  FpMat X, Y;
  u64 order_x = 0, order_y = 0;
  u32 sim_x = 0;  // similitude of X = Norm_{l|k}(x) as an element of F_p

  GroupShape shape() const { return GroupShape::standard(p, d); }
};

NormalizerData build_normalizer(u64 p, u32 d);

struct CheckLine {
  std::string name;
  bool pass = false;
};

struct PresentationReport {
  bool pass = false;
  u64 group_order = 0;  // counted over distinct normal forms X^a Y^b
  std::vector<CheckLine> checks;
  std::string first_failure;
};

// x^e = 1, y^2d = x^(e/2) (odd p) or 1 (p = 2), y x y^-1 = x^p, exact
// generator orders, and the group order by normal-form counting.
PresentationReport verify_presentation(const NormalizerData& nd);

struct SimilitudeReport {
  bool pass = false;
  u32 sim_x = 0, sim_y = 0;
  bool surjective = false;
  std::string first_failure;
};

// similitude(X) = Norm(x), similitude(Y) = 1, and surjectivity onto F_p^x.
SimilitudeReport similitude_character_check(const NormalizerData& nd);

}  // namespace cartancert
