// Exact word arithmetic in the metacyclic group
//
//   N = < x, y | x^e = 1, y^bmod = x^t, y x y^-1 = x^act >
//
// with unique normal forms x^a y^b, 0 <= a < e, 0 <= b < bmod. The standard
// shape has e = (p^d+1)(p-1), act = p, bmod = 2d and t = e/2 for odd p
// (t = 0 for p = 2, where e degenerates to 2^d+1). A generalized shape with
// an arbitrary action constant covers the order-78 group used for (g,p)=(3,3).
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cartancert/fp_matrix.hpp"
#include "cartancert/numeric.hpp"

namespace cartancert {

struct GroupShape {
  u64 p = 0, d = 0;  // context; act == p for the standard shapes
  u64 e = 0, bmod = 0, t = 0, act = 0;

  static GroupShape standard(u64 p, u64 d);
  static GroupShape special33();

  u64 order() const { return e * bmod; }
  // Modulus of the first abelianization coordinate (p-1 for odd p).
  u64 ab_modulus() const;
  // Order of the derived subgroup <x^ab_modulus()> (p^d+1 for odd p).
  u64 derived_order() const { return e / ab_modulus(); }

  bool operator==(const GroupShape&) const = default;
};

struct Word {
  u64 a = 0, b = 0;
  bool operator==(const Word&) const = default;
};

Word word_mul(const GroupShape& s, const Word& u, const Word& v);
Word word_inv(const GroupShape& s, const Word& u);
Word word_pow(const GroupShape& s, Word u, u64 k);
u64 word_order(const GroupShape& s, const Word& u);
bool word_is_identity(const Word& u);

// x^a y^b -> (a mod ab_modulus, b); surjective onto Z/ab_modulus x Z/bmod
// with kernel of order derived_order().
std::pair<u64, u64> abelianization(const GroupShape& s, const Word& u);

struct DerivedReport {
  bool pass = false;
  u64 order = 0;          // of [N, N]
  Word generator;         // x^ab_modulus
  bool exhaustive = false;  // whether all |N|^2 commutators were enumerated
  std::string detail;
};

// Certifies [N,N] = <x^ab_modulus()>: by full commutator enumeration for
// small groups, otherwise by exhibiting the generator as a commutator and
// checking normality plus commutativity of the quotient.
DerivedReport derived_subgroup_check(const GroupShape& s);

struct SplitReport {
  bool splits = false;
  std::optional<Word> section_u;  // maps to (1, 0); absent when ab_modulus = 1
  std::optional<Word> section_w;  // maps to (0, 1)
  u64 pairs_searched = 0;
};

// Exhaustive search for a group section of the abelianization.
SplitReport extension_splits(const GroupShape& s);

struct ConsistencyReport {
  bool pass = false;
  u64 samples = 0;
  std::string detail;
};

// Checks that x -> X, y -> Y extends to an isomorphism: generator relations,
// random word products against matrix products, and order preservation.
ConsistencyReport matrix_word_consistency(const GroupShape& s, const FpMat& x,
                                          const FpMat& y, u32 samples = 1000,
                                          u64 seed = 0x5EED);

}  // namespace cartancert
