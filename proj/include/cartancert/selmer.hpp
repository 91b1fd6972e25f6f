// Finite group cohomology of (Z/m)^x acting on Z/m by multiplication
// (additively written mu_m): crossed homomorphisms, coboundaries, the Selmer
// condition "trivial on every cyclic subgroup" with an optional unramified
// condition at 2, and the explicit nontrivial class of the special case
// 8 | m. Brute-force enumeration throughout; m stays small (a few hundred).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cartancert/numeric.hpp"

namespace cartancert {

struct UnitGroup {
  u64 m = 0;
  std::vector<u64> gens;    // independent generators of (Z/m)^x via CRT
  std::vector<u64> orders;  // matching orders
  std::vector<u64> elements;
  std::vector<std::vector<u64>> decomps;  // aligned with elements

  // Exponent vector of u in the fixed generator decomposition.
  const std::vector<u64>& decompose(u64 u) const;
};

UnitGroup unit_group(u64 m);

// A crossed homomorphism f : (Z/m)^x -> Z/m, stored by values on the
// generators; extension to the whole group follows the fixed decomposition.
struct Cocycle {
  std::vector<u64> on_gens;
  bool operator==(const Cocycle&) const = default;
};

// All of Z^1: generator values satisfying the norm relations
// N_i f(g_i) = 0 and the compatibility (1-g_j) f(g_i) = (1-g_i) f(g_j).
std::vector<Cocycle> crossed_hom_space(const UnitGroup& g);

u64 evaluate_cocycle(const UnitGroup& g, const Cocycle& f, u64 u);

// f = (g-1)c for a single c.
bool is_coboundary(const UnitGroup& g, const Cocycle& f);

u64 coboundary_count(const UnitGroup& g);

// Order of the subgroup of H^1 surviving the Selmer conditions: restriction
// to every cyclic subgroup must be a coboundary of that subgroup, and (when
// with_2_condition is set) the restriction to the inertia subgroup at 2,
// ker((Z/m)^x -> (Z/m1)^x) with m1 the odd part, must be a coboundary of it.
u64 selmer_dim(u64 m, bool with_2_condition);

struct SpecialClassReport {
  bool pass = false;
  u64 m = 0;
  Cocycle chi;                 // the quadratic character through {0, m/2}
  bool is_cocycle = false;
  bool nontrivial_class = false;
  bool cyclic_restrictions_trivial = false;
  bool fails_unramified_at_2 = false;
  std::string detail;
};

// For 8 | m: chi(g) = 0 for g = 1,3 (mod 8) and m/2 for g = 5,7 (mod 8) is a
// nonzero class, trivial on every cyclic subgroup, nontrivial on inertia at 2.
SpecialClassReport special_class_check(u64 m);

// (a, b) -> p^(-a) b (mod m); requires p^2d = 1 (mod m) so the first argument
// is well defined mod 2d.
u64 dual_transfer(u64 a, u64 b, u64 p, u64 m, u32 two_d);

}  // namespace cartancert
