// Selection of a witness pair (d, q): q a prime power dividing p^d+1 with
// q not dividing K_g. Includes the Zsigmondy-style scan used for g >= 7, the
// exhaustive small-(g,p) table, and the explicit order-78 subgroup of
// GSp(6, F_3) that covers the pair (3,3).
#pragma once

#include <gmpxx.h>

#include <vector>

#include "cartancert/fp_matrix.hpp"
#include "cartancert/kg.hpp"

namespace cartancert {

struct PrimePowerVerdict {
  mpz_class q;
  bool divides_kg = false;
};

struct WitnessScanRow {
  u32 d = 0;
  mpz_class modulus;  // p^d + 1
  std::vector<PrimePowerVerdict> prime_powers;
};

struct Witness {
  bool exceptional = false;
  u32 d = 0;       // valid when !exceptional
  mpz_class q;     // smallest admissible prime power for the smallest d
  std::vector<WitnessScanRow> scan;  // what was tried, in order
};

// Smallest d, then smallest prime power q | p^d+1 with q not dividing K_g.
// The scan transcript records every candidate and its verdict; when no
// candidate works the result is flagged exceptional with the full transcript.
Witness find_witness(u32 g, u64 p, const KgFactorization& kg);

struct ZsigmondyResult {
  u32 d = 0;
  u64 q = 0;  // prime > 2g+1 dividing p^d + 1
  u64 pi_2g1 = 0;
};

// Smallest prime q > 2g+1 whose order mod p is 2d with d <= g. Requires
// g >= 7; throws if the scan cap is exhausted (which would contradict
// Zsigmondy's theorem).
ZsigmondyResult zsigmondy_scan(u32 g, u64 p, u64 cap = 1000000);

// All pairs (g, p) with 2 <= g <= gmax, p prime <= pmax admitting no witness.
std::vector<std::pair<u32, u64>> exceptional_scan(u32 gmax, u64 pmax);

struct Group33 {
  FpMat gram;  // pairing on W + W^dual, W = F_27 over F_3
  FpMat X, Y;
  u64 order_x = 0, order_y = 0, group_order = 0;
  u32 sim_x = 0, sim_y = 0;
  bool unique_order13 = false;  // exactly one subgroup of order 13, namely <X>
};

// The order-78 subgroup of GSp(6, F_3) with presentation
// <x, y | x^13 = y^6 = 1, y x y^-1 = x^4> and surjective similitude:
// X is multiplication by an order-13 element on W acting contragradiently on
// W^dual; Y is found by solving Y X = X^4 Y and filtering the solution space.
// Every claimed property is verified; throws if no qualifying Y exists.
Group33 build_33_group();

}  // namespace cartancert
