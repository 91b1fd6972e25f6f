// The genus constant K_g = gcd over odd primes r of #GSp(2g, F_r), computed
// two independent ways: a sampled gcd over primes up to a bound (the oracle),
// and an exact per-prime valuation minimization over q-adic residue classes.
// The two must agree; kg_exact aborts if they do not.
#pragma once

#include <gmpxx.h>

#include <vector>

#include "cartancert/numeric.hpp"

namespace cartancert {

struct KgFactorization {
  u32 g = 0;
  std::vector<std::pair<u64, u32>> factors;  // (prime, exponent), ascending
  mpz_class value;

  bool divides(const mpz_class& n) const;      // value | n
  bool divided_by(const mpz_class& q) const;   // q | value
};

// #GSp(2g, F_r) = (r-1) r^(g^2) prod_{i=1..g} (r^2i - 1); r must be prime.
mpz_class gsp_order(u32 g, u64 r);

// gcd of gsp_order(g, r) over odd primes r <= bound.
mpz_class kg_sampled(u32 g, u64 bound);

// gcd of gsp_order(g, r) over primes m < r <= bound, for stability checks.
mpz_class kg_sampled_above(u32 g, u64 m, u64 bound);

// Exact exponent of the prime q in K_g: the minimum of
// nu_q((u-1) prod (u^2i - 1)) over units u, computed by refining q-adic
// residue classes until every live class is provably beaten.
u32 kg_exponent_min(u32 g, u64 q);

// Exact K_g via kg_exponent_min over primes q <= 2g+1, cross-checked against
// kg_sampled(g, 10^4); throws std::logic_error on disagreement.
KgFactorization kg_exact(u32 g);

// gcd over primes in (m, bound] equals K_g (Dirichlet-stability of the gcd).
bool kg_stability(u32 g, u64 m, u64 bound);
bool kg_stability(u32 g, u64 m, u64 bound, const KgFactorization& kg);

}  // namespace cartancert
