// Small-integer number theory: modular arithmetic, primality, factorization,
// discrete logs and linear congruences. Everything here works in uint64_t;
// arbitrary precision lives in bigint.hpp.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cartancert {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);

// Modular inverse; nullopt if gcd(a, m) != 1.
std::optional<u64> inv_mod(u64 a, u64 m);

// Smallest x >= 0 with c*x = r (mod m), together with the solution modulus
// m/gcd(c,m); nullopt if gcd(c,m) does not divide r.
std::optional<std::pair<u64, u64>> solve_linear_mod(u64 c, u64 r, u64 m);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(u64 n);

// Prime factorization, ascending, as (prime, exponent) pairs. Trial division
// plus Pollard rho for large cofactors.
std::vector<std::pair<u64, u32>> factorize(u64 n);

// Multiplicative order of a modulo m. order_multiple must be a multiple of
// the true order (e.g. the group order); it is factored internally.
u64 multiplicative_order(u64 a, u64 m, u64 order_multiple);

std::vector<u32> primes_up_to(u32 n);
u64 prime_pi(u64 n);

// Smallest primitive root modulo an odd prime p.
u64 smallest_primitive_root(u64 p);

// Euler criterion; requires p an odd prime and gcd(a, p) = 1.
bool is_quadratic_residue(u64 a, u64 p);

// a = g^x (mod m) with g of the given order; brute force, small groups only.
// Throws if no solution exists.
u64 discrete_log(u64 g, u64 a, u64 m, u64 order);

}  // namespace cartancert
