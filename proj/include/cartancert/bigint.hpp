// Thin helpers on top of GMP's mpz_class for the handful of places that
// outgrow 64 bits (symplectic group orders, gcd accumulators, witness moduli).
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cartancert {

bool mpz_is_probable_prime(const mpz_class& n);

// Full factorization (trial division then Pollard rho); ascending primes.
std::vector<std::pair<mpz_class, unsigned>> mpz_factorize(const mpz_class& n);

// p-adic valuation of n (n != 0).
unsigned mpz_valuation(const mpz_class& n, const mpz_class& p);

mpz_class mpz_from_decimal(const std::string& s);

}  // namespace cartancert
