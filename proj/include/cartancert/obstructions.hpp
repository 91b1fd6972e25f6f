// Parameter search for the ramified primes N1, N2, Frobenius data, and the
// constructive solution of the four local lifting problems (at infinity, p,
// N1 and N2), each verified by exact word arithmetic in the metacyclic group.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cartancert/metacyclic.hpp"
#include "cartancert/numeric.hpp"

namespace cartancert {

// 2d = 2^n * d1 with d1 odd.
std::pair<u32, u32> decompose_2d(u32 d);

struct EmbeddingInstance {
  u64 p = 0;
  u32 d = 0;
  u32 n = 0, d1 = 0;
  u64 N1 = 0;
  std::optional<u64> N2;       // absent when d1 = 1
  std::optional<u64> alphaN2;  // N2 = 2*alpha*d1 + 1
  GroupShape shape;
};

// N2 = smallest prime = 1 mod d1 distinct from p (only when d1 > 1);
// N1 = smallest prime with N1 = 2^n+1 mod 2^(n+1), N1 = 1 mod N2, and p a
// quadratic non-residue mod N1 (Euler criterion), distinct from p and N2.
EmbeddingInstance find_ramified_primes(u64 p, u32 d, u64 cap = 10000000);

struct FrobeniusData {
  u32 a_at_p = 0;   // in Z/2d, CRT of discrete logs at N1 (2^n part) and N2 (d1 part)
  u32 a_at_N1 = 0;  // in Z/(p-1), index of N1 mod p w.r.t. smallest primitive root
  std::optional<u32> a_at_N2;  // in Z/(p-1)
  std::optional<u32> b_at_N2;  // second coordinate is b*d1 in Z/2d
  bool parity_ok = false;      // computed parities match the reciprocity rule
};

FrobeniusData frobenius_data(const EmbeddingInstance& inst);

enum class Place { Infinity, AtP, AtN1, AtN2 };

struct TameLift {
  Place place = Place::Infinity;
  u64 local_prime = 0;  // tame twist exponent (p, N1 or N2); 0 at infinity
  Word sigma, tau;
  u64 lift_exponent = 0;  // the congruence unknown
  bool verified = false;  // defining relation checked by word arithmetic
};

// Order-2 lift of complex conjugation: x^((p-1)/2) y^d. Aborts if the square
// is not the identity.
Word lift_at_infinity(const GroupShape& s);

// Lift of Frobenius (0, a), inertia (1, 0) through the tame relation
// sigma tau sigma^-1 = tau^p. Solvable iff a is odd; nullopt otherwise.
std::optional<TameLift> lift_at_p(const GroupShape& s, u32 a);

// e' = (p^d+1)/gcd(p^d+1, 1+p+...+p^(a-2)) and the verdict e' odd <=> a odd.
// Requires a >= 2.
std::pair<u64, bool> eprime_parity(const GroupShape& s, u32 a);

// sigma = x^(a + k(p-1)), tau = y^d1 with k solving
// k(1 - p^d1) = (p^d+1)/2 + a(1+p+...+p^(d1-1)) mod p^d+1. Throws if the
// parity precondition fails (it cannot, given conditions (a) and (c)).
TameLift lift_at_N1(const EmbeddingInstance& inst, u32 a);

// sigma = x^(a + k(p-1)) y^(b d1), tau = y^(2^n); unconditionally solvable
// modulo M = (p^d+1)/(p^(2^(n-1))+1). Requires d1 > 1.
TameLift lift_at_N2(const EmbeddingInstance& inst, u32 a, u32 b);

struct ObstructionReport {
  bool trivial = false;  // p = 2: semidirect product, nothing to check
  bool all_solvable = false;
  EmbeddingInstance instance;
  FrobeniusData frobenius;
  Word at_infinity;
  std::optional<TameLift> at_p;
  std::optional<TameLift> at_N1;
  std::optional<TameLift> at_N2;
  std::string detail;
};

ObstructionReport obstruction_report(u64 p, u32 d, u64 cap = 10000000);

struct SplitPrimeQuery {
  std::vector<u64> one_mod;                       // prime = 1 mod each entry
  std::vector<std::pair<u64, u64>> power_residue; // (N, k): k-th power residue mod N
  std::vector<u64> exclude;
  u64 cap = 10000000;
};

// Smallest prime satisfying all constraints; throws SearchCapExceeded.
u64 find_split_prime(const SplitPrimeQuery& query);

struct SearchCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TwistDatum {
  u64 q = 0;
  Word c_sigma;  // identity: the twist is supported on inertia
  Word c_tau;    // generator of the order-q subgroup of [N,N]
  u64 order_c_tau = 0;
};

// The prescribed local twist at l: c(tau) generates the order-q subgroup of
// the derived subgroup; well-definedness (l-1) c(tau) = 0 requires q | l-1.
TwistDatum local_twist_data(u64 l, u64 q, const GroupShape& s);

}  // namespace cartancert
