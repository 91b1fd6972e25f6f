#include "cartancert/kg.hpp"

#include <limits>
#include <stdexcept>

#include "cartancert/bigint.hpp"

namespace cartancert {

bool KgFactorization::divides(const mpz_class& n) const {
  return mpz_divisible_p(n.get_mpz_t(), value.get_mpz_t()) != 0;
}

bool KgFactorization::divided_by(const mpz_class& q) const {
  return mpz_divisible_p(value.get_mpz_t(), q.get_mpz_t()) != 0;
}

mpz_class gsp_order(u32 g, u64 r) {
  if (!is_prime(r)) throw std::invalid_argument("gsp_order: r must be prime");
  if (g < 1) throw std::invalid_argument("gsp_order: g must be positive");
  mpz_class rz(static_cast<unsigned long>(r));
  mpz_class order = rz - 1;
  mpz_class centre;
  mpz_pow_ui(centre.get_mpz_t(), rz.get_mpz_t(), static_cast<unsigned long>(g) * g);
  order *= centre;
  for (u32 i = 1; i <= g; ++i) {
    mpz_class term;
    mpz_pow_ui(term.get_mpz_t(), rz.get_mpz_t(), 2ul * i);
    order *= term - 1;
  }
  return order;
}

mpz_class kg_sampled(u32 g, u64 bound) {
  return kg_sampled_above(g, 2, bound);
}

mpz_class kg_sampled_above(u32 g, u64 m, u64 bound) {
  if (bound > std::numeric_limits<u32>::max())
    throw std::invalid_argument("kg_sampled: bound too large");
  mpz_class acc = 0;
  for (u32 r : primes_up_to(static_cast<u32>(bound))) {
    if (r <= m) continue;
    mpz_class o = gsp_order(g, r);
    mpz_gcd(acc.get_mpz_t(), acc.get_mpz_t(), o.get_mpz_t());
    if (acc == 1) break;
  }
  if (acc == 0) throw std::invalid_argument("kg_sampled: no primes in range");
  return acc;
}

u32 kg_exponent_min(u32 g, u64 q) {
  // nu_q(F(u)) for F(u) = (u-1) prod_{i=1..g} (u^2i - 1), minimized over all
  // units u. A residue class mod q^level determines each factor mod q^level:
  // a nonzero value pins the factor's valuation exactly for every refinement,
  // a zero value only gives >= level. Classes whose valuation lower bound
  // (sum of exact parts plus level per unresolved factor) reaches the best
  // fully-resolved value are pruned; the rest are refined one q-adic digit at
  // a time. Every unit class is eventually resolved or pruned, so the best
  // value found is the true minimum.
  mpz_class qz(static_cast<unsigned long>(q));
  mpz_class modulus = qz;
  std::vector<mpz_class> frontier;
  for (u64 u = 1; u < q; ++u) frontier.emplace_back(static_cast<unsigned long>(u));

  const u32 kInfinity = std::numeric_limits<u32>::max();
  u32 best = kInfinity;
  u32 level = 1;

  while (!frontier.empty()) {
    std::vector<mpz_class> refine;
    for (const mpz_class& u : frontier) {
      u64 exact_sum = 0;
      u32 unresolved = 0;
      for (u32 i = 0; i <= g; ++i) {
        mpz_class term;
        if (i == 0) {
          term = (u - 1) % modulus;
        } else {
          mpz_class e(2ul * i);
          mpz_powm(term.get_mpz_t(), u.get_mpz_t(), e.get_mpz_t(),
                   modulus.get_mpz_t());
          term = (term - 1) % modulus;
        }
        term = ((term % modulus) + modulus) % modulus;
        if (term == 0)
          ++unresolved;
        else
          exact_sum += mpz_valuation(term, qz);
      }
      if (unresolved == 0) {
        if (exact_sum < best) best = static_cast<u32>(exact_sum);
      } else if (exact_sum + static_cast<u64>(unresolved) * level < best) {
        refine.push_back(u);
      }
    }
    if (refine.empty()) break;
    frontier.clear();
    for (const mpz_class& u : refine)
      for (u64 t = 0; t < q; ++t)
        frontier.push_back(u + modulus * static_cast<unsigned long>(t));
    modulus *= qz;
    ++level;
  }
  if (best == kInfinity) throw std::logic_error("kg_exponent_min: no exact class found");
  return best;
}

KgFactorization kg_exact(u32 g) {
  KgFactorization kg;
  kg.g = g;
  kg.value = 1;
  for (u32 q : primes_up_to(2 * g + 1)) {
    u32 e = kg_exponent_min(g, q);
    if (e == 0) continue;
    kg.factors.emplace_back(q, e);
    mpz_class qe;
    mpz_ui_pow_ui(qe.get_mpz_t(), q, e);
    kg.value *= qe;
  }
  mpz_class sampled = kg_sampled(g, 10000);
  if (sampled != kg.value)
    throw std::logic_error("kg_exact: exact and sampled values disagree for g=" +
                           std::to_string(g));
  return kg;
}

bool kg_stability(u32 g, u64 m, u64 bound) {
  return kg_stability(g, m, bound, kg_exact(g));
}

bool kg_stability(u32 g, u64 m, u64 bound, const KgFactorization& kg) {
  if (!(2 < m && m < bound)) throw std::invalid_argument("kg_stability: need 2 < m < bound");
  return kg_sampled_above(g, m, bound) == kg.value;
}

}  // namespace cartancert
