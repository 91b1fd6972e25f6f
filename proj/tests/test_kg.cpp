#include <doctest.h>

#include "cartancert/bigint.hpp"
#include "cartancert/kg.hpp"

using namespace cartancert;

TEST_CASE("symplectic group orders") {
  CHECK(gsp_order(1, 3) == 48);  // equals #GL(2, F_3)
  CHECK(gsp_order(2, 3) == 103680);
  CHECK(gsp_order(1, 2) == 6);   // formula instance; the gcd never uses r = 2
  CHECK_THROWS(gsp_order(1, 4));
}

TEST_CASE("sampled gcd: monotone and stabilized") {
  // fixture frozen from the oracle itself
  CHECK(kg_sampled(1, 10000) == 48);
  for (u32 g : {1u, 2u, 3u, 4u}) {
    mpz_class coarse = kg_sampled(g, 1000);
    mpz_class fine = kg_sampled(g, 10000);
    CHECK(mpz_divisible_p(coarse.get_mpz_t(), fine.get_mpz_t()));
    CHECK(coarse == fine);  // stabilization well below the bound
  }
}

TEST_CASE("exact values match the oracle") {
  KgFactorization k1 = kg_exact(1);
  CHECK(k1.value == 48);  // 2^4 * 3
  REQUIRE(k1.factors.size() == 2);
  CHECK(k1.factors[0] == std::pair<u64, u32>{2, 4});
  CHECK(k1.factors[1] == std::pair<u64, u32>{3, 1});

  KgFactorization k2 = kg_exact(2);
  CHECK(k2.value == kg_sampled(2, 10000));
  CHECK(k2.value == 11520);  // 2^8 * 3^2 * 5

  KgFactorization k3 = kg_exact(3);
  CHECK(k3.value == kg_sampled(3, 10000));
}

TEST_CASE("support and exponent bounds") {
  for (u32 g : {2u, 3u}) {
    KgFactorization kg = kg_exact(g);
    for (auto [q, e] : kg.factors) {
      CHECK(q <= 2 * g + 1);
      if (q > 2) CHECK(e < g * g);
    }
  }
}

TEST_CASE("per-prime minimum is attained by a small sampled prime") {
  KgFactorization k2 = kg_exact(2);
  u32 e2 = 0;
  for (auto [q, e] : k2.factors)
    if (q == 2) e2 = e;
  REQUIRE(e2 > 0);
  u32 best = 10000;
  for (u32 r : primes_up_to(1000)) {
    if (r == 2) continue;
    best = std::min(best, mpz_valuation(gsp_order(2, r), 2));
  }
  CHECK(best == e2);
}

TEST_CASE("stability against truncated prime ranges") {
  KgFactorization k2 = kg_exact(2);
  CHECK(kg_stability(2, 100, 10000, k2));
  CHECK(kg_stability(2, 7, 1000, k2));  // M excludes all primes <= 2g+1 = 5
  CHECK_THROWS(kg_stability(2, 2, 1000, k2));
}

TEST_CASE("divisibility of every sampled order") {
  KgFactorization k2 = kg_exact(2);
  for (u32 r : primes_up_to(500)) {
    if (r == 2) continue;
    CHECK(k2.divides(gsp_order(2, r)));
  }
}
