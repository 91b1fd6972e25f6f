#include <doctest.h>

#include "cartancert/bigint.hpp"
#include "cartancert/metacyclic.hpp"
#include "cartancert/symplectic.hpp"
#include "cartancert/witness.hpp"

using namespace cartancert;

TEST_CASE("witness selection") {
  SUBCASE("(2,5): d = 2, q = 13") {
    KgFactorization kg = kg_exact(2);
    Witness w = find_witness(2, 5, kg);
    REQUIRE_FALSE(w.exceptional);
    CHECK(w.d == 2);
    CHECK(w.q == 13);
    // 13 > 2g+1 = 5, so it cannot divide K_2
    CHECK_FALSE(kg.divided_by(13));
  }
  SUBCASE("(2,2) is exceptional") {
    KgFactorization kg = kg_exact(2);
    Witness w = find_witness(2, 2, kg);
    CHECK(w.exceptional);
    CHECK(w.scan.size() == 2);
    for (const auto& row : w.scan)
      for (const auto& v : row.prime_powers) CHECK(v.divides_kg);
  }
  SUBCASE("(2,3): prime powers of 4 and 10 all divide K_2") {
    KgFactorization kg = kg_exact(2);
    Witness w = find_witness(2, 3, kg);
    CHECK(w.exceptional);
    CHECK(kg.divided_by(4));
    CHECK(kg.divided_by(5));
  }
  SUBCASE("independent arbitrary-precision recheck of a witness") {
    KgFactorization kg = kg_exact(4);
    Witness w = find_witness(4, 3, kg);
    REQUIRE_FALSE(w.exceptional);
    mpz_class pd1;
    mpz_class three(3);
    mpz_pow_ui(pd1.get_mpz_t(), three.get_mpz_t(), w.d);
    pd1 += 1;
    CHECK(mpz_divisible_p(pd1.get_mpz_t(), w.q.get_mpz_t()));
    mpz_class gcd;
    mpz_gcd(gcd.get_mpz_t(), w.q.get_mpz_t(), kg.value.get_mpz_t());
    CHECK(gcd < w.q);
  }
}

TEST_CASE("zsigmondy-style scan") {
  SUBCASE("(7,3): some q > 15 exists") {
    ZsigmondyResult r = zsigmondy_scan(7, 3);
    CHECK(r.q > 15);
    CHECK(r.d <= 7);
    CHECK(pow_mod(3, r.d, r.q) == r.q - 1);  // q | 3^d + 1
  }
  SUBCASE("(7,2): the scan succeeds and (7,43) is admissible") {
    ZsigmondyResult r = zsigmondy_scan(7, 2);
    CHECK(r.q == 17);  // 17 | 2^4 + 1, the smallest prime > 15 that qualifies
    CHECK(r.d == 4);
    // the pair singled out for this case: 43 | 2^7 + 1 = 129 and 43 is not
    // in the support of K_7 (support is bounded by 2g+1 = 15)
    CHECK(pow_mod(2, 7, 43) == 42);
    KgFactorization k7 = kg_exact(7);
    CHECK_FALSE(k7.divided_by(43));
    Witness w = find_witness(7, 2, k7);
    REQUIRE_FALSE(w.exceptional);
    CHECK(w.d == 4);
    CHECK(w.q == 17);
  }
  SUBCASE("prime counting bounds enforced") {
    CHECK(zsigmondy_scan(10, 5).pi_2g1 <= 8);
    CHECK_THROWS(zsigmondy_scan(3, 2));
  }
}

TEST_CASE("the order-78 subgroup of GSp(6, F_3)") {
  Group33 g = build_33_group();
  CHECK(g.order_x == 13);
  CHECK(g.order_y == 6);
  CHECK(g.group_order == 78);
  CHECK(g.sim_x == 1);  // X lands in Sp
  CHECK(g.sim_y == 2);  // so the similitude character is onto F_3^x
  CHECK(g.unique_order13);
  CHECK(g.Y * g.X * *g.Y.inverse() == g.X.pow(4));
  CHECK(g.X.pow(13).is_identity());
  CHECK(g.Y.pow(6).is_identity());
  // consistency with the abstract presentation
  ConsistencyReport rep = matrix_word_consistency(GroupShape::special33(), g.X, g.Y);
  CHECK(rep.pass);
}
