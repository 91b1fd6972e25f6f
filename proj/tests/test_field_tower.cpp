#include <doctest.h>

#include <random>
#include <set>

#include "cartancert/field_tower.hpp"

using namespace cartancert;

TEST_CASE("tower (2,1): the unique irreducible quadratic") {
  FieldTower t = build_tower(2, 1);
  // l = F_4 defined by t^2 + t + 1, eta a root with tr_{l|k}(eta) = 1.
  CHECK(t.eta_s() == 1);
  CHECK(t.eta_w() == t.k_one());
  CHECK(t.trace_l_to_k(t.eta()) == t.k_one());
  CHECK(t.e() == 3);
}

TEST_CASE("tower (3,1): eta^2 = 2 generates F_3^x") {
  FieldTower t = build_tower(3, 1);
  CHECK(t.eta_s() == 0);
  CHECK(t.k_index(t.eta_w()) == 2);  // minimal polynomial t^2 - 2 = t^2 + 1
  CHECK(t.k_mult_order(t.eta_w()) == 2);
  // norm_{l|k}(eta) = eta^4 = (eta^2)^2 = 4 = 1
  CHECK(t.norm_l_to_k(t.eta()) == t.k_one());
}

TEST_CASE("tower (3,2): eta has multiplicative order 16") {
  FieldTower t = build_tower(3, 2);
  CHECK(t.l_mult_order(t.eta()) == 16);
  CHECK(t.k_mult_order(t.eta_w()) == 8);  // eta^2 generates F_9^x
  CHECK(t.k_trace_to_p(t.k_one()) == 2);  // trace of 1 is d mod p
  CHECK(t.eta() == t.l_from_pair(t.k_zero(), t.k_one()));  // eta not in k
}

TEST_CASE("rejects non-prime characteristic") {
  CHECK_THROWS(build_tower(6, 1));
  CHECK_THROWS(build_tower(1, 2));
}

TEST_CASE("frobenius and trace identities") {
  FieldTower t = build_tower(3, 2);
  std::mt19937_64 rng(41);
  for (int i = 0; i < 1000; ++i) {
    TowerElem x = t.l_elem(rng() % t.l_order());
    CHECK(t.frobenius_power(x, 2 * t.d()) == x);
    // transitivity against the direct sum of all 2d conjugates
    TowerElem acc = t.l_zero();
    for (u32 j = 0; j < 2 * t.d(); ++j) acc = t.l_add(acc, t.frobenius_power(x, j));
    CHECK(t.k_is_zero(t.eta_part(acc)));
    auto direct = t.k_as_prime_field(t.k_part(acc));
    REQUIRE(direct.has_value());
    CHECK(*direct == t.trace_l_to_p(x));
  }
}

TEST_CASE("field axioms sample") {
  FieldTower t = build_tower(5, 1);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    TowerElem a = t.l_elem(rng() % t.l_order());
    TowerElem b = t.l_elem(rng() % t.l_order());
    TowerElem c = t.l_elem(rng() % t.l_order());
    CHECK(t.l_mul(a, t.l_add(b, c)) == t.l_add(t.l_mul(a, b), t.l_mul(a, c)));
    CHECK(t.l_mul(a, b) == t.l_mul(b, a));
    if (!t.l_is_zero(a)) CHECK(t.l_mul(a, t.l_inv(a)) == t.l_one());
  }
  CHECK_THROWS(t.l_inv(t.l_zero()));
}

TEST_CASE("cartan generator orders") {
  SUBCASE("(2,1): order 3 in F_4") {
    FieldTower t = build_tower(2, 1);
    CHECK(t.l_mult_order(find_cartan_generator(t)) == 3);
  }
  SUBCASE("(3,1): e = 8, generator of all of F_9") {
    FieldTower t = build_tower(3, 1);
    TowerElem x = find_cartan_generator(t);
    CHECK(t.l_mult_order(x) == 8);
    auto nrm = t.k_as_prime_field(t.norm_l_to_k(x));
    REQUIRE(nrm.has_value());
    CHECK(t.k_mult_order(t.k_scalar(*nrm)) == 2);  // norm generates F_3^x
  }
  SUBCASE("(3,2): e = 20") {
    FieldTower t = build_tower(3, 2);
    TowerElem x = find_cartan_generator(t);
    CHECK(t.l_mult_order(x) == 20);
    // (p-1)-th power has order p^d + 1
    CHECK(t.l_mult_order(t.l_pow(x, 2)) == 10);
    auto nrm = t.k_as_prime_field(t.norm_l_to_k(x));
    REQUIRE(nrm.has_value());
    CHECK(t.k_mult_order(t.k_scalar(*nrm)) == 2);
  }
}

TEST_CASE("norm surjectivity by image counting") {
  for (auto [p, d] : {std::pair<u64, u32>{2, 2}, {3, 1}, {3, 2}, {5, 1}, {2, 3}}) {
    FieldTower t = build_tower(p, d);
    std::set<u64> image;
    for (u64 idx = 1; idx < t.l_order(); ++idx)
      image.insert(t.k_index(t.norm_l_to_k(t.l_elem(idx))));
    CHECK(image.size() == t.k_order() - 1);
  }
}

TEST_CASE("alpha search") {
  SUBCASE("(3,1): norm equation, no solution in k (p = 3 mod 4)") {
    FieldTower t = build_tower(3, 1);
    AlphaResult res = find_alpha(t);
    TowerElem target = t.l_inv(t.l_pow(t.eta(), 2));  // eta^(1-p)
    CHECK(t.l_from_k(t.norm_l_to_k(res.alpha)) == target);
    CHECK_FALSE(res.in_k_possible);
    // negative direction by exhaustion: no beta in k^x with beta^2 = target
    for (u64 idx = 1; idx < t.k_order(); ++idx) {
      KElem b = t.k_elem(idx);
      CHECK_FALSE(t.l_from_k(t.k_mul(b, b)) == target);
    }
  }
  SUBCASE("(5,1): alpha can be taken in k (p = 1 mod 4)") {
    FieldTower t = build_tower(5, 1);
    AlphaResult res = find_alpha(t);
    CHECK(res.in_k_possible);
    REQUIRE(res.k_alpha.has_value());
    TowerElem target = t.l_inv(t.l_pow(t.eta(), 4));
    CHECK(t.l_from_k(t.k_mul(*res.k_alpha, *res.k_alpha)) == target);
  }
  SUBCASE("not applicable for p = 2") {
    FieldTower t = build_tower(2, 1);
    CHECK_THROWS(find_alpha(t));
  }
}
