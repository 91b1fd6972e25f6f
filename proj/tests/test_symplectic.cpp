#include <doctest.h>

#include <random>

#include "cartancert/field_tower.hpp"
#include "cartancert/normalizer.hpp"
#include "cartancert/symplectic.hpp"

using namespace cartancert;

TEST_CASE("wedge pairing values") {
  SUBCASE("(3,2): <(1,0),(0,1)> = tr(1) = 2") {
    FieldTower t = build_tower(3, 2);
    TowerElem v1 = t.l_from_pair(t.k_one(), t.k_zero());
    TowerElem v2 = t.l_from_pair(t.k_zero(), t.k_one());
    CHECK(wedge_pairing(t, v1, v2) == 2);
  }
  SUBCASE("(3,1): <(1,1),(1,2)> = tr(2-1) = 1") {
    FieldTower t = build_tower(3, 1);
    TowerElem v1 = t.l_from_pair(t.k_one(), t.k_one());
    TowerElem v2 = t.l_from_pair(t.k_one(), t.k_scalar(2));
    CHECK(wedge_pairing(t, v1, v2) == 1);
  }
  SUBCASE("alternating") {
    FieldTower t = build_tower(5, 2);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
      TowerElem v = t.l_elem(rng() % t.l_order());
      CHECK(wedge_pairing(t, v, v) == 0);
    }
  }
}

TEST_CASE("gram matrices") {
  SUBCASE("(2,1): the hyperbolic 2x2 pattern") {
    FieldTower t = build_tower(2, 1);
    GramForm j = gram_matrix(t);
    CHECK(j.j.at(0, 0) == 0);
    CHECK(j.j.at(1, 1) == 0);
    CHECK(j.j.at(0, 1) == 1);
    CHECK(j.j.at(1, 0) == 1);  // -1 = 1 in characteristic 2
  }
  SUBCASE("(3,1) antisymmetric invertible; (3,2) rank 4") {
    for (auto [p, d] : {std::pair<u64, u32>{3, 1}, {3, 2}}) {
      FieldTower t = build_tower(p, d);
      GramForm j = gram_matrix(t);
      CHECK(j.j.det() != 0);
      for (u32 a = 0; a < j.j.n; ++a)
        for (u32 b = 0; b < j.j.n; ++b)
          CHECK((j.j.at(a, b) + j.j.at(b, a)) % j.j.p == 0);
    }
  }
  SUBCASE("gram agrees with the pairing on random vectors") {
    FieldTower t = build_tower(3, 2);
    GramForm j = gram_matrix(t);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
      TowerElem v = t.l_elem(rng() % t.l_order());
      TowerElem w = t.l_elem(rng() % t.l_order());
      u64 via_gram = 0;
      for (u32 a = 0; a < j.j.n; ++a)
        for (u32 b = 0; b < j.j.n; ++b)
          via_gram = (via_gram + u64{v.c[a]} * j.j.at(a, b) % 3 * w.c[b]) % 3;
      CHECK(via_gram == wedge_pairing(t, v, w));
    }
  }
}

TEST_CASE("operator matrices") {
  FieldTower t = build_tower(3, 2);
  SUBCASE("multiplicativity and injectivity") {
    CHECK(multiply_operator_matrix(t, t.l_one()).is_identity());
    FpMat me = multiply_operator_matrix(t, t.eta());
    TowerElem eta2 = t.l_mul(t.eta(), t.eta());
    CHECK(me * me == multiply_operator_matrix(t, eta2));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
      TowerElem a = t.l_elem(1 + rng() % (t.l_order() - 1));
      TowerElem b = t.l_elem(1 + rng() % (t.l_order() - 1));
      CHECK(multiply_operator_matrix(t, t.l_mul(a, b)) ==
            multiply_operator_matrix(t, a) * multiply_operator_matrix(t, b));
      if (!(a == b))
        CHECK_FALSE(multiply_operator_matrix(t, a) == multiply_operator_matrix(t, b));
    }
    CHECK_THROWS(multiply_operator_matrix(t, t.l_zero()));
  }
  SUBCASE("alpha-twisted frobenius preserves the form iff the norm equation holds") {
    FieldTower t31 = build_tower(3, 1);
    GramForm j = gram_matrix(t31);
    AlphaResult res = find_alpha(t31);
    FpMat y = alpha_frobenius_matrix(t31, res.alpha, 1);
    CHECK(similitude_factor(y, j.j) == 1);
    // an alpha violating the norm equation does not preserve the form
    TowerElem bad = t31.l_mul(res.alpha, t31.eta());
    FpMat ybad = alpha_frobenius_matrix(t31, bad, 1);
    CHECK_FALSE(similitude_factor(ybad, j.j) == 1);
  }
}

TEST_CASE("similitude factors") {
  FieldTower t = build_tower(3, 2);
  GramForm j = gram_matrix(t);
  u32 n = 2 * t.d();
  CHECK(similitude_factor(FpMat::identity(3, n), j.j) == 1);
  CHECK(similitude_factor(FpMat::identity(3, n).scaled(2), j.j) == 1);  // c^2 = 4 = 1
  TowerElem x = find_cartan_generator(t);
  auto nrm = t.k_as_prime_field(t.norm_l_to_k(x));
  CHECK(similitude_factor(multiply_operator_matrix(t, x), j.j) == *nrm % 3);
  FpMat zero(3, n);
  CHECK_FALSE(similitude_factor(zero, j.j).has_value());
}

TEST_CASE("SL(2,k) image lands in Sp") {
  FieldTower t = build_tower(3, 2);
  GramForm j = gram_matrix(t);
  std::mt19937_64 rng(17);
  int found = 0;
  while (found < 1000) {
    KElem a = t.k_elem(rng() % t.k_order());
    KElem b = t.k_elem(rng() % t.k_order());
    KElem c = t.k_elem(rng() % t.k_order());
    if (t.k_is_zero(a)) continue;
    // d = (1 + bc) / a
    KElem d = t.k_mul(t.k_add(t.k_one(), t.k_mul(b, c)), t.k_inv(a));
    FpMat m = k_linear_matrix(t, a, b, c, d);
    CHECK(similitude_factor(m, j.j) == 1);
    ++found;
  }
}

TEST_CASE("embedding into larger symplectic groups") {
  NormalizerData nd = build_normalizer(3, 1);
  const FpMat& j = nd.gram->j;
  SUBCASE("d = g leaves the matrix unchanged") {
    CHECK(embed_gsp(nd.X, j, 1) == nd.X);
    CHECK(embed_gram(j, 1) == j);
  }
  SUBCASE("identity maps to identity") {
    CHECK(embed_gsp(FpMat::identity(3, 2), j, 3) == FpMat::identity(3, 6));
  }
  SUBCASE("similitude preserved and homomorphism, (d,g,p) = (1,2,3)") {
    FpMat jg = embed_gram(j, 2);
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
      FpMat m1 = nd.X.pow(rng() % 8) * nd.Y.pow(rng() % 4);
      FpMat m2 = nd.X.pow(rng() % 8) * nd.Y.pow(rng() % 4);
      CHECK(similitude_factor(embed_gsp(m1, j, 2), jg) == similitude_factor(m1, j));
      CHECK(embed_gsp(m1 * m2, j, 2) == embed_gsp(m1, j, 2) * embed_gsp(m2, j, 2));
      CHECK(embed_gsp(*m1.inverse(), j, 2) == *embed_gsp(m1, j, 2).inverse());
    }
    CHECK_THROWS(embed_gsp(nd.X.pow(3), j, 0));
  }
}
