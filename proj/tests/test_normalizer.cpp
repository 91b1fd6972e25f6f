#include <doctest.h>

#include "cartancert/normalizer.hpp"

using namespace cartancert;

TEST_CASE("(2,1): |C| = 3, |N| = 6") {
  NormalizerData nd = build_normalizer(2, 1);
  CHECK(nd.order_x == 3);
  CHECK(nd.order_y == 2);
  PresentationReport rep = verify_presentation(nd);
  CHECK(rep.pass);
  CHECK(rep.group_order == 6);
}

TEST_CASE("(3,1): e = 8, order(Y) = 4, YXY^-1 = X^3") {
  NormalizerData nd = build_normalizer(3, 1);
  CHECK(nd.e == 8);
  CHECK(nd.order_y == 4);
  CHECK(nd.Y * nd.X * *nd.Y.inverse() == nd.X.pow(3));
  // y^2d = x^(e/2)
  CHECK(nd.Y.pow(2) == nd.X.pow(4));
  PresentationReport rep = verify_presentation(nd);
  CHECK(rep.pass);
  CHECK(rep.group_order == 16);
}

TEST_CASE("(2,2): split case, Y^4 = 1") {
  NormalizerData nd = build_normalizer(2, 2);
  CHECK(nd.Y.pow(4).is_identity());
  PresentationReport rep = verify_presentation(nd);
  CHECK(rep.pass);
  CHECK(rep.group_order == 20);
}

TEST_CASE("(3,2): |C| = 20, |C_1| = 10, order(Y) = 8, |N| = 80") {
  NormalizerData nd = build_normalizer(3, 2);
  CHECK(nd.order_x == 20);
  CHECK(nd.order_y == 8);
  PresentationReport rep = verify_presentation(nd);
  CHECK(rep.pass);
  CHECK(rep.group_order == 80);

  // C_1 = <X> with similitude 1 is exactly <X^(p-1)>, of order p^d + 1
  const FpMat& j = nd.gram->j;
  u64 count = 0;
  FpMat cur = FpMat::identity(nd.X.p, nd.X.n);
  for (u64 k = 0; k < nd.e; ++k) {
    if (similitude_factor(cur, j) == 1) {
      ++count;
      CHECK(k % 2 == 0);  // k is a multiple of p-1 = 2
    }
    cur = cur * nd.X;
  }
  CHECK(count == 10);
}

TEST_CASE("similitude character") {
  SUBCASE("(3,1): similitude(X) generates F_3^x") {
    NormalizerData nd = build_normalizer(3, 1);
    SimilitudeReport rep = similitude_character_check(nd);
    CHECK(rep.pass);
    CHECK(rep.sim_x == 2);
    CHECK(rep.sim_y == 1);
    CHECK(rep.surjective);
  }
  SUBCASE("(3,2): similitude(Y) = 1") {
    NormalizerData nd = build_normalizer(3, 2);
    SimilitudeReport rep = similitude_character_check(nd);
    CHECK(rep.pass);
    CHECK(rep.sim_y == 1);
  }
  SUBCASE("p = 2: trivial character is surjective onto F_2^x") {
    NormalizerData nd = build_normalizer(2, 3);
    SimilitudeReport rep = similitude_character_check(nd);
    CHECK(rep.pass);
    CHECK(rep.surjective);
  }
}

TEST_CASE("conjugation by Y is the p-power map on all of <X>") {
  NormalizerData nd = build_normalizer(3, 2);
  FpMat yinv = *nd.Y.inverse();
  FpMat cur = FpMat::identity(nd.X.p, nd.X.n);
  for (u64 k = 0; k < nd.e; ++k) {
    CHECK(nd.Y * cur * yinv == cur.pow(3));
    cur = cur * nd.X;
  }
}

TEST_CASE("Y preserves the form exactly, X scales it by Norm(x)") {
  for (auto [p, d] : {std::pair<u64, u32>{3, 1}, {3, 2}, {5, 1}, {2, 2}}) {
    NormalizerData nd = build_normalizer(p, d);
    const FpMat& j = nd.gram->j;
    CHECK(similitude_factor(nd.Y, j) == 1);
    auto nrm = nd.tower->k_as_prime_field(nd.tower->norm_l_to_k(nd.x));
    CHECK(similitude_factor(nd.X, j) == *nrm % p);
  }
}
