#include <doctest.h>

#include <random>
#include <set>

#include "cartancert/metacyclic.hpp"
#include "cartancert/normalizer.hpp"
#include "oracles.hpp"

using namespace cartancert;

TEST_CASE("word arithmetic in the (3,1) shape") {
  GroupShape s = GroupShape::standard(3, 1);
  CHECK(s.e == 8);
  CHECK(s.t == 4);
  CHECK(s.bmod == 2);
  // y x = x^3 y
  CHECK(word_mul(s, Word{0, 1}, Word{1, 0}) == Word{3, 1});
  // y^2 = x^4 (the carry relation y^2d = x^(e/2))
  CHECK(word_mul(s, Word{0, 1}, Word{0, 1}) == Word{4, 0});
  // order of x y
  CHECK(word_order(s, Word{1, 1}) == 8);
}

TEST_CASE("group laws hold on random words") {
  for (GroupShape s : {GroupShape::standard(3, 2), GroupShape::standard(2, 3),
                       GroupShape::special33()}) {
    std::mt19937_64 rng(s.e);
    for (int i = 0; i < 500; ++i) {
      Word u{rng() % s.e, rng() % s.bmod};
      Word v{rng() % s.e, rng() % s.bmod};
      Word w{rng() % s.e, rng() % s.bmod};
      CHECK(word_mul(s, word_mul(s, u, v), w) == word_mul(s, u, word_mul(s, v, w)));
      CHECK(word_is_identity(word_mul(s, u, word_inv(s, u))));
      CHECK(word_is_identity(word_mul(s, word_inv(s, u), u)));
    }
  }
}

TEST_CASE("abelianization") {
  GroupShape s = GroupShape::standard(5, 2);
  CHECK(abelianization(s, Word{4, 0}) == std::pair<u64, u64>{0, 0});  // x^(p-1)
  CHECK(abelianization(s, Word{0, 1}) == std::pair<u64, u64>{0, 1});  // y
  std::mt19937_64 rng(99);
  for (int i = 0; i < 1000; ++i) {
    Word u{rng() % s.e, rng() % s.bmod};
    Word v{rng() % s.e, rng() % s.bmod};
    auto lhs = abelianization(s, word_mul(s, u, v));
    auto au = abelianization(s, u);
    auto av = abelianization(s, v);
    CHECK(lhs.first == (au.first + av.first) % s.ab_modulus());
    CHECK(lhs.second == (au.second + av.second) % s.bmod);
  }
  // kernel order = p^d + 1
  CHECK(s.derived_order() == 26);
}

TEST_CASE("derived subgroup") {
  SUBCASE("(3,1): order 4 by full enumeration") {
    DerivedReport rep = derived_subgroup_check(GroupShape::standard(3, 1));
    CHECK(rep.pass);
    CHECK(rep.exhaustive);
    CHECK(rep.order == 4);
    CHECK(rep.generator == Word{2, 0});
  }
  SUBCASE("(2,2): [N,N] = C of order 5") {
    DerivedReport rep = derived_subgroup_check(GroupShape::standard(2, 2));
    CHECK(rep.pass);
    CHECK(rep.order == 5);
    CHECK(rep.generator == Word{1, 0});
  }
  SUBCASE("(3,2): order 10") {
    DerivedReport rep = derived_subgroup_check(GroupShape::standard(3, 2));
    CHECK(rep.pass);
    CHECK(rep.order == 10);
  }
  SUBCASE("structured path agrees with enumeration on a small shape") {
    // (5,1): |N| = 48; force both paths to agree on order/result
    GroupShape s = GroupShape::standard(5, 1);
    DerivedReport rep = derived_subgroup_check(s);
    CHECK(rep.pass);
    CHECK(rep.order == 6);
  }
  SUBCASE("conjugation by y acts on the derived subgroup by multiplication by p") {
    GroupShape s = GroupShape::standard(3, 2);
    Word y{0, 1}, yi = word_inv(s, y);
    for (u64 j = 0; j < s.derived_order(); ++j) {
      Word h{(j * s.ab_modulus()) % s.e, 0};
      CHECK(word_mul(s, word_mul(s, y, h), yi) ==
            Word{(j * s.ab_modulus() * s.p) % s.e, 0});
    }
  }
}

TEST_CASE("matrix-word consistency") {
  NormalizerData nd = build_normalizer(3, 1);
  ConsistencyReport rep = matrix_word_consistency(nd.shape(), nd.X, nd.Y);
  CHECK(rep.pass);
  CHECK(rep.samples == 1000);
  // a wrong matrix pair is rejected
  ConsistencyReport bad = matrix_word_consistency(nd.shape(), nd.Y, nd.X);
  CHECK_FALSE(bad.pass);
}

TEST_CASE("splitting of the abelianization extension") {
  SUBCASE("p = 2 splits with w = y") {
    for (u32 d : {1u, 2u, 3u, 4u}) {
      SplitReport rep = extension_splits(GroupShape::standard(2, d));
      CHECK(rep.splits);
      REQUIRE(rep.section_w.has_value());
      CHECK(*rep.section_w == Word{0, 1});
    }
  }
  SUBCASE("odd p does not split") {
    CHECK_FALSE(extension_splits(GroupShape::standard(3, 1)).splits);
    CHECK_FALSE(extension_splits(GroupShape::standard(3, 2)).splits);
    CHECK_FALSE(extension_splits(GroupShape::standard(5, 1)).splits);
  }
  SUBCASE("agreement with the 2-cocycle oracle on all small shapes") {
    std::vector<GroupShape> shapes;
    for (u32 d : {1u, 2u, 3u, 4u}) shapes.push_back(GroupShape::standard(2, d));
    shapes.push_back(GroupShape::standard(3, 1));
    shapes.push_back(GroupShape::standard(5, 1));
    shapes.push_back(GroupShape::standard(7, 1));
    shapes.push_back(GroupShape::standard(3, 2));
    for (const GroupShape& s : shapes) {
      REQUIRE(s.order() <= 200);
      CHECK(extension_splits(s).splits == oracles::extension_splits_by_cocycle(s));
    }
  }
}

TEST_CASE("the special (3,3) shape") {
  GroupShape s = GroupShape::special33();
  CHECK(s.order() == 78);
  CHECK(s.ab_modulus() == 1);
  CHECK(s.derived_order() == 13);
  CHECK(word_order(s, Word{1, 0}) == 13);
  CHECK(word_order(s, Word{0, 1}) == 6);
  // semidirect: splits with w = y
  SplitReport rep = extension_splits(s);
  CHECK(rep.splits);
  CHECK(oracles::extension_splits_by_cocycle(s));
  // normal forms are unique
  std::set<std::pair<u64, u64>> seen;
  for (u64 a = 0; a < s.e; ++a)
    for (u64 b = 0; b < s.bmod; ++b) seen.insert({a, b});
  CHECK(seen.size() == 78);
}
