#include "cartancert/normalizer.hpp"

#include <stdexcept>
#include <unordered_set>

namespace cartancert {

namespace {

std::string matrix_key(const FpMat& m) {
  std::string key;
  key.reserve(m.a.size());
  for (u32 v : m.a) key.push_back(static_cast<char>(v));
  return key;
}

void require(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error("normalizer construction: " + what);
}

}  // namespace

NormalizerData build_normalizer(u64 p, u32 d) {
  NormalizerData nd;
  nd.p = p;
  nd.d = d;
  nd.tower = std::make_shared<FieldTower>(build_tower(p, d));
  const FieldTower& t = *nd.tower;
  nd.e = (p == 2) ? t.k_order() + 1 : t.e();

  nd.gram = std::make_shared<GramForm>(gram_matrix(t));
  nd.x = find_cartan_generator(t);
  nd.X = multiply_operator_matrix(t, nd.x);

  if (p == 2) {
    nd.Y = alpha_frobenius_matrix(t, t.l_one(), 1);
  } else {
    nd.alpha_search = find_alpha(t);
    nd.alpha = nd.alpha_search->alpha;
    nd.Y = alpha_frobenius_matrix(t, *nd.alpha, 1);
  }

  u64 expected_order_x = (p == 2) ? t.k_order() + 1 : t.e();
  nd.order_x = t.l_mult_order(nd.x);
  require(nd.order_x == expected_order_x, "order(x) != e");
  require(nd.X.pow(nd.order_x).is_identity(), "X^e != 1");

  u64 expected_order_y = (p == 2) ? 2 * d : 4 * d;
  nd.order_y = matrix_order(nd.Y, 4 * d);
  require(nd.order_y == expected_order_y, "order(Y) wrong");

  auto sim_y = similitude_factor(nd.Y, nd.gram->j);
  require(sim_y.has_value() && *sim_y == 1, "Y not in Sp");

  auto sim_x = similitude_factor(nd.X, nd.gram->j);
  require(sim_x.has_value(), "X not a similitude");
  auto norm_x = t.k_as_prime_field(t.norm_l_to_k(nd.x));
  require(norm_x.has_value(), "Norm(x) outside F_p");
  require(*sim_x == *norm_x % p, "similitude(X) != Norm(x)");
  nd.sim_x = *sim_x;

  FpMat yinv = *nd.Y.inverse();
  require(nd.Y * nd.X * yinv == nd.X.pow(p), "Y X Y^-1 != X^p");

  if (p != 2) {
    // y^2d = x^(e/2) = -1 in C.
    require(nd.Y.pow(2 * d) == FpMat::identity(nd.Y.p, nd.Y.n).scaled(nd.Y.p - 1),
            "Y^2d != -1");
  }
  return nd;
}

PresentationReport verify_presentation(const NormalizerData& nd) {
  PresentationReport rep;
  auto check = [&](const std::string& name, bool ok) {
    rep.checks.push_back({name, ok});
    if (!ok && rep.first_failure.empty()) rep.first_failure = name;
    return ok;
  };

  u64 e = nd.e;
  u32 two_d = 2 * nd.d;
  bool ok = true;

  ok &= check("x^e = 1", nd.X.pow(e).is_identity());
  for (auto [q, ex] : factorize(e))
    ok &= check("x^(e/" + std::to_string(q) + ") != 1",
                !nd.X.pow(e / q).is_identity());

  if (nd.p == 2) {
    ok &= check("y^2d = 1", nd.Y.pow(two_d).is_identity());
  } else {
    ok &= check("y^2d = x^(e/2)", nd.Y.pow(two_d) == nd.X.pow(e / 2));
  }
  ok &= check("order(y)", nd.order_y == ((nd.p == 2) ? two_d : 2 * two_d));

  FpMat yinv = *nd.Y.inverse();
  ok &= check("y x y^-1 = x^p", nd.Y * nd.X * yinv == nd.X.pow(nd.p));

  // Group order by normal-form counting: all X^a Y^b must be distinct.
  std::vector<FpMat> ypow;
  ypow.reserve(two_d);
  FpMat cur = FpMat::identity(nd.Y.p, nd.Y.n);
  for (u32 b = 0; b < two_d; ++b) {
    ypow.push_back(cur);
    cur = cur * nd.Y;
  }
  std::unordered_set<std::string> seen;
  seen.reserve(e * two_d * 2);
  FpMat xa = FpMat::identity(nd.X.p, nd.X.n);
  for (u64 a = 0; a < e; ++a) {
    for (u32 b = 0; b < two_d; ++b) seen.insert(matrix_key(xa * ypow[b]));
    xa = xa * nd.X;
  }
  rep.group_order = seen.size();
  ok &= check("|N| = 2d*e", rep.group_order == e * two_d);

  rep.pass = ok;
  return rep;
}

SimilitudeReport similitude_character_check(const NormalizerData& nd) {
  SimilitudeReport rep;
  u32 p = static_cast<u32>(nd.p);
  auto fail = [&](const std::string& why) {
    if (rep.first_failure.empty()) rep.first_failure = why;
    return rep;
  };

  auto sx = similitude_factor(nd.X, nd.gram->j);
  auto sy = similitude_factor(nd.Y, nd.gram->j);
  if (!sx || !sy) return fail("generator not a similitude");
  rep.sim_x = *sx;
  rep.sim_y = *sy;
  if (*sy != 1) return fail("similitude(Y) != 1");

  auto norm_x = nd.tower->k_as_prime_field(nd.tower->norm_l_to_k(nd.x));
  if (!norm_x || *sx != *norm_x % p) return fail("similitude(X) != Norm(x)");

  // Values of the character on N are the powers of sim_x.
  std::unordered_set<u32> image;
  u64 v = 1;
  do {
    image.insert(static_cast<u32>(v));
    v = v * rep.sim_x % p;
  } while (v != 1);
  rep.surjective = (image.size() == p - 1);
  if (!rep.surjective) return fail("similitude character not surjective");

  rep.pass = true;
  return rep;
}

}  // namespace cartancert
