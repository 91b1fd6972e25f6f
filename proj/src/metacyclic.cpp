#include "cartancert/metacyclic.hpp"

#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace cartancert {

GroupShape GroupShape::standard(u64 p, u64 d) {
  if (!is_prime(p)) throw std::invalid_argument("shape: p must be prime");
  if (d < 1) throw std::invalid_argument("shape: d must be positive");
  GroupShape s;
  s.p = p;
  s.d = d;
  u64 pd = 1;
  for (u64 i = 0; i < d; ++i) pd *= p;
  s.e = (pd + 1) * (p - 1);
  s.bmod = 2 * d;
  s.act = p;
  s.t = (p == 2) ? 0 : s.e / 2;
  return s;
}

GroupShape GroupShape::special33() {
  GroupShape s;
  s.p = 3;
  s.d = 3;
  s.e = 13;
  s.bmod = 6;
  s.t = 0;
  s.act = 4;
  return s;
}

u64 GroupShape::ab_modulus() const {
  u64 r = std::gcd(e, act - 1);
  // y^bmod = x^t must die in the abelianization for N^ab to split as claimed.
  if (t % r != 0) throw std::logic_error("shape: twisted abelianization");
  return r;
}

Word word_mul(const GroupShape& s, const Word& u, const Word& v) {
  u64 bsum = u.b + v.b;
  u64 carry = bsum / s.bmod;  // 0 or 1
  u64 a = (u.a + mul_mod(v.a, pow_mod(s.act, u.b, s.e), s.e)) % s.e;
  if (carry) a = (a + s.t) % s.e;
  return Word{a, bsum % s.bmod};
}

Word word_inv(const GroupShape& s, const Word& u) {
  if (u.b == 0) return Word{(s.e - u.a % s.e) % s.e, 0};
  u64 b2 = s.bmod - u.b;
  // Solve (a, b)(a', b') = 1 with carry 1: a + a' act^b + t = 0 (mod e).
  u64 rhs = (2 * s.e - u.a % s.e - s.t % s.e) % s.e;
  u64 act_inv = *inv_mod(s.act, s.e);
  u64 a2 = mul_mod(rhs, pow_mod(act_inv, u.b, s.e), s.e);
  return Word{a2, b2};
}

Word word_pow(const GroupShape& s, Word u, u64 k) {
  Word result{0, 0};
  while (k > 0) {
    if (k & 1) result = word_mul(s, result, u);
    u = word_mul(s, u, u);
    k >>= 1;
  }
  return result;
}

u64 word_order(const GroupShape& s, const Word& u) {
  Word cur = u;
  u64 cap = s.order();
  for (u64 k = 1; k <= cap; ++k) {
    if (word_is_identity(cur)) return k;
    cur = word_mul(s, cur, u);
  }
  throw std::logic_error("word_order: no order within group bound");
}

bool word_is_identity(const Word& u) { return u.a == 0 && u.b == 0; }

std::pair<u64, u64> abelianization(const GroupShape& s, const Word& u) {
  return {u.a % s.ab_modulus(), u.b % s.bmod};
}

DerivedReport derived_subgroup_check(const GroupShape& s) {
  DerivedReport rep;
  u64 r = s.ab_modulus();
  u64 m = s.derived_order();
  rep.generator = Word{r % s.e, 0};
  rep.order = m;

  auto in_subgroup = [&](const Word& w) { return w.b == 0 && w.a % r == 0; };

  if (s.order() <= 4096) {
    rep.exhaustive = true;
    std::set<std::pair<u64, u64>> commutators;
    for (u64 a1 = 0; a1 < s.e; ++a1) {
      for (u64 b1 = 0; b1 < s.bmod; ++b1) {
        Word u{a1, b1};
        Word ui = word_inv(s, u);
        for (u64 a2 = 0; a2 < s.e; ++a2) {
          for (u64 b2 = 0; b2 < s.bmod; ++b2) {
            Word v{a2, b2};
            Word c = word_mul(s, word_mul(s, u, v),
                              word_mul(s, ui, word_inv(s, v)));
            commutators.insert({c.a, c.b});
          }
        }
      }
    }
    std::set<std::pair<u64, u64>> subgroup;
    for (u64 j = 0; j < m; ++j) subgroup.insert({(j * r) % s.e, 0});
    if (commutators != subgroup) {
      rep.detail = "commutator set differs from <x^r>";
      return rep;
    }
    rep.pass = true;
    return rep;
  }

  // Structured certification.
  Word x{1, 0}, y{0, 1};
  // (1) the generator x^r is a commutator [y, x^j] = x^(j(act-1)).
  auto sol = solve_linear_mod(s.act - 1, r, s.e);
  if (!sol) {
    rep.detail = "x^r not expressible as [y, x^j]";
    return rep;
  }
  Word xj{sol->first % s.e, 0};
  Word comm = word_mul(s, word_mul(s, y, xj),
                       word_mul(s, word_inv(s, y), word_inv(s, xj)));
  if (!(comm == rep.generator)) {
    rep.detail = "commutator witness failed";
    return rep;
  }
  // (2) quotient by <x^r> is abelian: [x, y] lies in the subgroup.
  Word cxy = word_mul(s, word_mul(s, x, y),
                      word_mul(s, word_inv(s, x), word_inv(s, y)));
  if (!in_subgroup(cxy)) {
    rep.detail = "[x,y] outside <x^r>";
    return rep;
  }
  // (3) <x^r> is normal; conjugation by y is the act-power map on exponents.
  Word yi = word_inv(s, y);
  for (u64 j = 0; j < m; ++j) {
    Word h{(j * r) % s.e, 0};
    Word conj = word_mul(s, word_mul(s, y, h), yi);
    if (!(conj == Word{mul_mod(j * r % s.e, s.act, s.e), 0})) {
      rep.detail = "conjugation action mismatch";
      return rep;
    }
  }
  rep.pass = true;
  return rep;
}

SplitReport extension_splits(const GroupShape& s) {
  SplitReport rep;
  u64 r = s.ab_modulus();
  u64 m = s.derived_order();

  std::vector<Word> ws;
  for (u64 j = 0; j < m; ++j) {
    Word w{(j * r) % s.e, 1};
    ++rep.pairs_searched;
    if (word_is_identity(word_pow(s, w, s.bmod))) ws.push_back(w);
  }
  if (r == 1) {
    if (!ws.empty()) {
      rep.splits = true;
      rep.section_w = ws.front();
    }
    return rep;
  }

  std::vector<Word> us;
  for (u64 j = 0; j < m; ++j) {
    Word u{(1 + j * r) % s.e, 0};
    if (word_is_identity(word_pow(s, u, r))) us.push_back(u);
  }
  for (const Word& u : us) {
    for (const Word& w : ws) {
      ++rep.pairs_searched;
      if (word_mul(s, u, w) == word_mul(s, w, u)) {
        rep.splits = true;
        rep.section_u = u;
        rep.section_w = w;
        return rep;
      }
    }
  }
  return rep;
}

ConsistencyReport matrix_word_consistency(const GroupShape& s, const FpMat& x,
                                          const FpMat& y, u32 samples, u64 seed) {
  ConsistencyReport rep;
  auto realize = [&](const Word& w) { return x.pow(w.a) * y.pow(w.b); };

  if (!x.pow(s.e).is_identity()) {
    rep.detail = "x^e != 1 in the matrix group";
    return rep;
  }
  FpMat yb = y.pow(s.bmod);
  FpMat xt = x.pow(s.t);
  if (!(yb == xt)) {
    rep.detail = "y^bmod != x^t in the matrix group";
    return rep;
  }
  auto yinv = y.inverse();
  if (!yinv || !(y * x * *yinv == x.pow(s.act))) {
    rep.detail = "conjugation relation fails in the matrix group";
    return rep;
  }

  std::mt19937_64 rng(seed);
  auto rand_word = [&]() {
    return Word{rng() % s.e, rng() % s.bmod};
  };
  for (u32 i = 0; i < samples; ++i) {
    Word u = rand_word(), v = rand_word();
    if (!(realize(word_mul(s, u, v)) == realize(u) * realize(v))) {
      rep.detail = "random word product mismatch";
      return rep;
    }
    ++rep.samples;
  }
  for (u32 i = 0; i < std::min<u32>(samples, 100); ++i) {
    Word u = rand_word();
    u64 wo = word_order(s, u);
    FpMat mu = realize(u);
    bool ok = mu.pow(wo).is_identity();
    for (auto [q, ex] : factorize(wo)) {
      if (!ok) break;
      if (mu.pow(wo / q).is_identity()) ok = false;
    }
    if (!ok) {
      rep.detail = "order mismatch on sample";
      return rep;
    }
  }
  rep.pass = true;
  return rep;
}

}  // namespace cartancert
