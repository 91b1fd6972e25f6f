#include "cartancert/obstructions.hpp"

#include <numeric>
#include <stdexcept>

namespace cartancert {

std::pair<u32, u32> decompose_2d(u32 d) {
  if (d < 1) throw std::invalid_argument("decompose_2d: d >= 1");
  u32 two_d = 2 * d;
  u32 n = 0;
  while (two_d % 2 == 0) {
    two_d /= 2;
    ++n;
  }
  return {n, two_d};
}

EmbeddingInstance find_ramified_primes(u64 p, u32 d, u64 cap) {
  if (p == 2) throw std::invalid_argument("find_ramified_primes: odd p required");
  if (!is_prime(p)) throw std::invalid_argument("find_ramified_primes: p must be prime");
  EmbeddingInstance inst;
  inst.p = p;
  inst.d = d;
  auto [n, d1] = decompose_2d(d);
  inst.n = n;
  inst.d1 = d1;
  inst.shape = GroupShape::standard(p, d);

  if (d1 > 1) {
    for (u64 cand = d1 + 1;; cand += d1) {
      if (cand > cap) throw SearchCapExceeded("N2 search cap exceeded");
      if (cand != p && is_prime(cand)) {
        inst.N2 = cand;
        break;
      }
    }
    inst.alphaN2 = (*inst.N2 - 1) / (2 * d1);
  }

  u64 res = (u64{1} << n) + 1;     // N1 = 2^n + 1 (mod 2^(n+1))
  u64 step = u64{1} << (n + 1);
  for (u64 cand = res;; cand += step) {
    if (cand > cap) throw SearchCapExceeded("N1 search cap exceeded");
    if (cand == p || (inst.N2 && cand == *inst.N2)) continue;
    if (!is_prime(cand)) continue;
    if (inst.N2 && cand % *inst.N2 != 1) continue;
    if (is_quadratic_residue(p % cand, cand)) continue;  // condition (c)
    inst.N1 = cand;
    break;
  }
  return inst;
}

namespace {

// CRT for coprime moduli m1, m2 (both small).
u64 crt(u64 a1, u64 m1, u64 a2, u64 m2) {
  u64 m = m1 * m2;
  for (u64 x = a1 % m1; x < m; x += m1) {
    if (x % m2 == a2 % m2) return x;
  }
  throw std::logic_error("crt: no solution");
}

}  // namespace

FrobeniusData frobenius_data(const EmbeddingInstance& inst) {
  FrobeniusData f;
  u64 p = inst.p;
  u32 two_d = 2 * inst.d;
  u64 two_n = u64{1} << inst.n;

  u64 gp = smallest_primitive_root(p);
  f.a_at_N1 = static_cast<u32>(discrete_log(gp, inst.N1 % p, p, p - 1));

  u64 g1 = smallest_primitive_root(inst.N1);
  u64 a1 = discrete_log(g1, p % inst.N1, inst.N1, inst.N1 - 1) % two_n;
  if (inst.d1 == 1) {
    f.a_at_p = static_cast<u32>(a1);  // 2d = 2^n here
  } else {
    u64 g2 = smallest_primitive_root(*inst.N2);
    u64 a2 = discrete_log(g2, p % *inst.N2, *inst.N2, *inst.N2 - 1) % inst.d1;
    f.a_at_p = static_cast<u32>(crt(a1, two_n, a2, inst.d1) % two_d);

    f.a_at_N2 = static_cast<u32>(discrete_log(gp, *inst.N2 % p, p, p - 1));
    u64 a1_n2 = discrete_log(g1, *inst.N2 % inst.N1, inst.N1, inst.N1 - 1) % two_n;
    u64 c2 = crt(a1_n2, two_n, 0, inst.d1) % two_d;
    f.b_at_N2 = static_cast<u32>((c2 / inst.d1) % two_n);
  }

  // Condition (c) forces the Frobenius at p to be odd; quadratic reciprocity
  // pins the parity at N1 (even exactly when d odd and p = 3 mod 4).
  bool a_p_odd = (f.a_at_p % 2 == 1);
  bool expect_even_at_N1 = (inst.d % 2 == 1) && (p % 4 == 3);
  f.parity_ok = a_p_odd && ((f.a_at_N1 % 2 == 0) == expect_even_at_N1);
  return f;
}

Word lift_at_infinity(const GroupShape& s) {
  if (s.p == 2) throw std::invalid_argument("lift_at_infinity: odd p required");
  Word w{(s.p - 1) / 2, s.d};
  if (!word_is_identity(word_mul(s, w, w)))
    throw std::logic_error("complex conjugation lift does not have order 2");
  return w;
}

namespace {

u64 geometric_sum_mod(u64 p, u32 terms, u64 mod) {
  // 1 + p + ... + p^(terms-1) mod `mod`
  u64 acc = 0, pw = 1 % mod;
  for (u32 i = 0; i < terms; ++i) {
    acc = (acc + pw) % mod;
    pw = mul_mod(pw, p, mod);
  }
  return acc;
}

u64 pd_plus_1(const GroupShape& s) { return s.e / (s.p - 1); }

}  // namespace

std::optional<TameLift> lift_at_p(const GroupShape& s, u32 a) {
  if (a % 2 == 0) return std::nullopt;
  u64 m = pd_plus_1(s);
  u64 eprime;
  if (a == 1) {
    eprime = 1;  // empty geometric sum, gcd(m, 0) = m
  } else {
    u64 sum = geometric_sum_mod(s.p, a - 1, m);
    eprime = m / std::gcd(m, sum);
  }
  u64 k = 0;
  if (eprime > 1) {
    auto sol = solve_linear_mod(s.p - 1, eprime - 1, eprime);  // k(p-1) = -1
    if (!sol) throw std::logic_error("lift_at_p: congruence unsolvable for odd a");
    k = sol->first;
  }
  TameLift lift;
  lift.place = Place::AtP;
  lift.local_prime = s.p;
  lift.lift_exponent = k;
  lift.sigma = Word{0, a};
  lift.tau = Word{(1 + k * (s.p - 1)) % s.e, 0};
  Word lhs = word_mul(s, word_mul(s, lift.sigma, lift.tau), word_inv(s, lift.sigma));
  lift.verified = (lhs == word_pow(s, lift.tau, s.p));
  if (!lift.verified) throw std::logic_error("lift_at_p: tame relation failed");
  return lift;
}

std::pair<u64, bool> eprime_parity(const GroupShape& s, u32 a) {
  if (a < 2) throw std::invalid_argument("eprime_parity: a >= 2 required");
  u64 m = pd_plus_1(s);
  u64 sum = geometric_sum_mod(s.p, a - 1, m);
  u64 eprime = m / std::gcd(m, sum);
  bool odd = (eprime % 2 == 1);
  if (odd != (a % 2 == 1))
    throw std::logic_error("eprime_parity: parity equivalence violated");
  return {eprime, odd};
}

TameLift lift_at_N1(const EmbeddingInstance& inst, u32 a) {
  const GroupShape& s = inst.shape;
  u64 m = pd_plus_1(s);
  u64 c = (m + 1 - pow_mod(s.p, inst.d1, m)) % m;  // 1 - p^d1
  u64 rhs = (m / 2 + mul_mod(a, geometric_sum_mod(s.p, inst.d1, m), m)) % m;
  u64 g = std::gcd(c, m);
  if (g != 2) throw std::logic_error("lift_at_N1: gcd(1-p^d1, p^d+1) != 2");
  auto sol = solve_linear_mod(c, rhs, m);
  if (!sol)
    throw std::logic_error("lift_at_N1: parity violation, congruence unsolvable");
  TameLift lift;
  lift.place = Place::AtN1;
  lift.local_prime = inst.N1;
  lift.lift_exponent = sol->first;
  lift.sigma = Word{(a + sol->first * (s.p - 1)) % s.e, 0};
  lift.tau = Word{0, inst.d1 % s.bmod};
  Word lhs = word_mul(s, word_mul(s, lift.sigma, lift.tau), word_inv(s, lift.sigma));
  lift.verified = (lhs == word_pow(s, lift.tau, inst.N1));
  if (!lift.verified) throw std::logic_error("lift_at_N1: tame relation failed");
  return lift;
}

TameLift lift_at_N2(const EmbeddingInstance& inst, u32 a, u32 b) {
  if (inst.d1 == 1) throw std::invalid_argument("lift_at_N2: requires d1 > 1");
  const GroupShape& s = inst.shape;
  u64 m = pd_plus_1(s);
  u64 h = u64{1} << (inst.n - 1);  // 2^(n-1) < d, so p^h fits comfortably
  u64 ph = 1;
  for (u64 i = 0; i < h; ++i) ph *= s.p;
  if (m % (ph + 1) != 0)
    throw std::logic_error("lift_at_N2: p^(2^(n-1))+1 does not divide p^d+1");
  u64 M = m / (ph + 1);
  u64 c = (1 + M - ph % M) % M;  // 1 - p^h mod M
  u64 rhs = mul_mod(a, geometric_sum_mod(s.p, static_cast<u32>(h), M), M);
  if (std::gcd(c, M) != 1)
    throw std::logic_error("lift_at_N2: gcd(1 - p^(2^(n-1)), M) != 1");
  auto sol = solve_linear_mod(c, rhs, M);
  if (!sol) throw std::logic_error("lift_at_N2: congruence unsolvable");
  TameLift lift;
  lift.place = Place::AtN2;
  lift.local_prime = *inst.N2;
  lift.lift_exponent = sol->first;
  lift.sigma = Word{(a + sol->first * (s.p - 1)) % s.e,
                    (static_cast<u64>(b) * inst.d1) % s.bmod};
  lift.tau = Word{0, (u64{1} << inst.n) % s.bmod};
  Word lhs = word_mul(s, word_mul(s, lift.sigma, lift.tau), word_inv(s, lift.sigma));
  lift.verified = (lhs == word_pow(s, lift.tau, *inst.N2));
  if (!lift.verified) throw std::logic_error("lift_at_N2: tame relation failed");
  return lift;
}

ObstructionReport obstruction_report(u64 p, u32 d, u64 cap) {
  ObstructionReport rep;
  if (p == 2) {
    // Split extension: every local problem is solvable outright.
    rep.trivial = true;
    rep.all_solvable = true;
    return rep;
  }
  rep.instance = find_ramified_primes(p, d, cap);
  rep.frobenius = frobenius_data(rep.instance);
  if (!rep.frobenius.parity_ok) {
    rep.detail = "frobenius parity rule violated";
    return rep;
  }
  const GroupShape& s = rep.instance.shape;
  rep.at_infinity = lift_at_infinity(s);
  rep.at_p = lift_at_p(s, rep.frobenius.a_at_p);
  if (!rep.at_p) {
    rep.detail = "no lift at p (even Frobenius class)";
    return rep;
  }
  rep.at_N1 = lift_at_N1(rep.instance, rep.frobenius.a_at_N1);
  if (rep.instance.d1 > 1) {
    rep.at_N2 =
        lift_at_N2(rep.instance, *rep.frobenius.a_at_N2, *rep.frobenius.b_at_N2);
  }
  rep.all_solvable = rep.at_p->verified && rep.at_N1->verified &&
                     (rep.instance.d1 == 1 || rep.at_N2->verified);
  return rep;
}

u64 find_split_prime(const SplitPrimeQuery& query) {
  u64 step = 1;
  for (u64 m : query.one_mod) step = std::lcm(step, m);
  for (u64 cand = step + 1; cand <= query.cap; cand += step) {
    if (cand < 2 || !is_prime(cand)) continue;
    bool ok = true;
    for (auto [N, k] : query.power_residue) {
      if (cand % N == 0 || pow_mod(cand % N, (N - 1) / k, N) != 1) {
        ok = false;
        break;
      }
    }
    for (u64 ex : query.exclude)
      if (cand == ex) ok = false;
    if (ok) return cand;
  }
  throw SearchCapExceeded("find_split_prime: cap exceeded");
}

TwistDatum local_twist_data(u64 l, u64 q, const GroupShape& s) {
  if ((l - 1) % q != 0)
    throw std::invalid_argument("local_twist_data: q must divide l - 1");
  u64 a_order = s.derived_order();
  if (a_order % q != 0)
    throw std::invalid_argument("local_twist_data: q must divide |[N,N]|");
  TwistDatum td;
  td.q = q;
  td.c_sigma = Word{0, 0};
  td.c_tau = Word{mul_mod(s.ab_modulus(), a_order / q, s.e), 0};
  td.order_c_tau = word_order(s, td.c_tau);
  if (td.order_c_tau != q)
    throw std::logic_error("local_twist_data: generator order mismatch");
  if (!word_is_identity(word_pow(s, td.c_tau, l - 1)))
    throw std::logic_error("local_twist_data: (l-1) c(tau) != 0");
  return td;
}

}  // namespace cartancert
