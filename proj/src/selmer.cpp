#include "cartancert/selmer.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cartancert {

namespace {

u64 odd_part(u64 m) {
  while (m % 2 == 0) m /= 2;
  return m;
}

// Lift v (mod pk) to the unit = v mod pk, = 1 mod m/pk.
u64 crt_lift(u64 v, u64 pk, u64 m) {
  u64 other = m / pk;
  for (u64 x = v % pk; x < m; x += pk) {
    if (x % other == 1 % other) return x;
  }
  throw std::logic_error("crt_lift failed");
}

}  // namespace

const std::vector<u64>& UnitGroup::decompose(u64 u) const {
  u %= m;
  auto it = std::lower_bound(elements.begin(), elements.end(), u);
  if (it == elements.end() || *it != u)
    throw std::invalid_argument("decompose: not a unit mod m");
  return decomps[static_cast<size_t>(it - elements.begin())];
}

UnitGroup unit_group(u64 m) {
  if (m < 2) throw std::invalid_argument("unit_group: m >= 2 required");
  if (m > 5000) throw std::invalid_argument("unit_group: m too large for enumeration");
  UnitGroup g;
  g.m = m;
  for (auto [q, e] : factorize(m)) {
    u64 qe = 1;
    for (u32 i = 0; i < e; ++i) qe *= q;
    if (q == 2) {
      if (e == 1) continue;  // trivial factor
      g.gens.push_back(crt_lift(qe - 1, qe, m));  // -1
      g.orders.push_back(2);
      if (e >= 3) {
        g.gens.push_back(crt_lift(5, qe, m));
        g.orders.push_back(qe / 4);
      }
    } else {
      u64 phi = qe - qe / q;
      for (u64 cand = 2;; ++cand) {
        if (cand % q == 0) continue;
        if (multiplicative_order(cand, qe, phi) == phi) {
          g.gens.push_back(crt_lift(cand, qe, m));
          g.orders.push_back(phi);
          break;
        }
      }
    }
  }
  for (u64 u = 1; u < m; ++u)
    if (std::gcd(u, m) == 1) g.elements.push_back(u);

  // Walk the exponent box once; the products must biject onto the units.
  u64 box = 1;
  for (u64 o : g.orders) box *= o;
  if (box != g.elements.size())
    throw std::logic_error("unit_group: generators do not span");
  g.decomps.resize(g.elements.size());
  std::vector<u64> exps(g.gens.size(), 0);
  std::vector<bool> seen(g.elements.size(), false);
  for (u64 count = 0; count < box; ++count) {
    u64 prod = 1;
    for (size_t i = 0; i < g.gens.size(); ++i)
      prod = mul_mod(prod, pow_mod(g.gens[i], exps[i], m), m);
    auto it = std::lower_bound(g.elements.begin(), g.elements.end(), prod);
    size_t idx = static_cast<size_t>(it - g.elements.begin());
    if (it == g.elements.end() || *it != prod || seen[idx])
      throw std::logic_error("unit_group: decomposition is not a bijection");
    seen[idx] = true;
    g.decomps[idx] = exps;
    size_t i = 0;
    while (i < exps.size()) {
      if (++exps[i] < g.orders[i]) break;
      exps[i] = 0;
      ++i;
    }
  }
  return g;
}

std::vector<Cocycle> crossed_hom_space(const UnitGroup& g) {
  u64 m = g.m;
  size_t r = g.gens.size();
  // Per-generator norm kernels.
  std::vector<std::vector<u64>> kernels(r);
  for (size_t i = 0; i < r; ++i) {
    u64 norm = 0, pw = 1;
    for (u64 j = 0; j < g.orders[i]; ++j) {
      norm = (norm + pw) % m;
      pw = mul_mod(pw, g.gens[i], m);
    }
    for (u64 v = 0; v < m; ++v)
      if (mul_mod(norm, v, m) == 0) kernels[i].push_back(v);
  }

  std::vector<Cocycle> out;
  std::vector<u64> vals(r, 0);
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == r) {
      out.push_back(Cocycle{vals});
      return;
    }
    for (u64 v : kernels[i]) {
      bool ok = true;
      for (size_t j = 0; j < i && ok; ++j) {
        // (1 - g_j) f(g_i) = (1 - g_i) f(g_j)
        u64 lhs = mul_mod((1 + m - g.gens[j] % m) % m, v, m);
        u64 rhs = mul_mod((1 + m - g.gens[i] % m) % m, vals[j], m);
        ok = (lhs == rhs);
      }
      if (!ok) continue;
      vals[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

u64 evaluate_cocycle(const UnitGroup& g, const Cocycle& f, u64 u) {
  std::vector<u64> exps = g.decompose(u);
  u64 m = g.m;
  u64 val = 0, prefix = 1;
  for (size_t i = 0; i < g.gens.size(); ++i) {
    // f(g^e) = (1 + g + ... + g^(e-1)) f(g)
    u64 partial = 0, pw = 1;
    for (u64 j = 0; j < exps[i]; ++j) {
      partial = (partial + pw) % m;
      pw = mul_mod(pw, g.gens[i], m);
    }
    val = (val + mul_mod(prefix, mul_mod(partial, f.on_gens[i], m), m)) % m;
    prefix = mul_mod(prefix, pow_mod(g.gens[i], exps[i], m), m);
  }
  return val;
}

bool is_coboundary(const UnitGroup& g, const Cocycle& f) {
  for (u64 c = 0; c < g.m; ++c) {
    bool ok = true;
    for (size_t i = 0; i < g.gens.size() && ok; ++i)
      ok = (mul_mod((g.gens[i] + g.m - 1) % g.m, c, g.m) == f.on_gens[i]);
    if (ok) return true;
  }
  return false;
}

u64 coboundary_count(const UnitGroup& g) {
  std::set<std::vector<u64>> distinct;
  for (u64 c = 0; c < g.m; ++c) {
    std::vector<u64> vec;
    vec.reserve(g.gens.size());
    for (u64 gen : g.gens) vec.push_back(mul_mod((gen + g.m - 1) % g.m, c, g.m));
    distinct.insert(std::move(vec));
  }
  return distinct.size();
}

u64 selmer_dim(u64 m, bool with_2_condition) {
  UnitGroup g = unit_group(m);
  std::vector<Cocycle> z1 = crossed_hom_space(g);

  u64 m1 = odd_part(m);
  std::vector<u64> inertia2;
  for (u64 u : g.elements)
    if (u % m1 == 1 % m1) inertia2.push_back(u);

  u64 surviving = 0;
  for (const Cocycle& f : z1) {
    // Precompute f on the whole group once.
    std::vector<u64> values;
    values.reserve(g.elements.size());
    for (u64 u : g.elements) values.push_back(evaluate_cocycle(g, f, u));

    bool ok = true;
    for (size_t i = 0; i < g.elements.size() && ok; ++i) {
      // Restriction to <u> is a coboundary of <u> iff f(u) is in (u-1)Z/m.
      u64 u = g.elements[i];
      ok = solve_linear_mod((u + m - 1) % m, values[i], m).has_value();
    }
    if (ok && with_2_condition) {
      bool some_c = false;
      for (u64 c = 0; c < m && !some_c; ++c) {
        bool match = true;
        for (u64 h : inertia2) {
          u64 idx = static_cast<u64>(
              std::lower_bound(g.elements.begin(), g.elements.end(), h) -
              g.elements.begin());
          if (mul_mod((h + m - 1) % m, c, m) != values[idx]) {
            match = false;
            break;
          }
        }
        some_c = match;
      }
      ok = some_c;
    }
    if (ok) ++surviving;
  }

  u64 b1 = coboundary_count(g);
  if (surviving % b1 != 0)
    throw std::logic_error("selmer_dim: surviving set not a union of classes");
  return surviving / b1;
}

namespace {

u64 chi_rule(u64 u, u64 m) { return (u % 8 == 1 || u % 8 == 3) ? 0 : m / 2; }

}  // namespace

SpecialClassReport special_class_check(u64 m) {
  if (m % 8 != 0) throw std::invalid_argument("special_class_check: 8 | m required");
  SpecialClassReport rep;
  rep.m = m;
  UnitGroup g = unit_group(m);
  rep.chi.on_gens.reserve(g.gens.size());
  for (u64 gen : g.gens) rep.chi.on_gens.push_back(chi_rule(gen, m));

  // Cocycle law on every pair, and agreement of the generator-extension with
  // the direct rule.
  rep.is_cocycle = true;
  for (u64 u : g.elements) {
    if (evaluate_cocycle(g, rep.chi, u) != chi_rule(u, m)) rep.is_cocycle = false;
    for (u64 v : g.elements) {
      u64 lhs = chi_rule(mul_mod(u, v, m), m);
      u64 rhs = (chi_rule(u, m) + mul_mod(u, chi_rule(v, m), m)) % m;
      if (lhs != rhs) rep.is_cocycle = false;
    }
  }

  rep.nontrivial_class = !is_coboundary(g, rep.chi);

  rep.cyclic_restrictions_trivial = true;
  for (u64 u : g.elements) {
    if (!solve_linear_mod((u + m - 1) % m, chi_rule(u, m), m)) {
      rep.cyclic_restrictions_trivial = false;
      break;
    }
  }

  u64 m1 = odd_part(m);
  bool some_c = false;
  for (u64 c = 0; c < m && !some_c; ++c) {
    bool match = true;
    for (u64 h : g.elements) {
      if (h % m1 != 1 % m1) continue;
      if (mul_mod((h + m - 1) % m, c, m) != chi_rule(h, m)) {
        match = false;
        break;
      }
    }
    some_c = match;
  }
  rep.fails_unramified_at_2 = !some_c;

  rep.pass = rep.is_cocycle && rep.nontrivial_class &&
             rep.cyclic_restrictions_trivial && rep.fails_unramified_at_2;
  if (!rep.pass) {
    rep.detail = !rep.is_cocycle              ? "cocycle law failed"
                 : !rep.nontrivial_class      ? "class is a coboundary"
                 : !rep.cyclic_restrictions_trivial ? "cyclic restriction nontrivial"
                                              : "unramified condition not violated";
    throw std::logic_error("special_class_check: " + rep.detail);
  }
  return rep;
}

u64 dual_transfer(u64 a, u64 b, u64 p, u64 m, u32 two_d) {
  if (std::gcd(p, m) != 1)
    throw std::invalid_argument("dual_transfer: p not invertible mod m");
  if (std::gcd(b, m) != 1)
    throw std::invalid_argument("dual_transfer: b must be a unit mod m");
  if (pow_mod(p, two_d, m) != 1)
    throw std::invalid_argument("dual_transfer: p^2d != 1 mod m");
  u64 pinv = *inv_mod(p % m, m);
  return mul_mod(pow_mod(pinv, a % two_d, m), b % m, m);
}

}  // namespace cartancert
