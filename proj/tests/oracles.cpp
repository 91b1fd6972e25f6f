#include "oracles.hpp"

#include <stdexcept>
#include <vector>

namespace cartancert::oracles {

namespace {

// Solvability of A c = f over Z/q^k by Smith-style elimination: the globally
// minimal-valuation entry is a valid pivot (every other entry is an exact
// multiple of q^v), so row and column operations stay exact.
bool solvable_mod_prime_power(std::vector<std::vector<u64>> a,
                              std::vector<u64> f, u64 qk, u64 q) {
  size_t rows = a.size();
  if (rows == 0) return true;
  size_t cols = a[0].size();

  auto val = [&](u64 x) {
    if (x == 0) return u64{64};
    u64 v = 0;
    while (x % q == 0) {
      x /= q;
      ++v;
    }
    return v;
  };

  size_t t = 0;
  std::vector<u64> pivot_val;
  while (true) {
    u64 best = 64;
    size_t bi = 0, bj = 0;
    for (size_t i = t; i < rows; ++i) {
      for (size_t j = t; j < cols; ++j) {
        u64 v = val(a[i][j]);
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    }
    if (best == 64 || t >= rows || t >= cols) break;
    std::swap(a[t], a[bi]);
    std::swap(f[t], f[bi]);
    for (size_t i = 0; i < rows; ++i) std::swap(a[i][bj], a[i][t]);

    u64 qv = 1;
    for (u64 i = 0; i < best; ++i) qv *= q;
    u64 unit = a[t][t] / qv;
    u64 unit_inv = *inv_mod(unit % qk, qk);
    for (size_t j = t; j < cols; ++j) a[t][j] = mul_mod(a[t][j], unit_inv, qk);
    f[t] = mul_mod(f[t], unit_inv, qk);

    for (size_t i = t + 1; i < rows; ++i) {
      if (a[i][t] == 0) continue;
      u64 mult = a[i][t] / qv;
      for (size_t j = t; j < cols; ++j)
        a[i][j] = (a[i][j] + qk - mul_mod(mult, a[t][j], qk)) % qk;
      f[i] = (f[i] + qk - mul_mod(mult, f[t], qk)) % qk;
    }
    for (size_t j = t + 1; j < cols; ++j) {
      if (a[t][j] == 0) continue;
      u64 mult = a[t][j] / qv;
      for (size_t i = t; i < rows; ++i)
        a[i][j] = (a[i][j] + qk - mul_mod(mult, a[i][t], qk)) % qk;
    }
    pivot_val.push_back(qv);
    ++t;
  }
  for (size_t i = 0; i < rows; ++i) {
    if (i < pivot_val.size()) {
      if (f[i] % pivot_val[i] != 0) return false;
    } else {
      if (f[i] != 0) return false;
    }
  }
  return true;
}

}  // namespace

bool extension_splits_by_cocycle(const GroupShape& s) {
  u64 r = s.ab_modulus();
  u64 m = s.derived_order();
  u64 nab = r * s.bmod;

  auto section = [&](u64 abar, u64 b) { return Word{abar % s.e, b}; };
  auto idx = [&](u64 abar, u64 b) { return abar * s.bmod + b; };

  // Factor set f(g, h) = s(g) s(h) s(gh)^-1, an element of <x^r> = Z/m, and
  // the action of (abar, b) on Z/m is multiplication by act^b.
  std::vector<std::vector<u64>> factor(nab, std::vector<u64>(nab, 0));
  for (u64 a1 = 0; a1 < r; ++a1) {
    for (u64 b1 = 0; b1 < s.bmod; ++b1) {
      for (u64 a2 = 0; a2 < r; ++a2) {
        for (u64 b2 = 0; b2 < s.bmod; ++b2) {
          Word prod = word_mul(s, section(a1, b1), section(a2, b2));
          Word rep = section((a1 + a2) % r, (b1 + b2) % s.bmod);
          Word diff = word_mul(s, prod, word_inv(s, rep));
          if (diff.b != 0 || diff.a % r != 0)
            throw std::logic_error("factor set not in the kernel");
          factor[idx(a1, b1)][idx(a2, b2)] = (diff.a / r) % m;
        }
      }
    }
  }

  // f = dc, i.e. f(g,h) = c(g) + g.c(h) - c(gh), as a linear system in the
  // values c(g); solve modulo each prime power dividing m.
  for (auto [q, e] : factorize(m)) {
    u64 qk = 1;
    for (u32 i = 0; i < e; ++i) qk *= q;
    std::vector<std::vector<u64>> a;
    std::vector<u64> rhs;
    for (u64 a1 = 0; a1 < r; ++a1) {
      for (u64 b1 = 0; b1 < s.bmod; ++b1) {
        for (u64 a2 = 0; a2 < r; ++a2) {
          for (u64 b2 = 0; b2 < s.bmod; ++b2) {
            std::vector<u64> row(nab, 0);
            row[idx(a1, b1)] = (row[idx(a1, b1)] + 1) % qk;
            u64 action = pow_mod(s.act, b1, qk);
            row[idx(a2, b2)] = (row[idx(a2, b2)] + action) % qk;
            u64 gh = idx((a1 + a2) % r, (b1 + b2) % s.bmod);
            row[gh] = (row[gh] + qk - 1) % qk;
            a.push_back(std::move(row));
            rhs.push_back(factor[idx(a1, b1)][idx(a2, b2)] % qk);
          }
        }
      }
    }
    if (!solvable_mod_prime_power(std::move(a), std::move(rhs), qk, q))
      return false;
  }
  return true;
}

bool lift_at_p_solvable_bruteforce(const GroupShape& s, u32 a) {
  u64 m = s.derived_order();
  for (u64 j = 0; j < m; ++j) {
    Word sigma{(j * s.ab_modulus()) % s.e, a % s.bmod};
    Word sigma_inv = word_inv(s, sigma);
    for (u64 k = 0; k < m; ++k) {
      Word tau{(1 + k * s.ab_modulus()) % s.e, 0};
      Word lhs = word_mul(s, word_mul(s, sigma, tau), sigma_inv);
      if (lhs == word_pow(s, tau, s.p)) return true;
    }
  }
  return false;
}

}  // namespace cartancert::oracles
