#include "cartancert/numeric.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cartancert {

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

namespace {

// Returns g = gcd(a, b) and x with a*x = g (mod b/g idea); classic iterative
// extended Euclid over signed 128-bit to avoid overflow.
struct Egcd {
  u64 g;
  __int128 x;  // coefficient of a
};

Egcd egcd(u64 a, u64 b) {
  __int128 old_r = a, r = b;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return {static_cast<u64>(old_r), old_s};
}

}  // namespace

std::optional<u64> inv_mod(u64 a, u64 m) {
  if (m == 0) return std::nullopt;
  a %= m;
  Egcd e = egcd(a, m);
  if (e.g != 1) return std::nullopt;
  __int128 x = e.x % static_cast<__int128>(m);
  if (x < 0) x += m;
  return static_cast<u64>(x);
}

std::optional<std::pair<u64, u64>> solve_linear_mod(u64 c, u64 r, u64 m) {
  if (m == 0) throw std::invalid_argument("solve_linear_mod: zero modulus");
  c %= m;
  r %= m;
  u64 g = std::gcd(c, m);
  if (g == 0) g = m;  // c == 0 mod m
  if (r % g != 0) return std::nullopt;
  u64 m2 = m / g;
  if (m2 == 1) return std::make_pair(u64{0}, u64{1});
  u64 inv = *inv_mod((c / g) % m2, m2);
  u64 x0 = mul_mod(inv, (r / g) % m2, m2);
  return std::make_pair(x0, m2);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for n < 2^64.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i + 1 < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

u64 pollard_rho(u64 n) {
  if ((n & 1) == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (mul_mod(x, x, n) + c) % n;
      y = (mul_mod(y, y, n) + c) % n;
      y = (mul_mod(y, y, n) + c) % n;
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<u64, u32>> factorize(u64 n) {
  std::vector<u64> primes;
  for (u64 p = 2; p * p <= n && p < 100000; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  if (n > 1) factor_rec(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<u64, u32>> out;
  for (u64 p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

u64 multiplicative_order(u64 a, u64 m, u64 order_multiple) {
  a %= m;
  if (pow_mod(a, order_multiple, m) != 1)
    throw std::invalid_argument("multiplicative_order: bad order multiple");
  u64 order = order_multiple;
  for (auto [q, e] : factorize(order_multiple)) {
    for (u32 i = 0; i < e && order % q == 0; ++i) {
      if (pow_mod(a, order / q, m) == 1)
        order /= q;
      else
        break;
    }
  }
  return order;
}

std::vector<u32> primes_up_to(u32 n) {
  std::vector<bool> sieve(static_cast<size_t>(n) + 1, true);
  std::vector<u32> out;
  for (u32 i = 2; i <= n; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (u64 j = static_cast<u64>(i) * i; j <= n; j += i) sieve[j] = false;
  }
  return out;
}

u64 prime_pi(u64 n) {
  if (n < 2) return 0;
  return primes_up_to(static_cast<u32>(n)).size();
}

u64 smallest_primitive_root(u64 p) {
  if (p == 2) return 1;
  auto fac = factorize(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (auto [q, e] : fac) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("smallest_primitive_root: none found");
}

bool is_quadratic_residue(u64 a, u64 p) {
  return pow_mod(a % p, (p - 1) / 2, p) == 1;
}

u64 discrete_log(u64 g, u64 a, u64 m, u64 order) {
  u64 x = 1;
  a %= m;
  for (u64 k = 0; k < order; ++k) {
    if (x == a) return k;
    x = mul_mod(x, g, m);
  }
  throw std::invalid_argument("discrete_log: target not in subgroup");
}

}  // namespace cartancert
