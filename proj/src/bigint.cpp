#include "cartancert/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace cartancert {

bool mpz_is_probable_prime(const mpz_class& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

namespace {

mpz_class rho_factor(const mpz_class& n) {
  if (n % 2 == 0) return 2;
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0xC0FFEEul);
  while (true) {
    mpz_class c = rng.get_z_range(n - 1) + 1;
    mpz_class x = rng.get_z_range(n), y = x, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      mpz_class diff = x > y ? x - y : y - x;
      if (diff == 0) break;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_rec(mpz_class n, std::vector<mpz_class>& out) {
  if (n == 1) return;
  if (mpz_is_probable_prime(n)) {
    out.push_back(n);
    return;
  }
  mpz_class d = rho_factor(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<mpz_class, unsigned>> mpz_factorize(const mpz_class& n) {
  if (n <= 0) throw std::invalid_argument("mpz_factorize: positive input required");
  mpz_class rest = n;
  std::vector<mpz_class> primes;
  for (unsigned long p = 2; p < 100000 && mpz_class(p) * p <= rest;
       p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      primes.emplace_back(p);
      rest /= p;
    }
  }
  if (rest > 1) factor_rec(rest, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<mpz_class, unsigned>> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

unsigned mpz_valuation(const mpz_class& n, const mpz_class& p) {
  if (n == 0) throw std::invalid_argument("mpz_valuation: zero input");
  mpz_class rest = n;
  unsigned v = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
    rest /= p;
    ++v;
  }
  return v;
}

mpz_class mpz_from_decimal(const std::string& s) {
  mpz_class out;
  if (out.set_str(s, 10) != 0)
    throw std::invalid_argument("bad decimal integer: " + s);
  return out;
}

}  // namespace cartancert
