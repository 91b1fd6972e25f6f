#include <doctest.h>

#include "cartancert/numeric.hpp"

using namespace cartancert;

TEST_CASE("primality and factorization") {
  CHECK(is_prime(2));
  CHECK(is_prime(43));
  CHECK(is_prime(937));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(235));  // 5 * 47
  CHECK_FALSE(is_prime(469));  // 7 * 67
  CHECK_FALSE(is_prime(703));  // 19 * 37

  auto f = factorize(129);  // 2^7 + 1
  REQUIRE(f.size() == 2);
  CHECK(f[0] == std::pair<u64, u32>{3, 1});
  CHECK(f[1] == std::pair<u64, u32>{43, 1});

  auto f9 = factorize(9);  // 2^3 + 1: no new prime beyond 3
  REQUIRE(f9.size() == 1);
  CHECK(f9[0] == std::pair<u64, u32>{3, 2});
}

TEST_CASE("linear congruences") {
  // 2k = 2 (mod 4): k odd
  auto sol = solve_linear_mod(2, 2, 4);
  REQUIRE(sol.has_value());
  CHECK(sol->first == 1);
  CHECK(sol->second == 2);
  // 2k = 1 (mod 4): no solution
  CHECK_FALSE(solve_linear_mod(2, 1, 4).has_value());
  // 2k = -1 = 4 (mod 5): k = 2
  auto sol5 = solve_linear_mod(2, 4, 5);
  REQUIRE(sol5.has_value());
  CHECK(sol5->first == 2);
}

TEST_CASE("orders, primitive roots, discrete logs") {
  CHECK(multiplicative_order(2, 43, 42) == 14);  // 2^7 = -1 mod 43
  CHECK(pow_mod(2, 7, 43) == 42);
  CHECK(smallest_primitive_root(3) == 2);
  CHECK(smallest_primitive_root(13) == 2);
  CHECK(discrete_log(2, 5, 13, 12) == 9);  // 2^9 = 512 = 5 mod 13
  CHECK(is_quadratic_residue(1, 7));
  CHECK_FALSE(is_quadratic_residue(7 % 11, 11));
  CHECK_FALSE(is_quadratic_residue(3, 43));
  CHECK(is_quadratic_residue(7 % 19, 19));  // 8^2 = 64 = 7 mod 19
  CHECK(is_quadratic_residue(7 % 31, 31));  // 10^2 = 100 = 7 mod 31
}

TEST_CASE("prime counting") {
  CHECK(prime_pi(15) == 6);   // 2,3,5,7,11,13
  CHECK(prime_pi(201) == 46);
}
