#include <doctest.h>

#include <random>

#include "conics/arith.hpp"
#include "conics/errors.hpp"
#include "oracles.hpp"

using namespace conics;

TEST_CASE("sieve smallest prime factors") {
  const FactorSieve s10(10);
  const std::int64_t want[] = {2, 3, 2, 5, 2, 7, 2, 3, 2};
  for (std::int64_t n = 2; n <= 10; ++n) CHECK(s10.spf(n) == want[n - 2]);
  CHECK(FactorSieve(2).spf(2) == 2);
  const FactorSieve s(10'000);
  CHECK(s.spf(9973) == 9973);
  for (std::int64_t n = 2; n <= 10'000; ++n) {
    std::int64_t p = 2;
    while (n % p) ++p;
    REQUIRE(s.spf(n) == p);
  }
  CHECK_THROWS_AS(FactorSieve(0), DomainError);
  CHECK_THROWS_AS(FactorSieve(1'000'000, 1000), CapacityError);
}

TEST_CASE("factorization") {
  const FactorSieve s(100'000);
  CHECK(s.factor(12) == Factorization{{2, 2}, {3, 1}});
  CHECK(s.factor(1).empty());
  CHECK(s.factor(-30) == Factorization{{2, 1}, {3, 1}, {5, 1}});
  CHECK_THROWS_AS(s.factor(0), DomainError);
  CHECK_THROWS_AS(s.factor(100'001), OutOfRangeError);
  for (std::int64_t n = 1; n <= 5000; ++n) {
    const auto got = s.factor(n);
    const auto want = oracle::factor(n);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i].prime == want[i].first);
      CHECK(got[i].exponent == want[i].second);
    }
  }
}

TEST_CASE("multiplicative helpers") {
  const FactorSieve s(100'000);
  CHECK(moebius_sq(12, s) == false);
  CHECK(tau(12, s) == 6);
  CHECK(odd_part(40) == 5);
  CHECK(v_p(40, 2) == 3);
  CHECK(tau(9973, s) == 2);
  for (std::int64_t n = 1; n <= 3000; ++n) {
    REQUIRE(tau(n, s) == oracle::tau(n));
    REQUIRE(moebius_sq(n, s) == oracle::squarefree(n));
    const auto sp = split_square(n, s);
    REQUIRE(sp.root * sp.root * sp.kernel == n);
    REQUIRE(oracle::squarefree(sp.kernel));
  }
  const auto table = divisor_count_table(s);
  for (std::int64_t n = 1; n <= 3000; ++n) REQUIRE(table[n] == oracle::tau(n));
  CHECK(gcd(-12, 18) == 6);
  CHECK(gcd(0, 7) == 7);
}

TEST_CASE("jacobi symbol") {
  for (std::int64_t a = -20; a <= 20; ++a) CHECK(jacobi(a, 1) == 1);
  CHECK(jacobi(2, 15) == 1);
  CHECK(jacobi(3, 5) == -1);
  CHECK_THROWS_AS(jacobi(3, 4), DomainError);
  CHECK_THROWS_AS(jacobi(3, -5), DomainError);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> da(-1'000'000, 1'000'000), dn(0, 5000);
  for (int i = 0; i < 5000; ++i) {
    const auto a = da(rng);
    const auto n = 2 * dn(rng) + 1;
    REQUIRE(jacobi(a, n) == oracle::jacobi(a, n));
  }
}

TEST_CASE("divisors and primes") {
  const std::vector<std::int64_t> primes{3, 5, 7};
  auto d = squarefree_divisors(primes);
  std::sort(d.begin(), d.end());
  CHECK(d == std::vector<std::int64_t>{1, 3, 5, 7, 15, 21, 35, 105});
  const auto ps = primes_up_to(1000);
  std::vector<std::int64_t> want;
  for (std::int64_t n = 2; n <= 1000; ++n)
    if (oracle::is_prime(n)) want.push_back(n);
  CHECK(ps == want);
}
