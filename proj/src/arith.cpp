#include "conics/arith.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "conics/errors.hpp"

namespace conics {

FactorSieve::FactorSieve(std::int64_t limit, std::uint64_t budget) : limit_(limit) {
  if (limit < 2) throw DomainError("sieve limit must be at least 2");
  if (static_cast<std::uint64_t>(limit) + 1 > budget ||
      limit > std::int64_t{0xFFFFFFFF})
    throw CapacityError("sieve limit " + std::to_string(limit) + " exceeds memory budget");
  spf_.assign(static_cast<std::size_t>(limit) + 1, 0);
  spf_[1] = 1;
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (spf_[i] != 0) continue;
    spf_[i] = static_cast<std::uint32_t>(i);
    if (i > limit / i) continue;
    for (std::int64_t j = i * i; j <= limit; j += i)
      if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
  }
}

std::int64_t FactorSieve::spf(std::int64_t n) const {
  if (n < 0 || n > limit_) throw OutOfRangeError("spf lookup outside sieve range");
  return spf_[static_cast<std::size_t>(n)];
}

Factorization FactorSieve::factor(std::int64_t n) const {
  if (n == 0) throw DomainError("cannot factor zero");
  std::int64_t m = std::llabs(n);
  if (m > limit_)
    throw OutOfRangeError("|n| = " + std::to_string(m) + " exceeds sieve limit " +
                          std::to_string(limit_));
  Factorization out;
  while (m > 1) {
    const std::int64_t p = spf_[static_cast<std::size_t>(m)];
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  return out;
}

std::vector<std::int64_t> FactorSieve::prime_divisors(std::int64_t n) const {
  std::vector<std::int64_t> out;
  for (const auto& pp : factor(n)) out.push_back(pp.prime);
  return out;
}

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
  std::vector<std::int64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    if (i > limit / i) continue;
    for (std::int64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

int v_p(std::int64_t n, std::int64_t p) {
  if (n == 0) throw DomainError("valuation of zero is infinite");
  if (p < 2) throw DomainError("v_p needs p >= 2");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::int64_t odd_part(std::int64_t n) {
  if (n == 0) throw DomainError("odd part of zero");
  std::int64_t m = std::llabs(n);
  while ((m & 1) == 0) m >>= 1;
  return m;
}

bool moebius_sq(std::int64_t n, const FactorSieve& sieve) {
  for (const auto& pp : sieve.factor(n))
    if (pp.exponent > 1) return false;
  return true;
}

std::int64_t tau(std::int64_t n, const FactorSieve& sieve) {
  std::int64_t t = 1;
  for (const auto& pp : sieve.factor(n)) t *= pp.exponent + 1;
  return t;
}

SquareSplit split_square(std::int64_t n, const FactorSieve& sieve) {
  SquareSplit s{1, 1};
  for (const auto& pp : sieve.factor(n)) {
    for (int i = 0; i < pp.exponent / 2; ++i) s.root *= pp.prime;
    if (pp.exponent % 2 == 1) s.kernel *= pp.prime;
  }
  return s;
}

int jacobi(std::int64_t a, std::int64_t n) {
  if (n <= 0 || (n & 1) == 0) throw DomainError("Jacobi symbol needs an odd positive modulus");
  std::int64_t x = a % n;
  if (x < 0) x += n;
  std::int64_t m = n;
  int result = 1;
  while (x != 0) {
    while ((x & 1) == 0) {
      x >>= 1;
      const std::int64_t r = m & 7;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(x, m);
    if ((x & 3) == 3 && (m & 3) == 3) result = -result;
    x %= m;
  }
  return m == 1 ? result : 0;
}

std::vector<std::uint16_t> divisor_count_table(const FactorSieve& sieve) {
  const auto limit = static_cast<std::size_t>(sieve.limit());
  std::vector<std::uint16_t> t(limit + 1, 0);
  if (limit >= 1) t[1] = 1;
  for (std::size_t n = 2; n <= limit; ++n) {
    const auto p = static_cast<std::size_t>(sieve.spf(static_cast<std::int64_t>(n)));
    std::size_t m = n / p;
    std::uint16_t e = 1;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    t[n] = static_cast<std::uint16_t>(t[m] * (e + 1));
  }
  return t;
}

std::vector<std::int64_t> squarefree_divisors(std::span<const std::int64_t> primes) {
  std::vector<std::int64_t> divs{1};
  divs.reserve(std::size_t{1} << primes.size());
  for (const auto p : primes) {
    const auto k = divs.size();
    for (std::size_t i = 0; i < k; ++i) divs.push_back(divs[i] * p);
  }
  return divs;
}

}  // namespace conics
