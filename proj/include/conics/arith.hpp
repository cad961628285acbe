#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace conics {

struct PrimePower {
  std::int64_t prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime powers with strictly increasing primes; empty for +-1.
using Factorization = std::vector<PrimePower>;

// Smallest-prime-factor table over [0, limit].
//
// spf(p) == p for primes, spf(1) == 1 is a sentinel and spf(0) == 0. The table
// is immutable after construction and may be shared freely between threads.
class FactorSieve {
 public:
  // Upper bound on the number of table entries (4 bytes each).
  static constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 28;

  explicit FactorSieve(std::int64_t limit, std::uint64_t budget = kDefaultBudget);

  std::int64_t limit() const { return limit_; }
  std::int64_t spf(std::int64_t n) const;
  bool is_prime(std::int64_t n) const { return n >= 2 && spf(n) == n; }

  // Factorization of |n|; throws OutOfRangeError when |n| > limit().
  Factorization factor(std::int64_t n) const;

  // Distinct primes of |n| in increasing order.
  std::vector<std::int64_t> prime_divisors(std::int64_t n) const;

 private:
  std::int64_t limit_;
  std::vector<std::uint32_t> spf_;
};

inline FactorSieve build_sieve(std::int64_t limit) { return FactorSieve(limit); }

// All primes <= limit (plain Eratosthenes, independent of FactorSieve).
std::vector<std::int64_t> primes_up_to(std::int64_t limit);

std::int64_t gcd(std::int64_t a, std::int64_t b);

// Exponent of p in n (n != 0, p >= 2).
int v_p(std::int64_t n, std::int64_t p);

// |n| with all factors of two removed.
std::int64_t odd_part(std::int64_t n);

bool moebius_sq(std::int64_t n, const FactorSieve& sieve);
std::int64_t tau(std::int64_t n, const FactorSieve& sieve);

// Squarefree kernel: |n| = square * kernel with kernel squarefree; kernel
// carries no sign.
struct SquareSplit {
  std::int64_t root;    // sqrt of the square part
  std::int64_t kernel;  // squarefree part
};
SquareSplit split_square(std::int64_t n, const FactorSieve& sieve);

// Jacobi symbol (a/n) for odd n >= 1, by the binary reciprocity loop.
int jacobi(std::int64_t a, std::int64_t n);

// Divisor counts tau(0..limit) (tau(0) unused, set to 0).
std::vector<std::uint16_t> divisor_count_table(const FactorSieve& sieve);

// All positive divisors of a squarefree n given its prime list.
std::vector<std::int64_t> squarefree_divisors(std::span<const std::int64_t> primes);

}  // namespace conics
