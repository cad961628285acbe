#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

namespace conics {

inline constexpr std::int64_t kDefaultPrimeBound = 1'000'000;

// A truncated product over primes. `tail` bounds |full / truncated - 1|
// under the stated bound |factor(p) - 1| <= C / p^2 for p > prime_bound.
struct ProductValue {
  long double value = 0;
  long double tail = 0;
  std::int64_t prime_bound = 0;
};

// Primes up to at least `bound` (possibly more), cached across calls.
// Thread-safe; the returned list is immutable.
std::shared_ptr<const std::vector<std::int64_t>> cached_primes(std::int64_t bound);

// prod_{p <= bound, p >= first} factor(p) via a sum of logarithms over
// fixed-size prime blocks added in order, so the result does not depend on
// scheduling. tail = exp(C / bound) - 1, since sum_{n > P} 1/n^2 < 1/P.
ProductValue euler_product(std::int64_t bound, const std::function<long double(std::int64_t)>& factor,
                           long double coefficient_bound, std::int64_t first = 2);

// Combine two truncated products (or a product and an exact factor).
ProductValue operator*(const ProductValue& x, const ProductValue& y);
ProductValue operator*(const ProductValue& x, long double scale);

// Kronecker symbol (D / n) for n >= 1.
int kronecker(std::int64_t D, std::int64_t n);

// Discriminant of Q(sqrt a) for a nonsquare integer a.
std::int64_t fundamental_discriminant(std::int64_t a);

// L(1, chi_D) for a fundamental discriminant D != 1, by the finite class
// number formulas: -(pi / |D|^{3/2}) sum_k chi(k) k for D < 0 and
// -(1 / sqrt D) sum_k chi(k) log sin(pi k / D) for D > 0.
long double dirichlet_l1(std::int64_t D);

}  // namespace conics
