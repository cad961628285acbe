#include "conics/euler.hpp"

#include <cmath>
#include <mutex>
#include <numbers>

#include "conics/arith.hpp"
#include "conics/errors.hpp"
#include "conics/rational.hpp"

namespace conics {

std::string to_string(const ExactRational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

long double to_real(const ExactRational& q) {
  return boost::multiprecision::numerator(q).convert_to<long double>() /
         boost::multiprecision::denominator(q).convert_to<long double>();
}

std::shared_ptr<const std::vector<std::int64_t>> cached_primes(std::int64_t bound) {
  static std::mutex mu;
  static std::shared_ptr<const std::vector<std::int64_t>> primes;
  static std::int64_t covered = 0;
  std::lock_guard lock(mu);
  if (!primes || bound > covered) {
    primes = std::make_shared<const std::vector<std::int64_t>>(primes_up_to(bound));
    covered = bound;
  }
  return primes;
}

ProductValue euler_product(std::int64_t bound, const std::function<long double(std::int64_t)>& factor,
                           long double coefficient_bound, std::int64_t first) {
  constexpr std::size_t kBlock = 4096;
  const auto list = cached_primes(bound);
  const auto& primes = *list;
  long double total = 0;
  for (std::size_t start = 0; start < primes.size() && primes[start] <= bound; start += kBlock) {
    long double block = 0;
    const std::size_t stop = std::min(primes.size(), start + kBlock);
    for (std::size_t i = start; i < stop; ++i) {
      if (primes[i] > bound) break;
      if (primes[i] < first) continue;
      const long double f = factor(primes[i]);
      if (!(f > 0)) throw DomainError("Euler factor must be positive");
      block += std::log(f);
    }
    total += block;
  }
  ProductValue out;
  out.value = std::exp(total);
  out.tail = std::expm1(coefficient_bound / static_cast<long double>(bound));
  out.prime_bound = bound;
  return out;
}

ProductValue operator*(const ProductValue& x, const ProductValue& y) {
  return {x.value * y.value, (1 + x.tail) * (1 + y.tail) - 1, std::min(x.prime_bound, y.prime_bound)};
}

ProductValue operator*(const ProductValue& x, long double scale) {
  return {x.value * scale, x.tail, x.prime_bound};
}

int kronecker(std::int64_t D, std::int64_t n) {
  if (n < 1) throw DomainError("kronecker needs n >= 1");
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    if (D % 2 == 0) return 0;
    const auto r = ((D % 8) + 8) % 8;
    if (r == 3 || r == 5) result = -result;
  }
  if (n == 1) return result;
  return result * jacobi(D, n);
}

std::int64_t fundamental_discriminant(std::int64_t a) {
  if (a == 0) throw DomainError("discriminant of 0");
  std::int64_t k = a < 0 ? -1 : 1;
  std::int64_t m = a < 0 ? -a : a;
  for (std::int64_t p = 2; p * p <= m; ++p)
    while (m % (p * p) == 0) m /= p * p;
  k *= m;
  if (k == 1) throw DomainError("a is a square");
  const auto r = ((k % 4) + 4) % 4;
  return r == 1 ? k : 4 * k;
}

long double dirichlet_l1(std::int64_t D) {
  if (D == 1 || D == 0) throw DomainError("L(1, chi_D) needs a nontrivial character");
  const long double pi = std::numbers::pi_v<long double>;
  const std::int64_t n = D < 0 ? -D : D;
  long double sum = 0;
  for (std::int64_t k = 1; k < n; ++k) {
    const int chi = kronecker(D, k);
    if (chi == 0) continue;
    if (D < 0)
      sum += chi * static_cast<long double>(k);
    else
      sum += chi * std::log(std::sin(pi * static_cast<long double>(k) / static_cast<long double>(n)));
  }
  if (D < 0) return -pi * sum / std::pow(static_cast<long double>(n), 1.5L);
  return -sum / std::sqrt(static_cast<long double>(n));
}

}  // namespace conics
