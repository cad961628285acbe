#include "conics/hilbert.hpp"

#include <algorithm>
#include <vector>

#include "conics/errors.hpp"

namespace conics {

Place Place::prime(std::int64_t p) {
  if (p < 2) throw DomainError("finite place needs a prime p >= 2");
  return Place(p);
}

std::string Place::to_string() const { return is_real() ? "inf" : std::to_string(p_); }

namespace {

struct UnitSplit {
  int valuation;
  std::int64_t unit;
};

UnitSplit split(std::int64_t x, std::int64_t p) {
  UnitSplit s{0, x};
  while (s.unit % p == 0) {
    s.unit /= p;
    ++s.valuation;
  }
  return s;
}

std::int64_t mod8(std::int64_t x) { return ((x % 8) + 8) % 8; }

int eps2(std::int64_t u) { return mod8(u) % 4 == 3 ? 1 : 0; }

int omega2(std::int64_t u) {
  const auto r = mod8(u);
  return (r == 3 || r == 5) ? 1 : 0;
}

}  // namespace

int hilbert(std::int64_t a, std::int64_t b, const Place& v) {
  if (a == 0 || b == 0) throw DomainError("Hilbert symbol needs nonzero arguments");
  if (v.is_real()) return (a < 0 && b < 0) ? -1 : 1;
  const std::int64_t p = v.p();
  const auto [alpha, u] = split(a, p);
  const auto [beta, w] = split(b, p);
  if (p == 2) {
    const int e = eps2(u) * eps2(w) + (alpha & 1) * omega2(w) + (beta & 1) * omega2(u);
    return (e & 1) ? -1 : 1;
  }
  int s = 1;
  if ((alpha & 1) && (beta & 1) && (p & 3) == 3) s = -s;
  if (beta & 1) s *= jacobi(u, p);
  if (alpha & 1) s *= jacobi(w, p);
  return s;
}

bool hilbert_product_check(std::int64_t a, std::int64_t b, const FactorSieve& sieve) {
  std::vector<std::int64_t> primes{2};
  for (const auto p : sieve.prime_divisors(a)) primes.push_back(p);
  for (const auto p : sieve.prime_divisors(b)) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  int prod = hilbert(a, b, Place::real());
  for (const auto p : primes) prod *= hilbert(a, b, Place::prime(p));
  return prod == 1;
}

}  // namespace conics
