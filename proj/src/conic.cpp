#include "conics/conic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "conics/errors.hpp"

namespace conics {

namespace {

int sign_of(std::int64_t x) { return x < 0 ? -1 : 1; }

std::int64_t isqrt(std::int64_t n) {
  if (n <= 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(__int128 n, std::int64_t& root) {
  if (n < 0) return false;
  if (n > static_cast<__int128>(INT64_MAX)) return false;
  root = isqrt(static_cast<std::int64_t>(n));
  return static_cast<__int128>(root) * root == n;
}

std::int64_t mod8(std::int64_t x) { return ((x % 8) + 8) % 8; }

// Primes dividing 2abc for a reduced conic, taken from its factors n_i, m_ij
// (each no larger than an original kernel, so within the sieve).
std::vector<std::int64_t> bad_primes(const ReducedConic& r, const FactorSieve& sieve) {
  std::vector<std::int64_t> primes{2};
  for (const auto x : {r.n[0], r.n[1], r.n[2], r.m12, r.m13, r.m23})
    for (const auto p : sieve.prime_divisors(x)) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

}  // namespace

DiagonalConic::DiagonalConic(std::int64_t t0, std::int64_t t1, std::int64_t t2) : t_{t0, t1, t2} {
  if (t0 == 0 || t1 == 0 || t2 == 0) throw DomainError("diagonal conic coefficients must be nonzero");
}

ReducedConic reduce(const DiagonalConic& conic, const FactorSieve& sieve) {
  ReducedConic r{};
  std::array<std::int64_t, 3> kernel{};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto s = split_square(conic[i], sieve);
    r.roots[i] = s.root;
    kernel[i] = s.kernel;
  }
  r.content = gcd(gcd(kernel[0], kernel[1]), kernel[2]);
  std::array<std::int64_t, 3> c{};
  for (std::size_t i = 0; i < 3; ++i) c[i] = kernel[i] / r.content;
  r.m12 = gcd(c[0], c[1]);
  r.m13 = gcd(c[0], c[2]);
  r.m23 = gcd(c[1], c[2]);
  r.n = {c[0] / (r.m12 * r.m13), c[1] / (r.m12 * r.m23), c[2] / (r.m13 * r.m23)};
  r.a = sign_of(conic[0]) * r.n[0] * r.m23;
  r.b = sign_of(conic[1]) * r.n[1] * r.m13;
  r.c = sign_of(conic[2]) * r.n[2] * r.m12;
  return r;
}

bool soluble_at(const ReducedConic& r, const Place& v) {
  if (v.is_real()) return !(sign_of(r.a) == sign_of(r.b) && sign_of(r.b) == sign_of(r.c));
  return hilbert(-r.a * r.b, -r.a * r.c, v) == 1;
}

bool soluble_at(const DiagonalConic& conic, const Place& v, const FactorSieve& sieve) {
  if (v.is_real()) {
    const int s0 = sign_of(conic[0]);
    return !(s0 == sign_of(conic[1]) && s0 == sign_of(conic[2]));
  }
  return soluble_at(reduce(conic, sieve), v);
}

bool soluble_q(const ReducedConic& r, const FactorSieve& sieve) {
  if (!soluble_at(r, Place::real())) return false;
  for (const auto p : bad_primes(r, sieve))
    if (!soluble_at(r, Place::prime(p))) return false;
  return true;
}

bool soluble_q(const DiagonalConic& conic, const FactorSieve& sieve) {
  return soluble_q(reduce(conic, sieve), sieve);
}

std::optional<IntPoint> rational_point_oracle(const ReducedConic& r, std::int64_t budget) {
  const std::array<std::int64_t, 3> coef{r.a, r.b, r.c};
  // Solve for the variable with the smallest coefficient; its Holzer bound is
  // the largest, so the remaining two-dimensional box is the smallest.
  std::size_t k = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::llabs(coef[i]) < std::llabs(coef[k])) k = i;
  const std::size_t i = (k + 1) % 3;
  const std::size_t j = (k + 2) % 3;
  const std::int64_t A = coef[i], B = coef[j], C = coef[k];
  const std::int64_t X = isqrt(std::llabs(B) * std::llabs(C));
  const std::int64_t Y = isqrt(std::llabs(A) * std::llabs(C));
  if ((X + 1) > budget / (2 * Y + 1))
    throw CapacityError("Holzer box too large for exhaustive search");
  for (std::int64_t x = 0; x <= X; ++x) {
    for (std::int64_t y = (x == 0 ? 1 : -Y); y <= Y; ++y) {
      const __int128 lhs = static_cast<__int128>(A) * x * x + static_cast<__int128>(B) * y * y;
      if (lhs % C != 0) continue;
      std::int64_t z = 0;
      if (!is_square(-lhs / C, z)) continue;
      std::array<std::int64_t, 3> pt{};
      pt[i] = x;
      pt[j] = y;
      pt[k] = z;
      return IntPoint{pt[0], pt[1], pt[2]};
    }
  }
  return std::nullopt;
}

bool soluble_at_2_congruence(std::int64_t r0, std::int64_t r1, std::int64_t r2) {
  const std::array<std::int64_t, 3> r{r0, r1, r2};
  std::array<int, 3> v{};
  int total = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (r[i] == 0) throw DomainError("congruence criterion needs nonzero coefficients");
    v[i] = v_p(r[i], 2);
    total += v[i];
  }
  if (total > 1) throw DomainError("congruence criterion needs v_2(r0 r1 r2) in {0, 1}");
  if (total == 0) {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        if (((r[i] + r[j]) % 4 + 4) % 4 == 0) return true;
    return false;
  }
  std::size_t k = 0;
  while (v[k] != 1) ++k;
  const std::int64_t ri = r[(k + 1) % 3], rj = r[(k + 2) % 3];
  return mod8(ri + rj) == 0 || mod8(ri + rj + r[k]) == 0;
}

bool soluble_at_2_congruence(const ReducedConic& r) { return soluble_at_2_congruence(r.a, r.b, r.c); }

bool norm_representable(std::int64_t num, std::int64_t den, std::int64_t a,
                        const FactorSieve& sieve) {
  if (num == 0 || den == 0) throw DomainError("norm test needs a nonzero rational");
  if (a == 0) throw DomainError("norm test needs a nonzero a");
  std::vector<std::int64_t> primes{2};
  for (const auto x : {num, den, a})
    for (const auto p : sieve.prime_divisors(x)) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  // (num/den, a) = (num * den, a) = (num, a)(den, a).
  auto symbol = [&](const Place& v) { return hilbert(num, a, v) * hilbert(den, a, v); };
  if (symbol(Place::real()) != 1) return false;
  for (const auto p : primes)
    if (symbol(Place::prime(p)) != 1) return false;
  return true;
}

bool sum_of_two_squares(std::int64_t num, std::int64_t den, const FactorSieve& sieve) {
  if (num == 0 || den == 0) throw DomainError("sum-of-squares test needs a nonzero rational");
  if ((num < 0) != (den < 0)) return false;
  for (const auto x : {num, den})
    for (const auto& pp : sieve.factor(x))
      if (pp.prime % 4 == 3 && pp.exponent % 2 == 1) {
        // num and den are coprime, so the two exponents never need summing.
        return false;
      }
  return true;
}

}  // namespace conics
