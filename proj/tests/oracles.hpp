#pragma once

// Independent brute-force references for the unit and acceptance tests. None
// of these call into the library.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <array>
#include <map>
#include <vector>

namespace oracle {

inline std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  n = std::llabs(n);
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

inline bool squarefree(std::int64_t n) {
  for (const auto& [p, e] : factor(n))
    if (e > 1) return false;
  return true;
}

inline std::int64_t tau(std::int64_t n) {
  std::int64_t t = 0;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) ++t;
  return t;
}

inline std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  b %= m;
  if (b < 0) b += m;
  while (e > 0) {
    if (e & 1) r = static_cast<std::int64_t>(static_cast<__int128>(r) * b % m);
    b = static_cast<std::int64_t>(static_cast<__int128>(b) * b % m);
    e >>= 1;
  }
  return r;
}

// Legendre symbol by Euler's criterion.
inline int legendre(std::int64_t a, std::int64_t p) {
  const auto r = powmod(a, (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

// Jacobi symbol as the product of Legendre symbols over the factorization.
inline int jacobi(std::int64_t a, std::int64_t n) {
  int s = 1;
  for (const auto& [p, e] : factor(n))
    for (int i = 0; i < e; ++i) s *= legendre(a, p);
  return s;
}

inline std::int64_t square_free_part(std::int64_t n) {
  std::int64_t out = n < 0 ? -1 : 1;
  for (const auto& [p, e] : factor(n))
    if (e % 2) out *= p;
  return out;
}

// Whether z^2 = a x^2 + b y^2 has a nontrivial solution in Q_p, by searching
// primitive solutions modulo p^3 (odd p) or 2^5 after removing square factors.
// With v_p(a), v_p(b) <= 1 these moduli are enough for Hensel lifting.
// Memoized and not thread-safe.
inline int hilbert_local(std::int64_t a, std::int64_t b, std::int64_t p) {
  a = square_free_part(a);
  b = square_free_part(b);
  static std::map<std::array<std::int64_t, 3>, int> memo;
  const std::array<std::int64_t, 3> key{a, b, p};
  if (const auto it = memo.find(key); it != memo.end()) return it->second;
  const int value = [&] {
  const std::int64_t m = p == 2 ? 32 : p * p * p;
  std::vector<char> square_any(static_cast<std::size_t>(m), 0), square_unit(static_cast<std::size_t>(m), 0);
  for (std::int64_t z = 0; z < m; ++z) {
    square_any[z * z % m] = 1;
    if (z % p) square_unit[z * z % m] = 1;
  }
  const std::int64_t am = ((a % m) + m) % m, bm = ((b % m) + m) % m;
  for (std::int64_t x = 0; x < m; ++x)
    for (std::int64_t y = 0; y < m; ++y) {
      const std::int64_t v = (am * (x * x % m) + bm * (y * y % m)) % m;
      const bool primitive_xy = x % p != 0 || y % p != 0;
      if (primitive_xy ? square_any[v] : square_unit[v]) return 1;
    }
  return -1;
  }();
  memo.emplace(key, value);
  return value;
}

// Nontrivial integer point of a x^2 + b y^2 + c z^2 = 0 inside the Holzer box
// (searched over x, y with z solved), for squarefree pairwise coprime a, b, c.
inline bool holzer_soluble(std::int64_t a, std::int64_t b, std::int64_t c) {
  if ((a > 0 && b > 0 && c > 0) || (a < 0 && b < 0 && c < 0)) return false;
  const auto bx = static_cast<std::int64_t>(std::sqrt(std::fabs(static_cast<double>(b) * c))) + 1;
  const auto by = static_cast<std::int64_t>(std::sqrt(std::fabs(static_cast<double>(a) * c))) + 1;
  for (std::int64_t x = 0; x <= bx; ++x)
    for (std::int64_t y = 0; y <= by; ++y) {
      if (x == 0 && y == 0) continue;
      const __int128 rest = -(static_cast<__int128>(a) * x * x + static_cast<__int128>(b) * y * y);
      if (rest % c != 0) continue;
      const __int128 z2 = rest / c;
      if (z2 < 0) continue;
      auto z = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(z2)));
      while (static_cast<__int128>(z) * z > z2) --z;
      while (static_cast<__int128>(z + 1) * (z + 1) <= z2) ++z;
      if (static_cast<__int128>(z) * z == z2) return true;
    }
  return false;
}

// Rational solubility of t0 x^2 + t1 y^2 + t2 z^2 = 0 for any nonzero t:
// strip squares, divide common factors into the other coefficients and run
// the Holzer search on the resulting squarefree pairwise coprime model.
inline bool conic_soluble(std::int64_t t0, std::int64_t t1, std::int64_t t2) {
  std::int64_t c[3] = {square_free_part(t0), square_free_part(t1), square_free_part(t2)};
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        const std::int64_t g = std::gcd(c[i], c[j]);
        if (g > 1) {
          const int k = 3 - i - j;
          c[i] /= g;
          c[j] /= g;
          c[k] *= g;
          c[k] = square_free_part(c[k]);
          changed = true;
        }
      }
  }
  return holzer_soluble(c[0], c[1], c[2]);
}

// a/b (positive, coprime) is a sum of two rational squares iff every prime
// 3 mod 4 divides ab to an even power.
inline bool two_squares_ratio(std::int64_t a, std::int64_t b) {
  for (const auto& [p, e] : factor(a * b))
    if (p % 4 == 3 && e % 2) return false;
  return true;
}

}  // namespace oracle
