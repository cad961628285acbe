#include "conics/densities.hpp"

#include <algorithm>
#include <vector>

#include "conics/arith.hpp"
#include "conics/errors.hpp"

namespace conics {

namespace {

void require_prime(std::int64_t p) {
  if (p < 2) throw DomainError("not a prime");
  for (std::int64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) throw DomainError("not a prime");
}

ExactRational power(const ExactRational& x, int e) {
  ExactRational r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

std::vector<std::int64_t> unit_residues(std::int64_t p) {
  std::vector<std::int64_t> out;
  const std::int64_t mod = p == 2 ? 8 : p;
  for (std::int64_t u = 1; u < mod; ++u)
    if (u % p != 0) out.push_back(u);
  return out;
}

// Per-coordinate weight of each valuation parity: valuations v < depth one at
// a time, v >= depth as one geometric series per parity (or dropped).
std::array<ExactRational, 2> parity_weights(std::int64_t p, int depth, bool sum_tails) {
  const ExactRational inv = rational(1, p);
  const ExactRational unit = 1 - inv;
  std::array<ExactRational, 2> w{0, 0};
  for (int v = 0; v < depth; ++v) w[v % 2] += power(inv, v) * unit;
  if (sum_tails) {
    for (int lambda = 0; lambda < 2; ++lambda) {
      int v0 = depth;
      if (v0 % 2 != lambda) ++v0;
      w[lambda] += power(inv, v0) * unit / (1 - inv * inv);
    }
  }
  return w;
}

}  // namespace

LocalDensity conic_haar_measure(std::int64_t p, int depth, bool sum_tails) {
  require_prime(p);
  if (depth < 1) throw DomainError("depth must be positive");
  const auto units = unit_residues(p);
  const auto n_units = static_cast<std::int64_t>(units.size());
  const auto w = parity_weights(p, depth, sum_tails);
  ExactRational total = 0;
  for (int mask = 0; mask < 8; ++mask) {
    const int l0 = mask & 1, l1 = mask >> 1 & 1, l2 = mask >> 2 & 1;
    std::int64_t good = 0;
    for (const auto u0 : units)
      for (const auto u1 : units)
        for (const auto u2 : units) {
          const std::int64_t t0 = (l0 ? p : 1) * u0, t1 = (l1 ? p : 1) * u1, t2 = (l2 ? p : 1) * u2;
          if (hilbert(-t0 * t1, -t0 * t2, Place::prime(p)) == 1) ++good;
        }
    total += w[l0] * w[l1] * w[l2] * rational(good, n_units * n_units * n_units);
  }
  LocalDensity out;
  out.place = Place::prime(p);
  out.value = total;
  out.tail_bound = sum_tails ? ExactRational(0) : rational(3) / power(rational(p), depth);
  out.provenance = Provenance::kEnumeration;
  return out;
}

LocalDensity local_density_conic(std::int64_t p, int depth, bool sum_tails) {
  auto d = conic_haar_measure(p, depth, sum_tails);
  const ExactRational scale = 1 + rational(1, p) + rational(1, p * p);
  d.value *= scale;
  d.tail_bound *= scale;
  return d;
}

ExactRational local_density_conic_closed(std::int64_t p) {
  require_prime(p);
  if (p == 2) return rational(49, 48);
  return (1 + rational(1, p) + rational(1, p * p)) * rational(2 * p * p + p + 2, 2 * (p + 1) * (p + 1));
}

ExactRational local_density_conic_real() {
  // Mixed signs fill 6 of the 8 octants of [-1, 1]^3.
  return tamagawa_convert(rational(6), 2, Place::real());
}

LocalDensity local_density_two_squares_enumerated(std::int64_t p) {
  require_prime(p);
  const auto units = unit_residues(p);
  const auto n_units = static_cast<std::int64_t>(units.size());
  const auto w = parity_weights(p, 2, true);
  ExactRational total = 0;
  for (int mask = 0; mask < 4; ++mask) {
    const int l0 = mask & 1, l1 = mask >> 1 & 1;
    std::int64_t good = 0;
    for (const auto u0 : units)
      for (const auto u1 : units) {
        const std::int64_t t0 = (l0 ? p : 1) * u0, t1 = (l1 ? p : 1) * u1;
        if (hilbert(t0 * t1, -1, Place::prime(p)) == 1) ++good;
      }
    total += w[l0] * w[l1] * rational(good, n_units * n_units);
  }
  LocalDensity out;
  out.place = Place::prime(p);
  out.value = tamagawa_convert(total, 1, Place::prime(p));
  out.tail_bound = 0;
  out.provenance = Provenance::kEnumeration;
  return out;
}

ExactRational local_density_two_squares(const Place& v) {
  if (v.is_real()) return 2;
  const std::int64_t p = v.p();
  require_prime(p);
  if (p == 2) return rational(3, 4);
  if (p % 4 == 1) return 1 + rational(1, p);
  return 1 - rational(p - 1, p * (p + 1));
}

ExactRational tamagawa_convert(const ExactRational& measure, int n, const Place& v, MeasureKind kind) {
  if (n < 0) throw DomainError("dimension must be nonnegative");
  if (v.is_real()) return rational(n + 1, 2) * measure;
  const std::int64_t p = v.p();
  if (kind == MeasureKind::kPrimitive) return measure / (1 - rational(1, p));
  ExactRational scale = 0;
  for (int i = 0; i <= n; ++i) scale += power(rational(1, p), i);
  return scale * measure;
}

std::array<ExactRational, 4> two_adic_cases() {
  // beta_i classes: 0 (weight 1) and >= 1 (weight sum_{b >= 1} 4^-b = 1/3).
  // c depends only on the parities, so 2 stands in for the class >= 1.
  std::array<ExactRational, 4> cases{0, 0, 0, 0};
  for (int bmask = 0; bmask < 8; ++bmask) {
    const std::array<int, 3> beta{bmask & 1, bmask >> 1 & 1, bmask >> 2 & 1};
    if (beta[0] && beta[1] && beta[2]) continue;  // min beta_i = 0
    for (int mu_index = -1; mu_index < 3; ++mu_index) {
      std::array<int, 3> mu{0, 0, 0};  // order 12, 13, 23
      if (mu_index >= 0) mu[mu_index] = 1;
      // min(mu12, beta3) = min(mu13, beta2) = min(mu23, beta1) = 0
      if ((mu[0] && beta[2]) || (mu[1] && beta[1]) || (mu[2] && beta[0])) continue;
      const std::array<std::int64_t, 3> b{beta[0] ? 2 : 1, beta[1] ? 2 : 1, beta[2] ? 2 : 1};
      ExactRational weight = 1;
      for (const auto x : beta)
        if (x) weight *= rational(1, 3);
      if (mu_index >= 0) weight *= rational(1, 4);
      int c;
      if (mu_index >= 0) {
        c = 2;
      } else {
        c = 3;
        for (std::size_t i = 0; i < 3; ++i)
          for (std::size_t j = i + 1; j < 3; ++j)
            if (gcd(b[i], b[j]) % 2 != 0) ++c;
      }
      const int nonzero = beta[0] + beta[1] + beta[2];
      const std::size_t slot = mu_index >= 0 ? 0 : (nonzero == 0 ? 1 : (nonzero == 1 ? 2 : 3));
      cases[slot] += weight * c;
    }
  }
  return cases;
}

ExactRational kappa_prime_enumerated(std::int64_t p) {
  require_prime(p);
  if (p == 2) throw DomainError("odd primes only");
  // beta_i classes 0 and >= 1; the class >= 1 carries sum_{b >= 1} p^{-2b} = 1/(p^2 - 1).
  const ExactRational deep = rational(1, p * p - 1);
  ExactRational sum = 0;
  for (int bmask = 0; bmask < 8; ++bmask) {
    const std::array<int, 3> beta{bmask & 1, bmask >> 1 & 1, bmask >> 2 & 1};
    if (beta[0] && beta[1] && beta[2]) continue;
    for (int mu_index = -1; mu_index < 3; ++mu_index) {
      std::array<int, 3> mu{0, 0, 0};
      if (mu_index >= 0) mu[mu_index] = 1;
      if ((mu[0] && beta[2]) || (mu[1] && beta[1]) || (mu[2] && beta[0])) continue;
      ExactRational weight = 1;
      for (const auto x : beta)
        if (x) weight *= deep;
      // g = f(M gcd(b2, b3), M gcd(b1, b3), M gcd(b1, b2)) at p.
      const bool p_divides_m = mu_index >= 0;
      int count = 0;
      if (p_divides_m || (beta[1] && beta[2])) ++count;
      if (p_divides_m || (beta[0] && beta[2])) ++count;
      if (p_divides_m || (beta[0] && beta[1])) ++count;
      const ExactRational g = 1 - rational(count, 2 * p + 3);
      if (p_divides_m) weight *= rational(1, 2 * p * p);  // p^{-2} / tau(p)
      sum += weight * g;
    }
  }
  return (1 + rational(3, 2 * p)) * sum;
}

ExactRational kappa_prime_bracket(std::int64_t p) {
  require_prime(p);
  const ExactRational ip2 = rational(1, p * p);
  const ExactRational q = rational(p * p - 1);
  const ExactRational bracket = 3 * (1 - rational(3, 3 + 2 * p)) / (2 * p * p * (1 - ip2) * (1 - ip2)) + 1 +
                                3 / q + 3 * (1 - rational(1, 2 * p + 3)) / (q * q);
  return (1 + rational(3, 2 * p)) * bracket;
}

ExactRational kappa_prime_closed(std::int64_t p) {
  require_prime(p);
  return rational((p * p + p + 1) * (2 * p * p + p + 2), 2 * (p * p - 1) * (p * p - 1));
}

ExactRational gamma_ratio(const std::array<std::int64_t, 3>& d) {
  std::vector<std::int64_t> primes;
  for (const auto x : d) {
    if (x == 0 || x % 2 == 0) throw DomainError("gamma needs odd nonzero entries");
    std::int64_t m = odd_part(x);
    for (std::int64_t q = 3; q * q <= m; q += 2)
      if (m % q == 0) {
        primes.push_back(q);
        while (m % q == 0) m /= q;
      }
    if (m > 1) primes.push_back(m);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  ExactRational f = 1;
  for (const auto p : primes) {
    int count = 0;
    for (const auto x : d)
      if (x % p == 0) ++count;
    f *= 1 - rational(count, 2 * p + 3);
  }
  return f;
}

}  // namespace conics
