#include "conics/constants.hpp"

#include <cmath>
#include <algorithm>
#include <numbers>
#include <vector>

#include "conics/densities.hpp"
#include "conics/errors.hpp"

namespace conics {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;
// Primes at or below this bound use enumerated local densities.
constexpr std::int64_t kEnumeratedDensityBound = 50;

long double ld(std::int64_t x) { return static_cast<long double>(x); }

long double sqrt_one_minus(std::int64_t p) { return std::sqrt(1 - 1 / ld(p)); }

long double route2_factor(std::int64_t p) {
  const long double x = ld(p);
  const long double q = x * x - 1;
  return std::pow(1 - 1 / x, 1.5L) * (x * x + x + 1) * (2 * x * x + x + 2) / (2 * q * q);
}

void check_odd_modulus(std::int64_t q, std::int64_t a, std::int64_t d) {
  if (q != 4 && q != 8) throw DomainError("q must be 4 or 8");
  if (a % 2 == 0 || d % 2 == 0 || d == 0) throw DomainError("a and d must be odd");
}

std::vector<std::int64_t> odd_primes_by_trial(std::int64_t n) {
  std::vector<std::int64_t> out;
  n = odd_part(n);
  for (std::int64_t p = 3; p * p <= n; p += 2)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// (2 pi)^{-3/2} c(b, m) / (2 tau((m12 m13 m23)_odd)).
long double genguo_scale(const FamilyParams& params) {
  const auto omega = odd_primes_by_trial(params.m_product()).size();
  const long double tau_odd = std::ldexp(1.0L, static_cast<int>(omega));
  return c_bm(params) / (2 * tau_odd * std::pow(2 * kPi, 1.5L));
}

}  // namespace

long double selberg_t(std::int64_t p) { return -ld(p) * std::log1p(-1 / ld(p)); }

ProductValue selberg_t0(std::int64_t prime_bound) {
  // t_p (1 - 1/p)^{1/2} = 1 - 1/(24 p^2) + O(p^-3).
  auto prod = euler_product(
      prime_bound, [](std::int64_t p) { return selberg_t(p) * sqrt_one_minus(p); }, 0.1L);
  // Leading tail: sum_{p > P} 1/p^2 ~ 1/(P log P).
  const long double P = static_cast<long double>(prime_bound);
  prod.value *= std::exp(-1 / (24 * P * std::log(P)));
  prod.tail = std::expm1(0.01L / (P * std::log(P)));
  return prod * (1 / std::sqrt(kPi));
}

ProductValue kappa(std::int64_t prime_bound) {
  return euler_product(
      prime_bound,
      [](std::int64_t p) { return std::pow(1 - 1 / ld(p), 1.5L) * (1 + 3 / (2 * ld(p))); }, 2, 3);
}

ProductValue gamma_d(const std::array<std::int64_t, 3>& d, std::int64_t prime_bound) {
  for (const auto x : d)
    if (x == 0 || x % 2 == 0) throw DomainError("gamma needs odd nonzero entries");
  return kappa(prime_bound) * to_real(gamma_ratio(d));
}

ProductValue beta_bm(const FamilyParams& params, std::int64_t prime_bound) {
  const auto& b = params.b();
  const std::int64_t mprod = params.m_product();
  const std::array<std::int64_t, 3> pair_gcd{gcd(b[0], b[1]), gcd(b[0], b[2]), gcd(b[1], b[2])};
  return euler_product(
      prime_bound,
      [&](std::int64_t p) {
        int k = 0;
        for (const auto g : pair_gcd)
          if ((mprod * g) % p != 0) ++k;
        return std::pow(1 - 1 / ld(p), 1.5L) * (1 + k / (2 * ld(p)));
      },
      2, 3);
}

int c_bm(const FamilyParams& params) {
  if (params.m_product() % 2 == 0) return 2;
  const auto& b = params.b();
  int c = 3;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (gcd(b[i], b[j]) % 2 != 0) ++c;
  return c;
}

ConicConstant predict_conics(std::int64_t prime_bound) {
  ConicConstant out;
  const long double c2 = to_real(local_density_conic_closed(2)) / sqrt_one_minus(2);
  auto odd_cp = euler_product(
      prime_bound,
      [](std::int64_t p) { return to_real(local_density_conic_closed(p)) / sqrt_one_minus(p); }, 2, 3);
  out.route1 = odd_cp * (2 * 6 * c2 / std::pow(kPi, 1.5L));

  auto kprime = euler_product(prime_bound, route2_factor, 2, 3);
  out.route2 = kprime * (3 * (49.0L / 3) / std::pow(2 * kPi, 1.5L));

  // tau_f: real density times the convergence-factor-regularized p-adic
  // densities, the small primes taken from the enumeration route.
  auto tau_p = [](std::int64_t p) {
    if (p <= kEnumeratedDensityBound) return to_real(local_density_conic(p, 3).value);
    return to_real(local_density_conic_closed(p));
  };
  auto tau_odd = euler_product(
      prime_bound, [&](std::int64_t p) { return tau_p(p) / sqrt_one_minus(p); }, 2, 3);
  const long double tau_f =
      tau_odd.value * to_real(local_density_conic_real()) * tau_p(2) / sqrt_one_minus(2);
  const long double theta = 1.0L / 3, sub_brauer = 2, eta_power = std::pow(3.0L, 1.5L);
  const long double anticanonical = theta * sub_brauer * tau_f * eta_power / std::pow(kPi, 1.5L);
  // N(f, B) ~ anticanonical * B^3 / (3 log B)^{3/2}; N(B) counts +-t.
  out.assembly = {2 * anticanonical / eta_power, tau_odd.tail, prime_bound};
  return out;
}

ProductValue predict_all_conics(std::int64_t prime_bound) {
  auto theta_p = [](std::int64_t p) {
    if (p <= kEnumeratedDensityBound) return to_real(conic_haar_measure(p, 3).value);
    return to_real(local_density_conic_closed(p)) /
           (1 + 1 / ld(p) + 1 / (ld(p) * ld(p)));
  };
  auto prod = euler_product(
      prime_bound, [&](std::int64_t p) { return theta_p(p) / std::pow(1 - 1 / ld(p), 1.5L); }, 2);
  const long double theta_inf = 6;
  return prod * (2 * theta_inf / std::pow(kPi, 1.5L));
}

ProductValue predict_genguo(const FamilyParams& params, std::int64_t prime_bound) {
  return beta_bm(params, prime_bound) * genguo_scale(params);
}

ExactRational beta_ratio(const FamilyParams& params) {
  const auto& b = params.b();
  const std::array<std::int64_t, 3> pair_gcd{gcd(b[0], b[1]), gcd(b[0], b[2]), gcd(b[1], b[2])};
  ExactRational out = 1;
  for (const auto p : odd_primes_by_trial(params.m_product() * pair_gcd[0] * pair_gcd[1] * pair_gcd[2])) {
    int k = 0;
    for (const auto g : pair_gcd)
      if ((params.m_product() * g) % p != 0) ++k;
    out *= rational(2 * p + k, 2 * p + 3);
  }
  return out;
}

BoxPrediction predict_conics_by_box(std::int64_t bound, double threshold, const FactorSieve& sieve,
                                    unsigned workers, std::int64_t prime_bound) {
  if (!(threshold >= 2)) throw DomainError("box threshold must be at least 2");
  if (bound > sieve.limit()) throw CapacityError("census bound exceeds sieve limit");
  const long double k = kappa(prime_bound).value;
  const KernelTable table(sieve, std::max<std::int64_t>(bound, 2));
  BoxPrediction out;
  std::int64_t counted = 0;
  long double main = 0;
  for (const auto& fb : conic_family_boxes(bound)) {
    ++out.boxes;
    const auto& x = fb.box;
    if (std::min({x[0], x[1], x[2]}) >= threshold) {
      ++out.asymptotic_boxes;
      long double term = k * to_real(beta_ratio(fb.params)) * genguo_scale(fb.params);
      for (const double xi : x) {
        const long double v = xi;
        term *= v / std::sqrt(std::log(v));
      }
      main += term;
    } else {
      counted += count_generalized(fb.params, x, table, workers);
    }
  }
  out.exact_part = 6 * counted;
  out.asymptotic_part = 6 * main;
  return out;
}

ProductValue guo_constant(std::int64_t prime_bound) {
  auto prod = euler_product(
      prime_bound,
      [](std::int64_t p) { return std::pow(1 - 1 / ld(p), 1.5L) * (1 + 3 / (2 * ld(p))); }, 2);
  return prod * std::pow(2 / std::sqrt(kPi), 3.0L);
}

ProductValue predict_two_squares(std::int64_t prime_bound) {
  auto prod = euler_product(
      prime_bound,
      [](std::int64_t p) {
        const long double q = ld(p) * ld(p);
        return p % 4 == 1 ? 1 - 1 / q : 1 + 1 / q;
      },
      1, 3);
  return prod * (3 / (2 * kPi) * dirichlet_l1(-4));
}

long double two_squares_naive_truncation(std::int64_t prime_bound) {
  auto prod = euler_product(
      prime_bound,
      [](std::int64_t p) {
        const long double x = ld(p);
        return p % 4 == 1 ? 1 + 1 / x : 1 - (x - 1) / (x * (x + 1));
      },
      1, 3);
  return prod.value * 3 / (2 * kPi);
}

SelbergDelange selberg_delange_check(std::int64_t x, std::int64_t q, std::int64_t a, std::int64_t d,
                                     const FactorSieve& sieve, std::int64_t prime_bound) {
  check_odd_modulus(q, a, d);
  if (x < 2) throw DomainError("x must be at least 2");
  if (x > sieve.limit()) throw CapacityError("x exceeds the sieve");
  const std::int64_t residue = ((a % q) + q) % q;
  // tau by the smallest-prime-factor recursion, one pass over [1, x].
  std::vector<std::uint16_t> tau_table(static_cast<std::size_t>(x) + 1, 0);
  std::vector<std::uint8_t> top_exp(static_cast<std::size_t>(x) + 1, 0);
  tau_table[1] = 1;
  long double sum = 0;
  for (std::int64_t n = 2; n <= x; ++n) {
    const std::int64_t p = sieve.spf(n);
    const std::int64_t m = n / p;
    if (m % p == 0) {
      top_exp[n] = static_cast<std::uint8_t>(top_exp[m] + 1);
      tau_table[n] = static_cast<std::uint16_t>(tau_table[m] / (top_exp[m] + 1) * (top_exp[n] + 1));
    } else {
      top_exp[n] = 1;
      tau_table[n] = static_cast<std::uint16_t>(tau_table[m] * 2);
    }
  }
  for (std::int64_t n = residue; n <= x; n += q) {
    if (n < 1 || gcd(n, d) != 1) continue;
    sum += 1.0L / tau_table[n];
  }
  long double t_correction = selberg_t(2);
  for (const auto p : sieve.prime_divisors(d))
    if (p != 2) t_correction *= selberg_t(p);
  const long double phi_q = ld(q / 2);
  const long double main = selberg_t0(prime_bound).value / (phi_q * t_correction) * ld(x) /
                           std::sqrt(std::log(ld(x)));
  return {sum, main};
}

SelbergDelange selberg_delange_triple(const std::array<std::int64_t, 3>& x,
                                      const std::array<std::int64_t, 3>& q,
                                      const std::array<std::int64_t, 3>& a,
                                      const std::array<std::int64_t, 3>& d, const FactorSieve& sieve,
                                      std::int64_t prime_bound) {
  std::array<std::vector<std::pair<std::int64_t, long double>>, 3> lists;
  for (std::size_t i = 0; i < 3; ++i) {
    check_odd_modulus(q[i], a[i], d[i]);
    if (x[i] < 2) throw DomainError("X_i must be at least 2");
    if (x[i] > sieve.limit()) throw CapacityError("X_i exceeds the sieve");
    const std::int64_t residue = ((a[i] % q[i]) + q[i]) % q[i];
    for (std::int64_t n = residue; n <= x[i]; n += q[i])
      if (n >= 1 && gcd(n, d[i]) == 1 && moebius_sq(n, sieve))
        lists[i].emplace_back(n, 1.0L / tau(n, sieve));
  }
  long double sum = 0;
  for (const auto& [n1, w1] : lists[0])
    for (const auto& [n2, w2] : lists[1]) {
      if (gcd(n1, n2) != 1) continue;
      const std::int64_t n12 = n1 * n2;
      long double inner = 0;
      for (const auto& [n3, w3] : lists[2])
        if (gcd(n12, n3) == 1) inner += w3;
      sum += w1 * w2 * inner;
    }
  long double main = gamma_d(d, prime_bound).value / std::pow(2 * kPi, 1.5L);
  for (std::size_t i = 0; i < 3; ++i)
    main *= ld(x[i]) / (ld(q[i] / 2) * std::sqrt(std::log(ld(x[i]))));
  return {sum, main};
}

}  // namespace conics
