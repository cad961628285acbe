#include "conics/detectors.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "conics/conic.hpp"
#include "conics/errors.hpp"
#include "conics/hilbert.hpp"

namespace conics {

namespace {

std::vector<std::int64_t> odd_primes_of(std::int64_t n, const FactorSieve& sieve) {
  std::vector<std::int64_t> out;
  for (const auto p : sieve.prime_divisors(n))
    if (p != 2) out.push_back(p);
  return out;
}

// (x y / n) evaluated factor by factor so products never overflow.
int jacobi_product(std::initializer_list<std::int64_t> factors, std::int64_t n) {
  int s = 1;
  for (const auto f : factors) {
    s *= jacobi(f, n);
    if (s == 0) return 0;
  }
  return s;
}

int jacobi_two_power(int e, std::int64_t n) {
  if (e % 2 == 0) return 1;
  const auto r = n % 8;
  return (r == 1 || r == 7) ? 1 : -1;
}

// Parity of ((x-1)/2)((y-1)/2), i.e. of (x-1)(y-1)/4 for odd x, y.
int reciprocity_parity(std::int64_t x, std::int64_t y) {
  return static_cast<int>((((x - 1) / 2) & 1) & (((y - 1) / 2) & 1));
}

}  // namespace

DetectorInput::DetectorInput(std::int64_t a, std::int64_t b, std::int64_t c,
                             const FactorSieve& sieve)
    : a_(a), b_(b), c_(c) {
  if (a < 1 || b < 1 || c < 1) throw DomainError("detector input must be positive");
  if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1)
    throw DomainError("detector input must be pairwise coprime");
  if (!moebius_sq(a, sieve) || !moebius_sq(b, sieve) || !moebius_sq(c, sieve))
    throw DomainError("detector input must have squarefree product");
  r_ = odd_part(a) * odd_part(b) * odd_part(c);
  if (r_ == 1) throw DomainError("abc must be divisible by an odd prime");
}

std::int64_t detector_delta_sum(const DetectorInput& in, const FactorSieve& sieve) {
  const std::int64_t ac = in.a() * in.c(), bc = in.b() * in.c();
  std::vector<int> symbols;
  for (const auto x : {in.a(), in.b(), in.c()})
    for (const auto p : odd_primes_of(x, sieve)) symbols.push_back(hilbert(ac, bc, Place::prime(p)));
  const std::size_t k = symbols.size();
  const std::uint64_t full = (std::uint64_t{1} << k) - 1;
  std::int64_t sum = 0;
  for (std::uint64_t subset = 1; subset < full; ++subset) {
    int prod = 1;
    for (std::size_t i = 0; i < k; ++i)
      if (subset >> i & 1) prod *= symbols[i];
    sum += prod;
  }
  return sum;
}

int detector_lhs(const DetectorInput& in, const FactorSieve& sieve) {
  const int h2 = hilbert(in.a() * in.c(), in.b() * in.c(), Place::prime(2));
  // a, b, c are pairwise coprime, so tau(r) factors and r itself is never sieved.
  const std::int64_t tau_r =
      tau(odd_part(in.a()), sieve) * tau(odd_part(in.b()), sieve) * tau(odd_part(in.c()), sieve);
  const std::int64_t numerator = (1 + h2) * (1 + h2 + detector_delta_sum(in, sieve));
  const std::int64_t denominator = 2 * tau_r;
  if (numerator % denominator != 0 || numerator / denominator < 0 || numerator / denominator > 1)
    throw std::logic_error("detector formula did not evaluate to 0 or 1");
  return static_cast<int>(numerator / denominator);
}

std::int64_t detector_jacobi_sum(const DetectorInput& in, const FactorSieve& sieve) {
  const std::int64_t a = in.a(), b = in.b(), c = in.c();
  const std::array<std::int64_t, 3> odd{odd_part(a), odd_part(b), odd_part(c)};
  std::array<std::vector<std::int64_t>, 3> divs;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto primes = odd_primes_of(odd[i], sieve);
    divs[i] = squarefree_divisors(primes);
  }
  // Symbols per divisor: (bc/d1), (ac/d2), (-ab/d3).
  std::array<std::vector<int>, 3> sym;
  for (const auto d : divs[0]) sym[0].push_back(jacobi_product({b, c}, d));
  for (const auto d : divs[1]) sym[1].push_back(jacobi_product({a, c}, d));
  for (const auto d : divs[2]) sym[2].push_back(jacobi_product({-1, a, b}, d));
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < divs[0].size(); ++i)
    for (std::size_t j = 0; j < divs[1].size(); ++j)
      for (std::size_t k = 0; k < divs[2].size(); ++k) {
        const std::int64_t delta = divs[0][i] * divs[1][j] * divs[2][k];
        if (delta == 1 || delta == in.r()) continue;
        sum += sym[0][i] * sym[1][j] * sym[2][k];
      }
  return sum;
}

bool reciprocity_rearrangement_check(const ReciprocityTerm& t) {
  std::vector<std::int64_t> entries;
  for (const auto& arr : {t.d, t.dt, t.h, t.ht})
    for (const auto x : arr) entries.push_back(x);
  for (const auto x : entries)
    if (x < 1 || x % 2 == 0) throw DomainError("reciprocity term entries must be odd and positive");
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j)
      if (std::gcd(entries[i], entries[j]) != 1)
        throw DomainError("reciprocity term entries must be pairwise coprime");
  for (const auto& arr : {t.sigma, t.sigma_m})
    for (const auto s : arr)
      if (s != 0 && s != 1) throw DomainError("2-adic exponents must be 0 or 1");

  const auto& [d1, d2, d3] = t.d;
  const auto& [e1, e2, e3] = t.dt;
  const auto& [h12, h13, h23] = t.h;
  const auto& [k12, k13, k23] = t.ht;
  const auto& [s1, s2, s3] = t.sigma;
  const auto& [s12, s13, s23] = t.sigma_m;
  const int sigma = s1 + s2 + s3 + s12 + s13 + s23;

  // m_ij = 2^sigma_ij h_ij h~_ij.
  const int lhs =
      jacobi_two_power(s2 + s3 + s12 + s13, d1 * h23) *
      jacobi_product({d2, e2, d3, e3, h12, k12, h13, k13}, d1 * h23) *
      jacobi_two_power(s1 + s3 + s12 + s23, d2 * h13) *
      jacobi_product({d1, e1, d3, e3, h12, k12, h23, k23}, d2 * h13) *
      jacobi_two_power(s1 + s2 + s13 + s23, d3 * h12) *
      jacobi_product({d1, e1, d2, e2, h13, k13, h23, k23}, d3 * h12) * jacobi(-1, d3 * h12);

  int parity = reciprocity_parity(h12, h13) + reciprocity_parity(h12, h23) +
               reciprocity_parity(h13, h23);
  parity += reciprocity_parity(d1, d2) + reciprocity_parity(d1, d3) + reciprocity_parity(d2, d3);
  parity += reciprocity_parity(d1, h12) + reciprocity_parity(d1, h13);
  parity += reciprocity_parity(d2, h12) + reciprocity_parity(d2, h23);
  parity += reciprocity_parity(d3, h13) + reciprocity_parity(d3, h23);
  int rhs = (parity & 1) ? -1 : 1;
  rhs *= jacobi_two_power(sigma - s1 - s23, d1 * h23);
  rhs *= jacobi_two_power(sigma - s2 - s13, d2 * h13);
  rhs *= jacobi_two_power(sigma - s3 - s12, d3 * h12);
  rhs *= jacobi_product({e2, e3, k12, k13}, d1 * h23);
  rhs *= jacobi_product({e1, e3, k12, k23}, d2 * h13);
  rhs *= jacobi_product({-1, e1, e2, k23, k13}, d3 * h12);
  return lhs == rhs;
}

DecompositionReport detector_decomposition(const FamilyParams& params,
                                           const std::array<std::int64_t, 3>& box,
                                           const FactorSieve& sieve, EPrefactor prefactor) {
  const __int128 one = static_cast<__int128>(1) << kDyadicShift;
  const std::int64_t m12 = params.m12(), m13 = params.m13(), m23 = params.m23();
  const std::int64_t mprod = params.m_product();
  const std::array<std::int64_t, 3> m_odd{odd_part(m12), odd_part(m13), odd_part(m23)};

  DecompositionReport rep{};
  rep.tau_m_odd = tau(odd_part(mprod), sieve);
  rep.count = count_generalized(
      params, {static_cast<double>(box[0]), static_cast<double>(box[1]), static_cast<double>(box[2])},
      sieve);

  auto hilbert2 = [](std::int64_t x, std::int64_t y) { return hilbert(x, y, Place::prime(2)); };
  auto dyadic_over_tau = [&](std::int64_t odd_squarefree) {
    return one / tau(odd_squarefree, sieve);
  };

  // Admissible n: squarefree product, coprime to m12 m13 m23 and to the b-gcds.
  std::array<std::vector<std::int64_t>, 3> admissible;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::int64_t n = 1; n <= box[i]; ++n)
      if (moebius_sq(n, sieve) && std::gcd(n, mprod) == 1 &&
          std::gcd(n, params.b_gcd_excluding(i)) == 1)
        admissible[i].push_back(n);

  for (const auto n1 : admissible[0])
    for (const auto n2 : admissible[1])
      for (const auto n3 : admissible[2]) {
        if (std::gcd(n1, n2) != 1 || std::gcd(n1, n3) != 1 || std::gcd(n2, n3) != 1) continue;
        const bool h2_ok = hilbert2(n1 * n3 * m12 * m23, n2 * n3 * m13 * m12) == 1;
        const std::int64_t n_odd = odd_part(n1 * n2 * n3);
        if (h2_ok) rep.main_sum += dyadic_over_tau(n_odd);
        if (n1 * n2 * n3 > 2) continue;
        // Excluded terms: compare the exact indicator with what 2M + E assigns.
        ++rep.excluded_terms;
        const std::int64_t a = n1 * m23, b = n2 * m13, c = n3 * m12;
        const bool sol = soluble_q(DiagonalConic(a, b, -c), sieve);
        __int128 assigned = 0;
        if (h2_ok) {
          std::int64_t theta = 0;
          if (odd_part(a * b * c) > 1) theta = detector_jacobi_sum(DetectorInput(a, b, c, sieve), sieve);
          assigned = (2 + theta) * dyadic_over_tau(n_odd);
        }
        rep.correction += (sol ? rep.tau_m_odd * one : 0) - assigned;
      }

  // E: literal sum over splittings h h~ = (m_ij)_odd, 2-adic exponents sigma,
  // and d d~ = k_i odd squarefree with k_i <= X_i / 2^sigma_i.
  std::array<std::vector<std::int64_t>, 3> h_divs;
  for (std::size_t i = 0; i < 3; ++i) h_divs[i] = squarefree_divisors(odd_primes_of(m_odd[i], sieve));
  const std::array<std::int64_t, 3> bg{params.b_gcd_excluding(0), params.b_gcd_excluding(1),
                                       params.b_gcd_excluding(2)};
  for (int s1 = 0; s1 <= 1; ++s1)
    for (int s2 = 0; s2 <= 1; ++s2)
      for (int s3 = 0; s3 <= 1; ++s3) {
        const std::array<int, 3> s{s1, s2, s3};
        const int ssum = s1 + s2 + s3;
        if (ssum > 1) continue;
        if (ssum == 1 && mprod % 2 == 0) continue;
        bool ok = true;
        for (std::size_t i = 0; i < 3; ++i)
          if (s[i] == 1 && bg[i] % 2 == 0) ok = false;
        if (!ok) continue;
        std::array<std::vector<std::int64_t>, 3> ks;
        for (std::size_t i = 0; i < 3; ++i)
          for (std::int64_t k = 1; k <= (box[i] >> s[i]); k += 2)
            if (moebius_sq(k, sieve) && std::gcd(k, mprod) == 1 && std::gcd(k, bg[i]) == 1)
              ks[i].push_back(k);
        for (const auto k1 : ks[0])
          for (const auto k2 : ks[1])
            for (const auto k3 : ks[2]) {
              if (std::gcd(k1, k2) != 1 || std::gcd(k1, k3) != 1 || std::gcd(k2, k3) != 1) continue;
              if (hilbert2((std::int64_t{1} << (s1 + s3)) * k1 * k3 * m12 * m23,
                           (std::int64_t{1} << (s2 + s3)) * k2 * k3 * m13 * m12) != 1)
                continue;
              const __int128 weight = dyadic_over_tau(k1 * k2 * k3);
              const auto d1s = squarefree_divisors(odd_primes_of(k1, sieve));
              const auto d2s = squarefree_divisors(odd_primes_of(k2, sieve));
              const auto d3s = squarefree_divisors(odd_primes_of(k3, sieve));
              for (const auto h12 : h_divs[0])
                for (const auto h13 : h_divs[1])
                  for (const auto h23 : h_divs[2])
                    for (const auto d1 : d1s)
                      for (const auto d2 : d2s)
                        for (const auto d3 : d3s) {
                          const std::int64_t dt1 = k1 / d1, dt2 = k2 / d2, dt3 = k3 / d3;
                          const std::int64_t ht12 = m_odd[0] / h12, ht13 = m_odd[1] / h13,
                                             ht23 = m_odd[2] / h23;
                          if (d1 * d2 * d3 * h12 * h13 * h23 == 1) continue;
                          if (dt1 * dt2 * dt3 * ht12 * ht13 * ht23 == 1) continue;
                          int term = prefactor == EPrefactor::kD3H12 ? jacobi(-1, d3 * h12)
                                                                     : jacobi(-1, d3 * m_odd[0]);
                          term *= jacobi_two_power(s2 + s3, d1 * h23) *
                                  jacobi_product({k2, k3, m12, m13}, d1 * h23);
                          term *= jacobi_two_power(s1 + s3, d2 * h13) *
                                  jacobi_product({k1, k3, m12, m23}, d2 * h13);
                          term *= jacobi_two_power(s1 + s2, d3 * h12) *
                                  jacobi_product({k1, k2, m13, m23}, d3 * h12);
                          rep.error_sum += term * weight;
                        }
            }
      }

  rep.discrepancy = static_cast<__int128>(rep.tau_m_odd) * rep.count * one - 2 * rep.main_sum -
                    rep.error_sum;
  return rep;
}

}  // namespace conics
