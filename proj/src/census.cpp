#include "conics/census.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "conics/conic.hpp"
#include "conics/errors.hpp"

namespace conics {

namespace {

bool squarefree_by_trial(std::int64_t n) {
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

// Local condition at an odd prime p dividing coefficient x of a squarefree,
// pairwise coprime triple. Bit k of the result is set when the pattern that
// negates coefficient k (the other two positive) is soluble at p:
//   negating x needs (-yz / p) = 1, negating y or z needs (yz / p) = 1.
inline unsigned prime_mask(const KernelTable& kt, std::uint32_t p, unsigned x,
                           const std::array<std::uint64_t, 3>& coef) {
  const std::uint64_t yz = (coef[(x + 1) % 3] % p) * (coef[(x + 2) % 3] % p);
  const bool square = kt.is_residue(p, yz);
  const bool minus_one_square = (p & 3) == 1;
  unsigned mask = square ? (7u & ~(1u << x)) : 0u;
  if (square == minus_one_square) mask |= 1u << x;
  return mask;
}

// Sign patterns of the sorted positive triple a <= b <= c that give a
// Q-soluble conic. For every pattern with mixed signs the real place is
// fine, and the 2-adic condition follows from the others by the product
// formula, so only odd primes of the reduced model are tested.
unsigned soluble_patterns(const KernelTable& kt, std::int64_t a, std::int64_t b, std::int64_t c) {
  std::uint64_t ka = kt.kernel(a), kb = kt.kernel(b), kc = kt.kernel(c);
  const std::uint64_t content = std::gcd(std::gcd(ka, kb), kc);
  ka /= content;
  kb /= content;
  kc /= content;
  const std::uint64_t mab = std::gcd(ka, kb), mac = std::gcd(ka, kc), mbc = std::gcd(kb, kc);
  const std::array<std::uint64_t, 3> coef{ka / (mab * mac) * mbc, kb / (mab * mbc) * mac,
                                          kc / (mac * mbc) * mab};
  unsigned mask = 7u;
  for (const auto p : kt.odd_primes(a)) {
    if (ka % p != 0) continue;
    const unsigned x = (kb % p == 0) ? 2u : (kc % p == 0 ? 1u : 0u);
    mask &= prime_mask(kt, p, x, coef);
    if (mask == 0) return 0;
  }
  for (const auto p : kt.odd_primes(b)) {
    if (kb % p != 0 || ka % p == 0) continue;
    const unsigned x = (kc % p == 0) ? 0u : 1u;
    mask &= prime_mask(kt, p, x, coef);
    if (mask == 0) return 0;
  }
  for (const auto p : kt.odd_primes(c)) {
    if (kc % p != 0 || ka % p == 0 || kb % p == 0) continue;
    mask &= prime_mask(kt, p, 2u, coef);
    if (mask == 0) return 0;
  }
  return mask;
}

std::int64_t conic_census(std::int64_t bound, const FactorSieve& sieve, unsigned workers,
                          bool primitive) {
  if (bound < 1) throw DomainError("census bound must be positive");
  if (bound > sieve.limit()) throw CapacityError("census bound exceeds sieve limit");
  const KernelTable kt(sieve, std::max<std::int64_t>(bound, 2));
  // Slab i holds the triples whose largest entry is i + 1.
  auto slab = [&](std::int64_t i) {
    const std::int64_t c = i + 1;
    std::int64_t acc = 0;
    for (std::int64_t b = 1; b <= c; ++b) {
      const std::int64_t gbc = std::gcd(b, c);
      for (std::int64_t a = 1; a <= b; ++a) {
        if (primitive && std::gcd(a, gbc) != 1) continue;
        const unsigned mask = soluble_patterns(kt, a, b, c);
        if (mask == 0) continue;
        const std::int64_t weight = (a == c) ? 1 : ((a == b || b == c) ? 3 : 6);
        acc += weight * std::popcount(mask);
      }
    }
    return acc;
  };
  return 2 * parallel_sum(workers, bound, slab);
}

}  // namespace

FamilyParams::FamilyParams(std::array<std::int64_t, 3> b, std::array<std::int64_t, 3> m)
    : b_(b), m_(m) {
  for (const auto x : b_)
    if (x < 1) throw DomainError("family parameter b must be positive");
  for (const auto x : m_)
    if (x < 1) throw DomainError("family parameter m must be positive");
  if (!squarefree_by_trial(m_product())) throw DomainError("m12 m13 m23 must be squarefree");
  if (std::gcd(std::gcd(b_[0], b_[1]), b_[2]) != 1) throw DomainError("gcd(b1, b2, b3) must be 1");
  if (std::gcd(m_[0], b_[2]) != 1 || std::gcd(m_[1], b_[1]) != 1 || std::gcd(m_[2], b_[0]) != 1)
    throw DomainError("need gcd(m12, b3) = gcd(m13, b2) = gcd(m23, b1) = 1");
}

std::int64_t FamilyParams::b_gcd_excluding(std::size_t i) const {
  return std::gcd(b_[(i + 1) % 3], b_[(i + 2) % 3]);
}

std::string FamilyParams::to_string() const {
  return "b=(" + std::to_string(b_[0]) + "," + std::to_string(b_[1]) + "," +
         std::to_string(b_[2]) + ") m=(" + std::to_string(m_[0]) + "," + std::to_string(m_[1]) +
         "," + std::to_string(m_[2]) + ")";
}

KernelTable::KernelTable(const FactorSieve& sieve, std::int64_t limit) : limit_(limit) {
  if (limit < 1 || limit > sieve.limit()) throw CapacityError("kernel table exceeds sieve limit");
  const auto n_entries = static_cast<std::size_t>(limit) + 1;
  kernel_.assign(n_entries, 1);
  offsets_.assign(n_entries + 1, 0);
  for (std::int64_t n = 1; n <= limit; ++n) {
    std::int64_t m = n;
    std::uint32_t k = 1;
    while (m > 1) {
      const auto p = sieve.spf(m);
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      if (e % 2 == 1) {
        k *= static_cast<std::uint32_t>(p);
        if (p != 2) primes_.push_back(static_cast<std::uint32_t>(p));
      }
    }
    kernel_[n] = k;
    offsets_[n + 1] = static_cast<std::uint32_t>(primes_.size());
  }
  offsets_[1] = 0;
  table_max_ = static_cast<std::uint32_t>(std::min<std::int64_t>(limit, kTableMax));
  qr_offsets_.assign(static_cast<std::size_t>(table_max_) + 1, 0);
  for (std::uint32_t p = 3; p <= table_max_; p += 2) {
    if (!sieve.is_prime(p)) continue;
    qr_offsets_[p] = qr_.size();
    qr_.resize(qr_.size() + p, 0);
    for (std::uint64_t x = 1; x <= p / 2; ++x) qr_[qr_offsets_[p] + (x * x) % p] = 1;
  }
}

std::int64_t count_primitive_conics(std::int64_t bound, const FactorSieve& sieve,
                                    unsigned workers) {
  return conic_census(bound, sieve, workers, true);
}

std::int64_t count_all_conics(std::int64_t bound, const FactorSieve& sieve, unsigned workers) {
  return conic_census(bound, sieve, workers, false);
}

std::int64_t count_generalized(const FamilyParams& params, const std::array<double, 3>& box,
                               const FactorSieve& sieve, unsigned workers) {
  std::int64_t limit = std::max({params.m12(), params.m13(), params.m23(), std::int64_t{2}});
  for (const auto x : box)
    if (x >= 1.0) limit = std::max(limit, static_cast<std::int64_t>(std::floor(x)));
  if (limit > sieve.limit()) throw CapacityError("generalised census box exceeds sieve limit");
  return count_generalized(params, box, KernelTable(sieve, limit), workers);
}

std::int64_t count_generalized(const FamilyParams& params, const std::array<double, 3>& box,
                               const KernelTable& kt, unsigned workers) {
  std::array<std::int64_t, 3> top{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!(box[i] >= 1.0)) return 0;
    top[i] = static_cast<std::int64_t>(std::floor(box[i]));
  }
  const std::int64_t limit = *std::max_element(top.begin(), top.end());
  if (std::max({limit, params.m12(), params.m13(), params.m23()}) > kt.limit())
    throw CapacityError("generalised census box exceeds kernel table");
  const std::int64_t mprod = params.m_product();

  // Admissible values per coordinate: squarefree, coprime to m12 m13 m23 and
  // to gcd of the two other b's.
  std::array<std::vector<std::int64_t>, 3> admissible;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::int64_t n = 1; n <= top[i]; ++n)
      if (kt.squarefree(n) && std::gcd(n, mprod) == 1 &&
          std::gcd(n, params.b_gcd_excluding(i)) == 1)
        admissible[i].push_back(n);

  // Coefficients (m23 n1, m13 n2, m12 n3); the counted pattern negates the third.
  const std::array<std::uint64_t, 3> mult{static_cast<std::uint64_t>(params.m23()),
                                          static_cast<std::uint64_t>(params.m13()),
                                          static_cast<std::uint64_t>(params.m12())};
  auto slab = [&](std::int64_t idx) {
    const std::int64_t n1 = admissible[0][static_cast<std::size_t>(idx)];
    std::int64_t acc = 0;
    for (const auto n2 : admissible[1]) {
      if (std::gcd(n1, n2) != 1) continue;
      const std::int64_t n12 = n1 * n2;
      for (const auto n3 : admissible[2]) {
        if (std::gcd(n12, n3) != 1) continue;
        const std::array<std::int64_t, 3> n{n1, n2, n3};
        const std::array<std::uint64_t, 3> coef{mult[0] * static_cast<std::uint64_t>(n1),
                                                mult[1] * static_cast<std::uint64_t>(n2),
                                                mult[2] * static_cast<std::uint64_t>(n3)};
        bool ok = true;
        for (unsigned x = 0; x < 3 && ok; ++x) {
          for (const auto p : kt.odd_primes(n[x]))
            if (!(prime_mask(kt, p, x, coef) & 4u)) {
              ok = false;
              break;
            }
          if (!ok) break;
          for (const auto p : kt.odd_primes(static_cast<std::int64_t>(mult[x])))
            if (!(prime_mask(kt, p, x, coef) & 4u)) {
              ok = false;
              break;
            }
        }
        if (ok) ++acc;
      }
    }
    return acc;
  };
  return parallel_sum(workers, static_cast<std::int64_t>(admissible[0].size()), slab);
}

std::vector<FamilyBox> conic_family_boxes(std::int64_t bound) {
  if (bound < 1) throw DomainError("census bound must be positive");
  std::vector<FamilyBox> out;
  for (std::int64_t b1 = 1; b1 * b1 <= bound; ++b1)
    for (std::int64_t b2 = 1; b2 * b2 <= bound; ++b2)
      for (std::int64_t b3 = 1; b3 * b3 <= bound; ++b3) {
        if (std::gcd(std::gcd(b1, b2), b3) != 1) continue;
        const std::int64_t s1 = b1 * b1, s2 = b2 * b2, s3 = b3 * b3;
        for (std::int64_t m12 = 1; s1 * m12 <= bound && s2 * m12 <= bound; ++m12) {
          if (std::gcd(m12, b3) != 1) continue;
          for (std::int64_t m13 = 1; s1 * m12 * m13 <= bound && s3 * m13 <= bound; ++m13) {
            if (std::gcd(m13, b2) != 1 || std::gcd(m12, m13) != 1) continue;
            for (std::int64_t m23 = 1; s2 * m12 * m23 <= bound && s3 * m13 * m23 <= bound; ++m23) {
              if (std::gcd(m23, b1) != 1 || std::gcd(m12 * m13, m23) != 1) continue;
              if (!squarefree_by_trial(m12 * m13 * m23)) continue;
              const double B = static_cast<double>(bound);
              out.push_back({FamilyParams({b1, b2, b3}, {m12, m13, m23}),
                             {B / static_cast<double>(s1 * m12 * m13), B / static_cast<double>(s2 * m12 * m23),
                              B / static_cast<double>(s3 * m13 * m23)}});
            }
          }
        }
      }
  return out;
}

std::int64_t count_two_squares(std::int64_t bound, const FactorSieve& sieve, unsigned workers) {
  if (bound < 1) throw DomainError("census bound must be positive");
  if (bound > sieve.limit()) throw CapacityError("census bound exceeds sieve limit");
  // Values with every p = 3 mod 4 to an even power; for coprime a, b the
  // criterion on ab splits into one on a and one on b.
  std::vector<std::int64_t> good;
  for (std::int64_t n = 1; n <= bound; ++n) {
    bool ok = true;
    std::int64_t m = n;
    while (m > 1 && ok) {
      const auto p = sieve.spf(m);
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      if (p % 4 == 3 && e % 2 == 1) ok = false;
    }
    if (ok) good.push_back(n);
  }
  auto slab = [&](std::int64_t i) {
    const std::int64_t a = good[static_cast<std::size_t>(i)];
    std::int64_t acc = 0;
    for (const auto b : good)
      if (std::gcd(a, b) == 1) ++acc;
    return acc;
  };
  return parallel_sum(workers, static_cast<std::int64_t>(good.size()), slab);
}

std::int64_t count_primitive_conics_naive(std::int64_t bound, const FactorSieve& sieve) {
  std::int64_t count = 0;
  for (std::int64_t t0 = -bound; t0 <= bound; ++t0)
    for (std::int64_t t1 = -bound; t1 <= bound; ++t1)
      for (std::int64_t t2 = -bound; t2 <= bound; ++t2) {
        if (t0 == 0 || t1 == 0 || t2 == 0) continue;
        if (std::gcd(std::gcd(t0, t1), t2) != 1) continue;
        if (soluble_q(DiagonalConic(t0, t1, t2), sieve)) ++count;
      }
  return count;
}

CountRecord make_record(std::vector<double> bounds, std::int64_t raw, double normalization,
                        double predicted) {
  CountRecord r;
  r.bounds = std::move(bounds);
  r.raw_count = raw;
  r.normalization = normalization;
  r.predicted = predicted;
  r.ratio = predicted != 0 ? r.normalized() / predicted : 0.0;
  return r;
}

}  // namespace conics
