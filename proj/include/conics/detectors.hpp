#pragma once

#include <array>
#include <cstdint>

#include "conics/arith.hpp"
#include "conics/census.hpp"

namespace conics {

// Positive a, b, c with abc squarefree and pairwise coprime, and abc divisible
// by at least one odd prime. r is the product of the odd primes of abc.
class DetectorInput {
 public:
  DetectorInput(std::int64_t a, std::int64_t b, std::int64_t c, const FactorSieve& sieve);

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }
  std::int64_t r() const { return r_; }

 private:
  std::int64_t a_, b_, c_, r_;
};

// Closed Hilbert-symbol formula for the indicator of a X^2 + b Y^2 = c Z^2
// having a rational point:
//   (1 + (ac,bc)_2) / (2 tau(r)) * (1 + (ac,bc)_2 + sum_{d | r, d != 1, r}
//   prod_{p | d} (ac,bc)_p),
// evaluated in integers. Returns 0 or 1.
int detector_lhs(const DetectorInput& in, const FactorSieve& sieve);

// The divisor sum sum_{d | r, d != 1, r} prod_{p | d} (ac,bc)_p.
std::int64_t detector_delta_sum(const DetectorInput& in, const FactorSieve& sieve);

// The same sum through Jacobi symbols: over splittings
// delta_i * delta~_i = (a, b, c)_odd with prod delta != 1 and
// prod delta~ != 1, of (bc/delta_1)(ac/delta_2)(-ab/delta_3).
std::int64_t detector_jacobi_sum(const DetectorInput& in, const FactorSieve& sieve);

// One term of the E-sum: odd positive d, d~ (index i = 1..3), h, h~ (index
// order 12, 13, 23) and the 2-adic exponents sigma_i, sigma_ij in {0, 1}.
struct ReciprocityTerm {
  std::array<std::int64_t, 3> d, dt;
  std::array<std::int64_t, 3> h, ht;
  std::array<int, 3> sigma;
  std::array<int, 3> sigma_m;
};

// Compares the product of the three Jacobi symbols of the E-sum, times
// (-1 / d_3 h_12), with the rearranged form
//   (-1)^((G(h) + G_h(d)) / 4) * prod (2 / d_i h_jk)^(sigma - sigma_i - sigma_jk)
//   * (d~_2 d~_3 h~_12 h~_13 / d_1 h_23) (d~_1 d~_3 h~_12 h~_23 / d_2 h_13)
//   * (-d~_1 d~_2 h~_23 h~_13 / d_3 h_12).
// Throws DomainError unless all twelve odd entries are odd, positive and
// pairwise coprime and every sigma is 0 or 1.
bool reciprocity_rearrangement_check(const ReciprocityTerm& term);

// Which numerator the delta_3 prefactor of the E-sum carries.
enum class EPrefactor {
  kD3H12,  // (-1 / d_3 h_12), the form the detector derivation produces
  kD3M12,  // (-1 / d_3 (m_12)_odd), the form the E-sum is printed with
};

// Exact sums over the box, as dyadic rationals: value = numerator / 2^kDyadicShift.
inline constexpr int kDyadicShift = 40;

struct DecompositionReport {
  std::int64_t tau_m_odd;     // tau((m12 m13 m23)_odd)
  std::int64_t count;         // N_{b,m}(X)
  __int128 main_sum;          // M_{b,m}(X), dyadic
  __int128 error_sum;         // E_{b,m}(X), dyadic
  __int128 discrepancy;       // tau * N - 2M - E, dyadic
  __int128 correction;        // enumerated contribution of n1 n2 n3 <= 2, dyadic
  std::int64_t excluded_terms;  // C0: admissible n with n1 n2 n3 <= 2
};

// Literal summation of M and E against the census for small boxes.
DecompositionReport detector_decomposition(const FamilyParams& params,
                                           const std::array<std::int64_t, 3>& box,
                                           const FactorSieve& sieve,
                                           EPrefactor prefactor = EPrefactor::kD3H12);

}  // namespace conics
