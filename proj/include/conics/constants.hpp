#pragma once

#include <array>
#include <cstdint>

#include "conics/arith.hpp"
#include "conics/census.hpp"
#include "conics/euler.hpp"
#include "conics/rational.hpp"

namespace conics {

// t_p = 1 + sum_{k >= 1} 1/((k + 1) p^k) = p log(p / (p - 1)).
long double selberg_t(std::int64_t p);

// t_0 = pi^{-1/2} prod_p t_p (1 - 1/p)^{1/2}.
ProductValue selberg_t0(std::int64_t prime_bound = kDefaultPrimeBound);

// kappa = prod_{p != 2} (1 - 1/p)^{3/2} (1 + 3/(2p)).
ProductValue kappa(std::int64_t prime_bound = kDefaultPrimeBound);

// gamma(d) = kappa * f(d) for odd nonzero d.
ProductValue gamma_d(const std::array<std::int64_t, 3>& d,
                     std::int64_t prime_bound = kDefaultPrimeBound);

// beta(b, m) = prod_{p != 2} (1 - 1/p)^{3/2} (1 + k_p / (2p)), k_p the number of
// pairs i < j with p not dividing m12 m13 m23 gcd(b_i, b_j).
ProductValue beta_bm(const FamilyParams& params, std::int64_t prime_bound = kDefaultPrimeBound);

// 2 if m12 m13 m23 is even, else 3 + #{i < j : gcd(b_i, b_j) odd}.
int c_bm(const FamilyParams& params);

// Leading constant of N(B) ~ C B^3 / (log B)^{3/2} by three routes:
//   route1:   2 * 6 * prod_p c_p / pi^{3/2};
//   route2:   3 * (49/3) / (2 pi)^{3/2} * prod_{p != 2} (1 - 1/p)^{3/2}
//             (p^2 + p + 1)(2p^2 + p + 2) / (2 (p^2 - 1)^2);
//   assembly: the Brauer-group prediction (1/3) 2 tau_f 3^{3/2} / pi^{3/2} for
//             N(f, B^{1/3}), converted to the naive height and doubled for the
//             two primitive representatives of each point of P^2; tau_f is
//             built from the enumerated local densities.
struct ConicConstant {
  ProductValue route1, route2, assembly;
};
ConicConstant predict_conics(std::int64_t prime_bound = kDefaultPrimeBound);

// Constant of N_0(B) (all t, not only primitive ones):
// (2 / pi^{3/2}) * 6 * prod_p theta_p / (1 - 1/p)^{3/2}, theta_p the Haar
// measure of soluble t in Z_p^3 (enumerated for small p).
ProductValue predict_all_conics(std::int64_t prime_bound = kDefaultPrimeBound);

// Coefficient of prod X_i / (log X_i)^{1/2} in N_{b,m}(X):
// (2 pi)^{-3/2} beta(b, m) c(b, m) / (2 tau((m12 m13 m23)_odd)).
ProductValue predict_genguo(const FamilyParams& params,
                            std::int64_t prime_bound = kDefaultPrimeBound);

// beta(b, m) / kappa = prod over odd p | m12 m13 m23 gcd(b_i, b_j) of
// (2p + k_p) / (2p + 3).
ExactRational beta_ratio(const FamilyParams& params);

// N(B) assembled over conic_family_boxes: boxes with every X_i >= threshold
// contribute 6 * predict_genguo * prod X_i / sqrt(log X_i), the rest their
// exact count times 6. The single-term asymptotic uses log B for every box,
// which overstates the smaller boxes; this keeps each box at its own scale.
struct BoxPrediction {
  std::int64_t exact_part = 0;
  long double asymptotic_part = 0;
  std::size_t boxes = 0, asymptotic_boxes = 0;
  long double total() const { return static_cast<long double>(exact_part) + asymptotic_part; }
};
BoxPrediction predict_conics_by_box(std::int64_t bound, double threshold, const FactorSieve& sieve,
                                    unsigned workers = 1,
                                    std::int64_t prime_bound = kDefaultPrimeBound);

// (2 / sqrt pi)^3 prod_p (1 - 1/p)^{3/2} (1 + 3/(2p)), the all-sign constant
// in the form it is usually quoted for m = b = (1, 1, 1).
ProductValue guo_constant(std::int64_t prime_bound = kDefaultPrimeBound);

// Constant of the coprime pair count ~ C B^2 / log B for a/b a sum of two
// squares: (3 / (2 pi)) kappa with
//   kappa = L(chi_4, 1) prod_{p = 1 (4)} (1 - 1/p^2) prod_{p = 3 (4)} (1 + 1/p^2).
ProductValue predict_two_squares(std::int64_t prime_bound = kDefaultPrimeBound);

// The same constant by ordered truncation of the conditionally convergent
// product, no regularization. Comparison only.
long double two_squares_naive_truncation(std::int64_t prime_bound);

struct SelbergDelange {
  long double empirical = 0;
  long double main_term = 0;
  long double ratio() const { return empirical / main_term; }
};

// sum_{n <= x, gcd(n, d) = 1, n = a mod q} 1/tau(n) against
// t_0 / (phi(q) prod_{p | 2d} t_p) * x / sqrt(log x). q in {4, 8}; a, d odd.
SelbergDelange selberg_delange_check(std::int64_t x, std::int64_t q, std::int64_t a, std::int64_t d,
                                     const FactorSieve& sieve,
                                     std::int64_t prime_bound = kDefaultPrimeBound);

// sum over n_i <= X_i, gcd(n_i, d_i) = 1, n_i = a_i mod q_i of
// mu^2(n1 n2 n3) / (tau(n1) tau(n2) tau(n3)) against
// gamma(d) / (2 pi)^{3/2} prod X_i / (phi(q_i) sqrt(log X_i)).
SelbergDelange selberg_delange_triple(const std::array<std::int64_t, 3>& x,
                                      const std::array<std::int64_t, 3>& q,
                                      const std::array<std::int64_t, 3>& a,
                                      const std::array<std::int64_t, 3>& d, const FactorSieve& sieve,
                                      std::int64_t prime_bound = kDefaultPrimeBound);

}  // namespace conics
