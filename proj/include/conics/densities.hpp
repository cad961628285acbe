#pragma once

#include <array>
#include <cstdint>

#include "conics/hilbert.hpp"
#include "conics/rational.hpp"

namespace conics {

enum class Provenance { kClosedForm, kEnumeration };

// A local density. `tail_bound` is zero when `value` is exact; otherwise the
// true density lies in [value, value + tail_bound].
struct LocalDensity {
  Place place = Place::real();
  ExactRational value;
  ExactRational tail_bound;
  Provenance provenance = Provenance::kClosedForm;
};

// Haar measure of t in Z_p^3 for which t0 x0^2 + t1 x1^2 + t2 x2^2 = 0 has a
// Q_p-point. Valuations below `depth` are enumerated one by one; the classes
// with valuation >= depth are summed as geometric series when sum_tails is
// set and otherwise dropped (tail_bound = 3 / p^depth). Unit parts run over
// residues mod p (odd p) or mod 8 (p = 2).
LocalDensity conic_haar_measure(std::int64_t p, int depth, bool sum_tails = true);

// Projective density (1 + 1/p + 1/p^2) * conic_haar_measure.
LocalDensity local_density_conic(std::int64_t p, int depth, bool sum_tails = true);

// 49/48 at p = 2; (1 + 1/p + 1/p^2)(2p^2 + p + 2) / (2(p + 1)^2) at odd p.
ExactRational local_density_conic_closed(std::int64_t p);

// Real density of the conic family: (3/2) * 6 = 9.
ExactRational local_density_conic_real();

// Two-squares family t = a/b: (1 + 1/p) * mu_p{(a, b) : (ab, -1)_p = 1},
// by valuation-parity classes and unit residues.
LocalDensity local_density_two_squares_enumerated(std::int64_t p);

// 2 at the real place, 3/4 at 2, 1 + 1/p for p = 1 mod 4 and
// 1 - (p - 1)/(p(p + 1)) for p = 3 mod 4.
ExactRational local_density_two_squares(const Place& v);

enum class MeasureKind {
  kCone,       // Lebesgue measure in [-1, 1]^{n+1}, or Haar measure in Z_p^{n+1}
  kPrimitive,  // Haar measure of the primitive vectors in Z_p^{n+1}
};

// Projective Tamagawa density from an affine measure in n + 1 variables:
// ((n + 1)/2) mu at the real place, (1 + 1/p + ... + 1/p^n) mu for the cone
// measure, (1 - 1/p)^{-1} mu for the primitive measure.
ExactRational tamagawa_convert(const ExactRational& measure, int n, const Place& v,
                               MeasureKind kind = MeasureKind::kCone);

// The four 2-adic contributions to the constant 49/3, by class enumeration of
// (beta, mu): one mu_ij = 1; all zero; one beta_i >= 1; two beta_i >= 1.
std::array<ExactRational, 4> two_adic_cases();

// Local factor at an odd prime of the (b, m) sum, divided by (1 - 1/p)^{3/2}:
//   enumerated:  (1 + 3/(2p)) * sum over (beta, mu) classes of g / (p^{2|.|} tau);
//   bracket:     (1 + 3/(2p)) * [3(1 - 3/(3 + 2p)) / (2p^2 (1 - 1/p^2)^2) + 1
//                + 3/(p^2 - 1) + 3(1 - 1/(2p + 3)) / (p^2 - 1)^2];
//   closed:      (p^2 + p + 1)(2p^2 + p + 2) / (2 (p^2 - 1)^2).
ExactRational kappa_prime_enumerated(std::int64_t p);
ExactRational kappa_prime_bracket(std::int64_t p);
ExactRational kappa_prime_closed(std::int64_t p);

// f(d) = gamma(d) / kappa = prod_{p | d1 d2 d3, p odd} (1 - #{i : p | d_i} / (2p + 3)).
ExactRational gamma_ratio(const std::array<std::int64_t, 3>& d);

}  // namespace conics
