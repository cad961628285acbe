#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "conics/arith.hpp"
#include "conics/hilbert.hpp"

namespace conics {

// t0 x0^2 + t1 x1^2 + t2 x2^2 = 0 with every coefficient nonzero.
class DiagonalConic {
 public:
  DiagonalConic(std::int64_t t0, std::int64_t t1, std::int64_t t2);

  std::int64_t operator[](std::size_t i) const { return t_[i]; }
  const std::array<std::int64_t, 3>& coefficients() const { return t_; }

 private:
  std::array<std::int64_t, 3> t_;
};

// Squarefree, pairwise coprime model a x^2 + b y^2 + c z^2 = 0 of a diagonal
// conic, with the bookkeeping of the substitution that produced it.
//
// Writing |t_i| = root_i^2 * kernel_i, content = gcd(kernel_i), and
// kernel_i / content split as c1 = m12 m13 n1, c2 = m12 m23 n2,
// c3 = m13 m23 n3 (m_ij = gcd(c_i, c_j)), the reduced coefficients are
// (sign_0 n1 m23, sign_1 n2 m13, sign_2 n3 m12).
struct ReducedConic {
  std::int64_t a, b, c;
  std::array<std::int64_t, 3> roots;  // square roots of the square parts
  std::int64_t content;               // common factor of the kernels
  std::int64_t m12, m13, m23;
  std::array<std::int64_t, 3> n;

  std::array<std::int64_t, 3> coefficients() const { return {a, b, c}; }
};

ReducedConic reduce(const DiagonalConic& conic, const FactorSieve& sieve);

// Local solubility at v: real place by signs, finite places by
// (-t0 t1, -t0 t2)_p = 1 on the reduced model.
bool soluble_at(const DiagonalConic& conic, const Place& v, const FactorSieve& sieve);
bool soluble_at(const ReducedConic& reduced, const Place& v);

// Hasse-Minkowski: real place and every prime dividing 2 t0 t1 t2.
bool soluble_q(const DiagonalConic& conic, const FactorSieve& sieve);
bool soluble_q(const ReducedConic& reduced, const FactorSieve& sieve);

struct IntPoint {
  std::int64_t x, y, z;
};

// Upper bound on the number of (x, y) pairs the Holzer search may visit.
inline constexpr std::int64_t kHolzerBudget = 20'000'000;

// Exhaustive search of the Holzer box |x| <= sqrt|bc|, |y| <= sqrt|ac|,
// |z| <= sqrt|ab|. Returns a nontrivial point or nullopt (which by Holzer's
// theorem means no rational point). Throws CapacityError past the budget.
std::optional<IntPoint> rational_point_oracle(const ReducedConic& reduced,
                                              std::int64_t budget = kHolzerBudget);

// Congruence criterion for a Q_2-point on r0 x^2 + r1 y^2 + r2 z^2 = 0 when
// v_2(r0 r1 r2) is 0 or 1:
//   all odd:         r_i + r_j = 0 mod 4 for some i != j;
//   v_2(r_k) = 1:    r_i + r_j + s r_k = 0 mod 8 for some s in {0, 1}.
// Throws DomainError outside that domain.
bool soluble_at_2_congruence(std::int64_t r0, std::int64_t r1, std::int64_t r2);
bool soluble_at_2_congruence(const ReducedConic& reduced);

// Whether num/den (coprime, nonzero) is a norm from Q(sqrt a): (num*den, a)_v
// = 1 at the real place and every prime dividing 2 * num * den * a.
bool norm_representable(std::int64_t num, std::int64_t den, std::int64_t a,
                        const FactorSieve& sieve);

// The a = -1 case in closed form: positive and every p = 3 mod 4 divides
// num*den to an even power.
bool sum_of_two_squares(std::int64_t num, std::int64_t den, const FactorSieve& sieve);

}  // namespace conics
