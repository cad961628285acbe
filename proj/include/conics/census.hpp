#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "conics/arith.hpp"

namespace conics {

// Parameters (b, m) of the generalised count N_{b,m}(X): positive triples
// b = (b1, b2, b3) and m = (m12, m13, m23) with m12 m13 m23 squarefree,
// gcd(b1, b2, b3) = 1 and gcd(m12, b3) = gcd(m13, b2) = gcd(m23, b1) = 1.
class FamilyParams {
 public:
  FamilyParams(std::array<std::int64_t, 3> b, std::array<std::int64_t, 3> m);

  const std::array<std::int64_t, 3>& b() const { return b_; }
  const std::array<std::int64_t, 3>& m() const { return m_; }
  std::int64_t m12() const { return m_[0]; }
  std::int64_t m13() const { return m_[1]; }
  std::int64_t m23() const { return m_[2]; }
  std::int64_t m_product() const { return m_[0] * m_[1] * m_[2]; }

  // gcd(b_j, b_k) for the pair opposite index i (0-based): i = 0 -> (b2, b3).
  std::int64_t b_gcd_excluding(std::size_t i) const;

  std::string to_string() const;

 private:
  std::array<std::int64_t, 3> b_, m_;
};

// Precomputed squarefree kernels, their odd prime lists and quadratic-residue
// tables for every modulus up to a bound. Read-only after construction.
class KernelTable {
 public:
  // Kernels for n <= limit (limit <= sieve.limit()); residue tables for
  // primes up to kTableMax, Jacobi symbols beyond.
  static constexpr std::uint32_t kTableMax = 1u << 15;
  KernelTable(const FactorSieve& sieve, std::int64_t limit);

  std::int64_t limit() const { return limit_; }
  std::uint32_t kernel(std::int64_t n) const { return kernel_[n]; }
  // Odd primes of kernel(n).
  std::span<const std::uint32_t> odd_primes(std::int64_t n) const {
    return {primes_.data() + offsets_[n], primes_.data() + offsets_[n + 1]};
  }
  bool squarefree(std::int64_t n) const { return kernel_[n] == n; }
  // Whether r is a nonzero square mod the odd prime p.
  bool is_residue(std::uint32_t p, std::uint64_t r) const {
    if (p <= table_max_) return qr_[qr_offsets_[p] + r % p] != 0;
    return jacobi(static_cast<std::int64_t>(r % p), p) == 1;
  }

 private:
  std::int64_t limit_;
  std::vector<std::uint32_t> kernel_;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> primes_;
  std::uint32_t table_max_;
  std::vector<std::uint64_t> qr_offsets_;
  std::vector<std::uint8_t> qr_;
};

// N(B): ordered signed primitive triples with max |t_i| <= B whose diagonal
// conic has a rational point.
//
// Enumeration runs over sorted positive triples a <= b <= c. Every sign
// pattern with mixed signs is, up to a global sign, one of the three patterns
// negating a single coefficient; the ordered triples in an orbit number 6, 3
// or 1. So N(B) = 2 * sum over sorted triples of weight * #{soluble patterns}.
std::int64_t count_primitive_conics(std::int64_t bound, const FactorSieve& sieve,
                                    unsigned workers = 1);

// N_0(B): as N(B) without the gcd condition.
std::int64_t count_all_conics(std::int64_t bound, const FactorSieve& sieve, unsigned workers = 1);

// N_{b,m}(X): squarefree-product triples n with n_i <= X_i, the coprimality
// conditions of the family, and m23 n1 x1^2 + m13 n2 x2^2 = m12 n3 x3^2
// soluble over Q.
std::int64_t count_generalized(const FamilyParams& params, const std::array<double, 3>& box,
                               const FactorSieve& sieve, unsigned workers = 1);
// Same count against a prebuilt table covering the box and every m_ij.
std::int64_t count_generalized(const FamilyParams& params, const std::array<double, 3>& box,
                               const KernelTable& table, unsigned workers = 1);

// One term of the split of N(B) by square parts and pairwise gcds: a primitive
// t has |t_i| = b_i^2 k_i with k1 = m12 m13 n1, k2 = m12 m23 n2,
// k3 = m13 m23 n3, so N(B) = 6 sum N_{b,m}(X) over these terms with
// X_i = B / (b_i^2 m_ij m_ik).
struct FamilyBox {
  FamilyParams params;
  std::array<double, 3> box;
};

// Every admissible (b, m) whose box has all X_i >= 1, in lexicographic order.
std::vector<FamilyBox> conic_family_boxes(std::int64_t bound);

// #{(a, b) in [1, B]^2 : gcd(a, b) = 1, a/b a sum of two rational squares}.
// This is the rational-point count of heights <= B minus one (the point t = 0).
std::int64_t count_two_squares(std::int64_t bound, const FactorSieve& sieve, unsigned workers = 1);

// Brute-force N(B) over all ordered signed triples, deciding each conic with
// soluble_q. Test oracle for small B.
std::int64_t count_primitive_conics_naive(std::int64_t bound, const FactorSieve& sieve);

// One census row.
struct CountRecord {
  std::vector<double> bounds;
  std::int64_t raw_count = 0;
  double normalization = 0;  // multiplies raw_count, e.g. (log B)^{3/2} / B^3
  double predicted = 0;
  double ratio = 0;

  double normalized() const { return static_cast<double>(raw_count) * normalization; }
};

CountRecord make_record(std::vector<double> bounds, std::int64_t raw, double normalization,
                        double predicted);

// Runs fn(i) for i in [0, n) on `workers` threads with an interleaved partition
// and sums the results. The result is independent of the worker count.
template <typename Fn>
std::int64_t parallel_sum(unsigned workers, std::int64_t n, Fn fn);

}  // namespace conics

#include "conics/census_impl.hpp"
