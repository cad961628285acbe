#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "conics/arith.hpp"
#include "conics/euler.hpp"

namespace conics {

struct Monomial {
  std::int64_t coefficient;
  std::vector<int> exponents;  // one per variable x0..xn
};

// Homogeneous integer polynomial in x0..xn.
class HomogeneousPolynomial {
 public:
  // Parses sums of terms like "3*x0^2", "-x0*x1", "x1^2". Throws DomainError on
  // malformed input, on inhomogeneous input and on odd degree.
  static HomogeneousPolynomial parse(const std::string& text);
  HomogeneousPolynomial(std::vector<Monomial> terms, int variables);

  int variables() const { return variables_; }
  int degree() const { return degree_; }
  const std::vector<Monomial>& terms() const { return terms_; }

  // Exact value; throws CapacityError on 64-bit overflow.
  std::int64_t operator()(const std::vector<std::int64_t>& x) const;
  // Value mod m (m >= 1), in [0, m).
  std::int64_t eval_mod(const std::vector<std::int64_t>& x, std::int64_t m) const;
  long double eval_real(const std::vector<long double>& x) const;

 private:
  std::vector<Monomial> terms_;
  int variables_;
  int degree_;
};

// #{x in P^n(Q) : max |x_i| <= B, g(x) != 0, g(x) = t0^2 - a t1^2 soluble},
// enumerating primitive integer vectors up to sign.
std::int64_t count_norm_form(const HomogeneousPolynomial& g, std::int64_t a, std::int64_t bound,
                             const FactorSieve& sieve);

struct PadicVolume {
  long double value = 0;         // determined mass plus the heuristic share
  long double determined = 0;    // mass of classes whose symbol is fixed mod p^depth
  long double undetermined = 0;  // mass left open at this depth
};

// vol{x in Z_p^{n+1} : (g(x), a)_p = 1} from the primitive residue classes
// mod p^depth. A class is decided once v_p(g) + 1 (odd p) or v_p(g) + 3
// (p = 2) digits are known. Undecided mass is shared out in the proportion of
// the decided good mass; callers should inspect `undetermined` across depths.
PadicVolume hilbert_volume(const HomogeneousPolynomial& g, std::int64_t a, std::int64_t p, int depth);

// omega_p = (1 - 1/p)^{1/2} (1 + 1/p + ... + 1/p^n) hilbert_volume; the real
// place gives (n + 1) 2^n for a > 0 and ((n + 1)/2) vol{x in [-1, 1]^{n+1} :
// g(x) > 0} (midpoint grid) for a < 0.
long double omega_p(const HomogeneousPolynomial& g, std::int64_t a, std::int64_t p, int depth);
long double omega_real(const HomogeneousPolynomial& g, std::int64_t a);

// Naive-height constant C of the count ~ C B^{n+1} / (log B)^{1/2}:
// 2 prod_v omega_v / ((n + 1) sqrt(pi d)). Binary forms only (n = 1). The
// product is regularized with (1 - chi(p)/p)^{1/2}, chi the character of
// Q(sqrt a), and L(1, chi)^{1/2}; primes up to `small_prime_bound` and primes
// where g has a repeated root mod p use hilbert_volume at `depth`, the others
// the simple-root formula.
ProductValue predict_norm_form(const HomogeneousPolynomial& g, std::int64_t a,
                               std::int64_t prime_bound = 10'000, int depth = 4,
                               std::int64_t small_prime_bound = 7);

}  // namespace conics
