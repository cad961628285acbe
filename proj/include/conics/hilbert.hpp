#pragma once

#include <cstdint>
#include <string>

#include "conics/arith.hpp"

namespace conics {

// A place of Q: the real place or a finite prime.
class Place {
 public:
  static Place real() { return Place(0); }
  static Place prime(std::int64_t p);

  bool is_real() const { return p_ == 0; }
  std::int64_t p() const { return p_; }
  std::string to_string() const;

  friend bool operator==(const Place&, const Place&) = default;

 private:
  explicit Place(std::int64_t p) : p_(p) {}
  std::int64_t p_;
};

// Hilbert symbol (a, b)_v for nonzero integers a, b.
//
// Odd p:  a = p^alpha u, b = p^beta w gives
//         (-1)^(alpha beta eps(p)) (u/p)^beta (w/p)^alpha.
// p = 2:  (-1)^(eps(u) eps(w) + alpha omega(w) + beta omega(u)) with
//         eps(x) = (x-1)/2 mod 2 and omega(x) = (x^2-1)/8 mod 2.
// Real:   -1 exactly when a < 0 and b < 0.
// The primality of a finite place is not rechecked here.
int hilbert(std::int64_t a, std::int64_t b, const Place& v);

// True iff the product of (a, b)_v over the real place and every prime
// dividing 2ab equals 1. Needs |a|, |b| within the sieve.
bool hilbert_product_check(std::int64_t a, std::int64_t b, const FactorSieve& sieve);

}  // namespace conics
