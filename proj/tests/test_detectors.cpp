#include <doctest.h>

#include <random>

#include "conics/arith.hpp"
#include "conics/census.hpp"
#include "conics/detectors.hpp"
#include "conics/errors.hpp"
#include "conics/hilbert.hpp"
#include "oracles.hpp"

using namespace conics;

namespace {

bool admissible(std::int64_t a, std::int64_t b, std::int64_t c) {
  return std::gcd(a, b) == 1 && std::gcd(a, c) == 1 && std::gcd(b, c) == 1 &&
         oracle::squarefree(a * b * c) && oracle::square_free_part(odd_part(a * b * c)) > 1;
}

}  // namespace

TEST_CASE("detector examples") {
  const FactorSieve s(100'000);
  CHECK(detector_lhs(DetectorInput(1, 1, 3, s), s) == 0);
  CHECK(detector_lhs(DetectorInput(1, 2, 3, s), s) == 1);
  CHECK(detector_lhs(DetectorInput(3, 5, 7, s), s) == (oracle::conic_soluble(3, 5, -7) ? 1 : 0));
  CHECK_THROWS_AS(DetectorInput(1, 1, 2, s), DomainError);
  CHECK_THROWS_AS(DetectorInput(3, 3, 1, s), DomainError);
  CHECK_THROWS_AS(DetectorInput(9, 1, 1, s), DomainError);
  CHECK_THROWS_AS(DetectorInput(0, 1, 3, s), DomainError);
}

TEST_CASE("jacobi form of the divisor sum") {
  const FactorSieve s(100'000);
  CHECK(detector_jacobi_sum(DetectorInput(1, 1, 3, s), s) == 0);
  CHECK(detector_delta_sum(DetectorInput(1, 1, 3, s), s) == 0);
  // r = p prime: the proper divisor sum is empty, and the full sum over all
  // d | r is 1 + (ac, bc)_p = 1 + (-1/p).
  for (const std::int64_t p : {5, 13, 17, 29}) {
    const DetectorInput in(1, 1, p, s);
    CHECK(detector_jacobi_sum(in, s) == 0);
    CHECK(1 + detector_delta_sum(in, s) + hilbert(p, p, Place::prime(p)) == 2);
  }
  CHECK(detector_jacobi_sum(DetectorInput(3, 5, 1, s), s) ==
        detector_delta_sum(DetectorInput(3, 5, 1, s), s));
}

TEST_CASE("detector against brute-force solubility") {
  const FactorSieve s(1'000'000);
  std::int64_t checked = 0;
  for (std::int64_t a = 1; a <= 400; ++a)
    for (std::int64_t b = 1; a * b <= 400; ++b)
      for (std::int64_t c = 1; a * b * c <= 400; ++c) {
        if (!admissible(a, b, c)) continue;
        const DetectorInput in(a, b, c, s);
        INFO(a << "," << b << "," << c);
        REQUIRE(detector_lhs(in, s) == (oracle::conic_soluble(a, b, -c) ? 1 : 0));
        REQUIRE(detector_delta_sum(in, s) == detector_jacobi_sum(in, s));
        ++checked;
      }
  CHECK(checked > 1000);
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::int64_t> d(1, 300);
  int done = 0;
  while (done < 300) {
    const auto a = d(rng), b = d(rng), c = d(rng);
    if (!admissible(a, b, c)) continue;
    ++done;
    REQUIRE(detector_lhs(DetectorInput(a, b, c, s), s) == (oracle::conic_soluble(a, b, -c) ? 1 : 0));
  }
}

TEST_CASE("reciprocity rearrangement") {
  ReciprocityTerm ones{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}, {1, 1, 1}, {0, 0, 0}, {0, 0, 0}};
  CHECK(reciprocity_rearrangement_check(ones));
  ReciprocityTerm even = ones;
  even.d[0] = 2;
  CHECK_THROWS_AS(reciprocity_rearrangement_check(even), DomainError);
  ReciprocityTerm shared = ones;
  shared.d[0] = 3;
  shared.h[1] = 3;
  CHECK_THROWS_AS(reciprocity_rearrangement_check(shared), DomainError);

  // Twelve distinct odd primes (or 1s) give pairwise coprime entries.
  const std::vector<std::int64_t> pool{3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    auto primes = pool;
    std::shuffle(primes.begin(), primes.end(), rng);
    std::size_t next = 0;
    auto draw = [&]() -> std::int64_t { return (rng() % 3 == 0) ? 1 : primes[next++]; };
    ReciprocityTerm t{};
    for (int i = 0; i < 3; ++i) {
      t.d[i] = draw();
      t.dt[i] = draw();
      t.h[i] = draw();
      t.ht[i] = draw();
      t.sigma[i] = static_cast<int>(rng() % 2);
      t.sigma_m[i] = static_cast<int>(rng() % 2);
    }
    REQUIRE(reciprocity_rearrangement_check(t));
  }
}

TEST_CASE("main and error sums reproduce the census") {
  const FactorSieve s(100'000);
  for (const auto& [b, m] : std::vector<std::pair<std::array<std::int64_t, 3>, std::array<std::int64_t, 3>>>{
           {{1, 1, 1}, {1, 1, 1}}, {{1, 1, 1}, {3, 1, 1}}, {{1, 1, 1}, {1, 5, 3}},
           {{2, 1, 1}, {1, 1, 1}}, {{1, 1, 1}, {1, 1, 2}}, {{3, 1, 1}, {7, 1, 1}}}) {
    const FamilyParams p(b, m);
    INFO(p.to_string());
    const auto rep = detector_decomposition(p, {24, 24, 24}, s);
    CHECK(rep.count == count_generalized(p, {24, 24, 24}, s));
    CHECK(rep.discrepancy == rep.correction);
  }
}

TEST_CASE("printed E-sum prefactor") {
  // With (-1 / d3 (m12)_odd) in place of (-1 / d3 h12) the identity still
  // holds when every prime of m12 is 1 mod 4, and breaks for m12 = 3.
  const FactorSieve s(100'000);
  const auto good = detector_decomposition(FamilyParams({1, 1, 1}, {5, 1, 1}), {24, 24, 24}, s,
                                           EPrefactor::kD3M12);
  CHECK(good.discrepancy == good.correction);
  const auto bad = detector_decomposition(FamilyParams({1, 1, 1}, {3, 1, 1}), {24, 24, 24}, s,
                                          EPrefactor::kD3M12);
  CHECK(bad.discrepancy != bad.correction);
}
