// Acceptance run: one line per criterion, "criterion=N status=PASS|FAIL ...".
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <fmt/format.h>

#include "conics/arith.hpp"
#include "conics/census.hpp"
#include "conics/conic.hpp"
#include "conics/constants.hpp"
#include "conics/densities.hpp"
#include "conics/detectors.hpp"
#include "conics/hilbert.hpp"
#include "oracles.hpp"

using namespace conics;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

bool admissible(std::int64_t a, std::int64_t b, std::int64_t c, const FactorSieve& s) {
  return gcd(a, b) == 1 && gcd(a, c) == 1 && gcd(b, c) == 1 && moebius_sq(a, s) && moebius_sq(b, s) &&
         moebius_sq(c, s) && odd_part(a) * odd_part(b) * odd_part(c) > 1;
}

Outcome exact_identities() {
  const FactorSieve s(1'000'000);
  std::mt19937_64 rng(20240601);

  std::int64_t product_fail = 0;
  {
    std::uniform_int_distribution<std::int64_t> d(-1'000'000, 1'000'000);
    int done = 0;
    while (done < 100'000) {
      const auto a = d(rng), b = d(rng);
      if (a == 0 || b == 0) continue;
      ++done;
      if (!hilbert_product_check(a, b, s)) ++product_fail;
    }
  }

  std::int64_t detector_small = 0, detector_fail = 0;
  for (std::int64_t a = 1; a <= 3000; ++a)
    for (std::int64_t b = 1; a * b <= 3000; ++b)
      for (std::int64_t c = 1; a * b * c <= 3000; ++c) {
        if (!admissible(a, b, c, s)) continue;
        ++detector_small;
        const int lhs = detector_lhs(DetectorInput(a, b, c, s), s);
        if (lhs != (oracle::conic_soluble(a, b, -c) ? 1 : 0)) ++detector_fail;
      }
  std::int64_t detector_large = 0;
  {
    std::uniform_int_distribution<std::int64_t> d(1, 5000);
    while (detector_large < 10'000) {
      const auto a = d(rng), b = d(rng), c = d(rng);
      if (a * b * c <= 3000 || !admissible(a, b, c, s)) continue;
      ++detector_large;
      const int lhs = detector_lhs(DetectorInput(a, b, c, s), s);
      if (lhs != (soluble_q(DiagonalConic(a, b, -c), s) ? 1 : 0)) ++detector_fail;
    }
  }

  std::int64_t congruence_cases = 0, congruence_fail = 0;
  for (std::int64_t r0 = 1; r0 < 16; ++r0)
    for (std::int64_t r1 = 1; r1 < 16; ++r1)
      for (std::int64_t r2 = 1; r2 < 16; ++r2)
        for (int signs = 0; signs < 8; ++signs) {
          const std::int64_t t0 = (signs & 1) ? -r0 : r0, t1 = (signs & 2) ? -r1 : r1, t2 = (signs & 4) ? -r2 : r2;
          if (v_p(t0, 2) + v_p(t1, 2) + v_p(t2, 2) > 1) continue;
          ++congruence_cases;
          const bool symbol = hilbert(-t0 * t1, -t0 * t2, Place::prime(2)) == 1;
          if (soluble_at_2_congruence(t0, t1, t2) != symbol) ++congruence_fail;
        }

  std::int64_t holzer_cases = 0, holzer_fail = 0;
  for (std::int64_t a = 1; a <= 2000; ++a)
    for (std::int64_t b = 1; a * b <= 2000; ++b)
      for (std::int64_t c = 1; a * b * c <= 2000; ++c) {
        if (gcd(a, b) != 1 || gcd(a, c) != 1 || gcd(b, c) != 1 || !moebius_sq(a * b * c, s)) continue;
        for (const auto& t : {std::array<std::int64_t, 3>{a, b, c}, {a, b, -c}, {a, -b, c}, {-a, b, c}}) {
          ++holzer_cases;
          const bool hasse = soluble_q(DiagonalConic(t[0], t[1], t[2]), s);
          if (hasse != oracle::conic_soluble(t[0], t[1], t[2])) ++holzer_fail;
        }
      }

  const bool pass = product_fail == 0 && detector_fail == 0 && congruence_fail == 0 && holzer_fail == 0;
  return {pass, fmt::format("product_pairs=100000 product_failures={} detector_triples={}+{} "
                            "detector_failures={} mod16_cases={} mod16_failures={} "
                            "holzer_conics={} holzer_failures={}",
                            product_fail, detector_small, detector_large, detector_fail, congruence_cases,
                            congruence_fail, holzer_cases, holzer_fail)};
}

Outcome exact_densities() {
  bool pass = local_density_conic(2, 3).value == rational(49, 48);
  std::string detail = fmt::format("p2={}", to_string(local_density_conic(2, 3).value));
  for (const std::int64_t p : {3, 5, 7, 11, 13}) {
    const auto e = local_density_conic(p, 3).value;
    const ExactRational formula = rational(p * p + p + 1, p * p) * rational(2 * p * p + p + 2, 2 * (p + 1) * (p + 1));
    pass = pass && e == formula && e == local_density_conic_closed(p);
    detail += fmt::format(" p{}={}", p, to_string(e));
  }
  for (const std::int64_t p : {2, 3, 5, 7, 11, 13}) {
    const auto e = local_density_two_squares_enumerated(p).value;
    ExactRational formula;
    if (p == 2)
      formula = rational(3, 4);
    else if (p % 4 == 1)
      formula = 1 + rational(1, p);
    else
      formula = 1 - rational(p - 1, p * (p + 1));
    pass = pass && e == formula;
    detail += fmt::format(" two_squares_p{}={}", p, to_string(e));
  }
  return {pass, detail};
}

Outcome constant_consistency() {
  const auto c = predict_conics(1'000'000);
  const long double d12 = std::fabs(c.route1.value / c.route2.value - 1);
  const long double d13 = std::fabs(c.assembly.value / c.route1.value - 1);
  const long double d23 = std::fabs(c.assembly.value / c.route2.value - 1);
  const bool pass = d12 <= 1e-6L && d13 <= 1e-6L && d23 <= 1e-6L;
  return {pass, fmt::format("route1={:.12g} route2={:.12g} assembly={:.12g} d12={:.2e} d13={:.2e} d23={:.2e}",
                            static_cast<double>(c.route1.value), static_cast<double>(c.route2.value),
                            static_cast<double>(c.assembly.value), static_cast<double>(d12),
                            static_cast<double>(d13), static_cast<double>(d23))};
}

std::vector<std::int64_t> census_bounds() { return {100, 200, 400, 800}; }

Outcome conic_convergence(std::vector<std::int64_t>& counts) {
  const FactorSieve s(1000);
  const long double predicted = predict_conics(1'000'000).route1.value;
  bool monotone = true;
  long double previous = 1e9, last = 0;
  std::string detail;
  for (const auto B : census_bounds()) {
    const auto n = count_primitive_conics(B, s, workers());
    counts.push_back(n);
    const long double lb = std::log(static_cast<long double>(B));
    const long double ratio = n * std::pow(lb, 1.5L) / std::pow(static_cast<long double>(B), 3) / predicted;
    const long double dev = std::fabs(ratio - 1);
    if (dev > previous) monotone = false;
    previous = last = dev;
    const auto box = predict_conics_by_box(B, 5, s, workers());
    detail += fmt::format("B{}:ratio={:.4f},box_ratio={:.4f} ", B, static_cast<double>(ratio),
                          static_cast<double>(n / box.total()));
  }
  detail += fmt::format("nonincreasing={} final_deviation={:.4f} bound=0.35", monotone, static_cast<double>(last));
  return {monotone && last <= 0.35L, detail};
}

Outcome two_squares_convergence() {
  const std::int64_t B = 10'000;
  const FactorSieve s(B);
  const auto n = count_two_squares(B, s, workers());
  const long double predicted = predict_two_squares(1'000'000).value;
  const long double ratio = n * std::log(static_cast<long double>(B)) / (static_cast<long double>(B) * B) / predicted;
  return {std::fabs(ratio - 1) <= 0.2L,
          fmt::format("B={} pairs={} constant={:.10f} ratio={:.4f} bound=0.20", B, n,
                      static_cast<double>(predicted), static_cast<double>(ratio))};
}

Outcome generalized_family() {
  const std::int64_t X = 500;
  const FactorSieve s(X);
  const long double norm = std::pow(std::sqrt(std::log(static_cast<long double>(X))) / X, 3);
  const FamilyParams ones({1, 1, 1}, {1, 1, 1}), shifted({1, 1, 1}, {3, 1, 1});
  const std::array<double, 3> box{500, 500, 500};
  const long double e1 = count_generalized(ones, box, s, workers()) * norm;
  const long double e3 = count_generalized(shifted, box, s, workers()) * norm;
  const long double p1 = predict_genguo(ones).value, p3 = predict_genguo(shifted).value;
  const long double r1 = e1 / p1;
  const long double shift = (e3 / e1) / (p3 / p1);
  const bool pass = std::fabs(r1 - 1) <= 0.35L && std::fabs(shift - 1) <= 0.4L && e3 < e1;
  return {pass, fmt::format("X=500 empirical={:.6f} predicted={:.6f} ratio={:.4f} m311_empirical={:.6f} "
                            "m311_predicted={:.6f} coefficient_ratio={:.4f}/{:.4f}",
                            static_cast<double>(e1), static_cast<double>(p1), static_cast<double>(r1),
                            static_cast<double>(e3), static_cast<double>(p3), static_cast<double>(e3 / e1),
                            static_cast<double>(p3 / p1))};
}

Outcome selberg_delange() {
  const FactorSieve s(10'000'000);
  bool pass = true;
  std::string detail;
  for (const auto& [q, a, d] : std::vector<std::array<std::int64_t, 3>>{{4, 1, 1}, {8, 3, 1}, {4, 1, 15}}) {
    long double previous = 1e9, last = 0;
    detail += fmt::format("q{}a{}d{}:", q, a, d);
    for (const std::int64_t x : {100'000, 1'000'000, 10'000'000}) {
      const auto r = selberg_delange_check(x, q, a, d, s);
      const long double dev = std::fabs(r.ratio() - 1);
      if (dev > previous) pass = false;
      previous = last = dev;
      detail += fmt::format("{:.4f},", static_cast<double>(r.ratio()));
    }
    if (last > 0.35L) pass = false;
    detail.back() = ' ';
  }
  return {pass, detail + "bound=0.35"};
}

Outcome structural(const std::vector<std::int64_t>& large_counts) {
  const FactorSieve s(1000);
  bool content = true, divisible = true, deterministic = true;
  for (std::int64_t B = 1; B <= 30; ++B) {
    std::int64_t sum = 0;
    for (std::int64_t d = 1; d <= B; ++d) sum += count_primitive_conics(B / d, s);
    content = content && sum == count_all_conics(B, s);
    divisible = divisible && count_primitive_conics(B, s) % 6 == 0;
  }
  for (const auto n : large_counts) divisible = divisible && n % 6 == 0;
  for (const std::int64_t B : {50, 123}) {
    const auto one = count_primitive_conics(B, s, 1);
    for (const unsigned w : {2u, 8u}) deterministic = deterministic && count_primitive_conics(B, s, w) == one;
    const auto all = count_all_conics(B, s, 1);
    for (const unsigned w : {2u, 8u}) deterministic = deterministic && count_all_conics(B, s, w) == all;
  }
  const FamilyParams p({1, 1, 1}, {3, 1, 1});
  const auto g = count_generalized(p, {120, 120, 120}, s, 1);
  const auto t = count_two_squares(1000, s, 1);
  for (const unsigned w : {2u, 8u}) {
    deterministic = deterministic && count_generalized(p, {120, 120, 120}, s, w) == g;
    deterministic = deterministic && count_two_squares(1000, s, w) == t;
  }
  return {content && divisible && deterministic,
          fmt::format("content_identity_B_le_30={} six_divides={} workers_1_2_8_identical={}", content,
                      divisible, deterministic)};
}

}  // namespace

int main() {
  int failures = 0;
  std::vector<std::int64_t> large_counts;
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
      {1, exact_identities},
      {2, exact_densities},
      {3, constant_consistency},
      {4, [&] { return conic_convergence(large_counts); }},
      {5, two_squares_convergence},
      {6, generalized_family},
      {7, selberg_delange},
      {8, [&] { return structural(large_counts); }},
  };
  for (const auto& [id, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const auto out = run();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!out.pass) ++failures;
    std::printf("criterion=%d status=%s seconds=%.1f %s\n", id, out.pass ? "PASS" : "FAIL", seconds,
                out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("acceptance passed=%d failed=%d\n", 8 - failures, failures);
  return failures;
}
