#include "conics/verify.hpp"

#include <cmath>
#include <random>

#include <fmt/format.h>

#include "conics/conic.hpp"
#include "conics/constants.hpp"
#include "conics/densities.hpp"
#include "conics/detectors.hpp"
#include "conics/errors.hpp"
#include "conics/hilbert.hpp"

namespace conics {

bool SuiteReport::passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"hilbert", "detectors", "densities", "assembly",
                                              "selberg"};
  return names;
}

namespace {

bool admissible_triple(std::int64_t a, std::int64_t b, std::int64_t c, const FactorSieve& sieve) {
  return gcd(a, b) == 1 && gcd(a, c) == 1 && gcd(b, c) == 1 && moebius_sq(a, sieve) &&
         moebius_sq(b, sieve) && moebius_sq(c, sieve) && odd_part(a * b * c) > 1;
}

struct DetectorTally {
  std::int64_t checked = 0, failures = 0;
};

void detector_case(std::int64_t a, std::int64_t b, std::int64_t c, const FactorSieve& sieve,
                   DetectorTally& t) {
  const DetectorInput in(a, b, c, sieve);
  const int lhs = detector_lhs(in, sieve);
  const bool sol = soluble_q(DiagonalConic(a, b, -c), sieve);
  ++t.checked;
  if (lhs != (sol ? 1 : 0)) ++t.failures;
}

SuiteReport hilbert_suite(const SuiteOptions& o) {
  SuiteReport r{"hilbert", {}};
  const FactorSieve sieve(1'000'000);
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::int64_t> dist(-1'000'000, 1'000'000);
  std::int64_t failures = 0, checked = 0;
  while (checked < o.samples) {
    const auto a = dist(rng), b = dist(rng);
    if (a == 0 || b == 0) continue;
    ++checked;
    if (!hilbert_product_check(a, b, sieve)) ++failures;
  }
  r.checks.push_back({"product_formula", failures == 0,
                      fmt::format("pairs={} failures={}", checked, failures)});

  std::int64_t mismatches = 0, cases = 0;
  for (std::int64_t r0 = 1; r0 < 16; ++r0)
    for (std::int64_t r1 = 1; r1 < 16; ++r1)
      for (std::int64_t r2 = 1; r2 < 16; ++r2) {
        const int v = v_p(r0, 2) + v_p(r1, 2) + v_p(r2, 2);
        if (v > 1) continue;
        ++cases;
        const bool congruence = soluble_at_2_congruence(r0, r1, r2);
        const bool symbol = hilbert(-r0 * r1, -r0 * r2, Place::prime(2)) == 1;
        if (congruence != symbol) ++mismatches;
      }
  r.checks.push_back({"two_adic_congruence_mod16", mismatches == 0,
                      fmt::format("cases={} mismatches={}", cases, mismatches)});
  return r;
}

SuiteReport detectors_suite(const SuiteOptions& o) {
  SuiteReport r{"detectors", {}};
  const FactorSieve sieve(1'000'000);
  DetectorTally small;
  std::int64_t sum_mismatch = 0;
  for (std::int64_t a = 1; a <= 3000; ++a)
    for (std::int64_t b = 1; a * b <= 3000; ++b)
      for (std::int64_t c = 1; a * b * c <= 3000; ++c) {
        if (!admissible_triple(a, b, c, sieve)) continue;
        detector_case(a, b, c, sieve, small);
        const DetectorInput in(a, b, c, sieve);
        if (detector_delta_sum(in, sieve) != detector_jacobi_sum(in, sieve)) ++sum_mismatch;
      }
  r.checks.push_back({"detector_exhaustive_abc_le_3000", small.failures == 0,
                      fmt::format("triples={} failures={}", small.checked, small.failures)});
  r.checks.push_back({"hilbert_sum_equals_jacobi_sum", sum_mismatch == 0,
                      fmt::format("triples={} mismatches={}", small.checked, sum_mismatch)});

  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::int64_t> dist(1, 1'000'000);
  DetectorTally large;
  const std::int64_t want = std::min<std::int64_t>(o.samples, 10'000);
  while (large.checked < want) {
    const auto a = dist(rng) % 5000 + 1, b = dist(rng) % 5000 + 1, c = dist(rng) % 5000 + 1;
    if (!admissible_triple(a, b, c, sieve)) continue;
    detector_case(a, b, c, sieve, large);
  }
  r.checks.push_back({"detector_random_triples", large.failures == 0,
                      fmt::format("triples={} failures={}", large.checked, large.failures)});

  // Decomposition tau N = 2M + E + (terms with n1 n2 n3 <= 2) on small boxes.
  bool exact = true;
  std::string detail;
  for (const auto& [b, m] : std::vector<std::pair<std::array<std::int64_t, 3>, std::array<std::int64_t, 3>>>{
           {{1, 1, 1}, {1, 1, 1}}, {{1, 1, 1}, {3, 1, 1}}, {{1, 1, 1}, {1, 5, 3}}}) {
    const FamilyParams params(b, m);
    const auto rep = detector_decomposition(params, {30, 30, 30}, sieve);
    const bool ok = rep.discrepancy == rep.correction;
    exact = exact && ok;
    detail += fmt::format("{}:{} ", params.to_string(), ok ? "exact" : "mismatch");
  }
  r.checks.push_back({"main_error_decomposition", exact, detail});
  return r;
}

SuiteReport densities_suite(const SuiteOptions&) {
  SuiteReport r{"densities", {}};
  for (const std::int64_t p : {2, 3, 5, 7, 11, 13}) {
    const auto enumerated = local_density_conic(p, 3);
    const auto closed = local_density_conic_closed(p);
    r.checks.push_back({fmt::format("conic_density_p{}", p), enumerated.value == closed,
                        fmt::format("enumerated={} closed={}", to_string(enumerated.value),
                                    to_string(closed))});
  }
  for (const std::int64_t p : {2, 3, 5, 7, 11, 13}) {
    const auto enumerated = local_density_two_squares_enumerated(p);
    const auto closed = local_density_two_squares(Place::prime(p));
    r.checks.push_back({fmt::format("two_squares_density_p{}", p), enumerated.value == closed,
                        fmt::format("enumerated={} closed={}", to_string(enumerated.value),
                                    to_string(closed))});
  }
  const auto cases = two_adic_cases();
  ExactRational total = 0;
  for (const auto& c : cases) total += c;
  r.checks.push_back({"two_adic_constant", total == rational(49, 3),
                      fmt::format("cases={},{},{},{} total={}", to_string(cases[0]), to_string(cases[1]),
                                  to_string(cases[2]), to_string(cases[3]), to_string(total))});
  std::int64_t bad = 0, tested = 0;
  for (std::int64_t p = 3; p <= 50; ++p) {
    bool prime = true;
    for (std::int64_t q = 2; q * q <= p; ++q)
      if (p % q == 0) prime = false;
    if (!prime) continue;
    ++tested;
    const auto closed = kappa_prime_closed(p);
    if (kappa_prime_bracket(p) != closed || kappa_prime_enumerated(p) != closed) ++bad;
  }
  r.checks.push_back({"kappa_prime_factor", bad == 0, fmt::format("primes={} mismatches={}", tested, bad)});
  return r;
}

SuiteReport assembly_suite(const SuiteOptions& o) {
  SuiteReport r{"assembly", {}};
  const auto c = predict_conics(o.prime_bound);
  const long double d12 = std::fabs(c.route1.value / c.route2.value - 1);
  const long double d13 = std::fabs(c.assembly.value / c.route1.value - 1);
  r.checks.push_back({"dual_route", d12 <= 1e-6L,
                      fmt::format("route1={:.12g} route2={:.12g} delta={:.3g} tail={:.3g}",
                                  static_cast<double>(c.route1.value), static_cast<double>(c.route2.value),
                                  static_cast<double>(d12), static_cast<double>(c.route1.tail))});
  r.checks.push_back({"assembly_identity", d13 <= 1e-6L,
                      fmt::format("assembly={:.12g} delta={:.3g}", static_cast<double>(c.assembly.value),
                                  static_cast<double>(d13))});
  const auto all = predict_all_conics(o.prime_bound);
  const long double zeta3 = 1.202056903159594285399738161511449990764986292L;
  const long double d0 = std::fabs(all.value / (zeta3 * c.route1.value) - 1);
  r.checks.push_back({"all_t_constant_is_zeta3_multiple", d0 <= 1e-6L,
                      fmt::format("all={:.12g} delta={:.3g}", static_cast<double>(all.value),
                                  static_cast<double>(d0))});
  return r;
}

SuiteReport selberg_suite(const SuiteOptions& o) {
  SuiteReport r{"selberg", {}};
  long double series = 1;
  for (int k = 1; k < 200; ++k) series += 1.0L / ((k + 1) * std::ldexp(1.0L, k));
  const long double t2 = selberg_t(2);
  r.checks.push_back({"t2_closed_form", std::fabs(series - t2) < 1e-15L,
                      fmt::format("t2={:.15g} series={:.15g}", static_cast<double>(t2),
                                  static_cast<double>(series))});
  const auto lo = selberg_t0(std::max<std::int64_t>(o.prime_bound / 10, 1000));
  const auto hi = selberg_t0(o.prime_bound);
  const long double drift = std::fabs(lo.value - hi.value);
  r.checks.push_back({"t0_truncation_stable", drift <= 1e-8L,
                      fmt::format("t0={:.15g} drift={:.3g}", static_cast<double>(hi.value),
                                  static_cast<double>(drift))});
  const FactorSieve sieve(1'000'000);
  bool trend = true;
  std::string detail;
  for (const auto& [q, a, d] : std::vector<std::array<std::int64_t, 3>>{{4, 1, 1}, {8, 3, 1}, {4, 1, 15}}) {
    long double previous = 1e9;
    for (const std::int64_t x : {10'000, 100'000, 1'000'000}) {
      const auto s = selberg_delange_check(x, q, a, d, sieve, o.prime_bound);
      const long double dev = std::fabs(s.ratio() - 1);
      if (dev > previous) trend = false;
      previous = dev;
      detail += fmt::format("q{}a{}d{}x{}:{:.4f} ", q, a, d, x, static_cast<double>(s.ratio()));
    }
  }
  r.checks.push_back({"single_variable_trend", trend, detail});
  return r;
}

}  // namespace

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "hilbert") return hilbert_suite(options);
  if (name == "detectors") return detectors_suite(options);
  if (name == "densities") return densities_suite(options);
  if (name == "assembly") return assembly_suite(options);
  if (name == "selberg") return selberg_suite(options);
  throw DomainError("unknown suite: " + name);
}

}  // namespace conics
