#include "conics/norm_form.hpp"

#include <cctype>
#include <cmath>
#include <numbers>

#include "conics/conic.hpp"
#include "conics/errors.hpp"
#include "conics/hilbert.hpp"

namespace conics {

namespace {

constexpr std::int64_t kResidueBudget = 20'000'000;

std::int64_t mul_mod(std::int64_t x, std::int64_t y, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(x) * y % m);
}

std::int64_t ipow(std::int64_t p, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

bool is_square(std::int64_t a) {
  if (a < 0) return false;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(a)));
  while (r * r > a) --r;
  while ((r + 1) * (r + 1) <= a) ++r;
  return r * r == a;
}

// Iterates over all vectors in [lo, hi]^k.
template <typename Fn>
void for_each_vector(int k, std::int64_t lo, std::int64_t hi, Fn fn) {
  std::vector<std::int64_t> x(static_cast<std::size_t>(k), lo);
  while (true) {
    fn(x);
    int i = 0;
    while (i < k && x[i] == hi) x[i++] = lo;
    if (i == k) return;
    ++x[i];
  }
}

}  // namespace

HomogeneousPolynomial::HomogeneousPolynomial(std::vector<Monomial> terms, int variables)
    : terms_(std::move(terms)), variables_(variables), degree_(-1) {
  if (variables_ < 1) throw DomainError("polynomial needs at least one variable");
  for (auto& t : terms_) {
    t.exponents.resize(static_cast<std::size_t>(variables_), 0);
    int deg = 0;
    for (const auto e : t.exponents) {
      if (e < 0) throw DomainError("negative exponent");
      deg += e;
    }
    if (degree_ < 0) degree_ = deg;
    if (deg != degree_) throw DomainError("polynomial is not homogeneous");
  }
  if (degree_ < 0) throw DomainError("empty polynomial");
  if (degree_ % 2 != 0 || degree_ == 0) throw DomainError("degree must be even and positive");
}

HomogeneousPolynomial HomogeneousPolynomial::parse(const std::string& text) {
  std::string s;
  for (const char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw DomainError("empty polynomial");
  std::vector<Monomial> terms;
  int variables = 0;
  std::size_t i = 0;
  auto read_int = [&](std::int64_t& out) {
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) return false;
    out = std::stoll(s.substr(start, i - start));
    return true;
  };
  while (i < s.size()) {
    std::int64_t sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!terms.empty()) {
      throw DomainError("expected + or - in polynomial");
    }
    Monomial m{sign, {}};
    std::int64_t coef = 1;
    bool have_factor = false;
    if (read_int(coef)) {
      m.coefficient *= coef;
      have_factor = true;
      if (i < s.size() && s[i] == '*') ++i;
      else if (i < s.size() && s[i] == 'x') throw DomainError("missing * after coefficient");
    }
    while (i < s.size() && s[i] == 'x') {
      ++i;
      std::int64_t index = 0, exponent = 1;
      if (!read_int(index)) throw DomainError("variable needs an index");
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (!read_int(exponent)) throw DomainError("missing exponent");
      }
      if (index > 16) throw DomainError("too many variables");
      if (m.exponents.size() <= static_cast<std::size_t>(index))
        m.exponents.resize(static_cast<std::size_t>(index) + 1, 0);
      m.exponents[static_cast<std::size_t>(index)] += static_cast<int>(exponent);
      variables = std::max(variables, static_cast<int>(index) + 1);
      have_factor = true;
      if (i < s.size() && s[i] == '*') ++i;
    }
    if (!have_factor) throw DomainError("malformed term in polynomial");
    terms.push_back(std::move(m));
  }
  return HomogeneousPolynomial(std::move(terms), variables);
}

std::int64_t HomogeneousPolynomial::operator()(const std::vector<std::int64_t>& x) const {
  __int128 total = 0;
  const __int128 cap = static_cast<__int128>(INT64_MAX);
  for (const auto& t : terms_) {
    __int128 v = t.coefficient;
    for (std::size_t i = 0; i < t.exponents.size(); ++i)
      for (int e = 0; e < t.exponents[i]; ++e) {
        v *= x[i];
        if (v > cap || v < -cap) throw CapacityError("polynomial value overflows 64 bits");
      }
    total += v;
  }
  if (total > cap || total < -cap) throw CapacityError("polynomial value overflows 64 bits");
  return static_cast<std::int64_t>(total);
}

std::int64_t HomogeneousPolynomial::eval_mod(const std::vector<std::int64_t>& x, std::int64_t m) const {
  std::int64_t total = 0;
  for (const auto& t : terms_) {
    std::int64_t v = ((t.coefficient % m) + m) % m;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      const std::int64_t xi = ((x[i] % m) + m) % m;
      for (int e = 0; e < t.exponents[i]; ++e) v = mul_mod(v, xi, m);
    }
    total = (total + v) % m;
  }
  return total;
}

long double HomogeneousPolynomial::eval_real(const std::vector<long double>& x) const {
  long double total = 0;
  for (const auto& t : terms_) {
    long double v = static_cast<long double>(t.coefficient);
    for (std::size_t i = 0; i < t.exponents.size(); ++i)
      for (int e = 0; e < t.exponents[i]; ++e) v *= x[i];
    total += v;
  }
  return total;
}

std::int64_t count_norm_form(const HomogeneousPolynomial& g, std::int64_t a, std::int64_t bound,
                             const FactorSieve& sieve) {
  if (a == 0) throw DomainError("a must be nonzero");
  if (bound < 1) return 0;
  const bool trivial = is_square(a);
  std::int64_t count = 0;
  for_each_vector(g.variables(), -bound, bound, [&](const std::vector<std::int64_t>& x) {
    // One representative per +-x: the first nonzero coordinate is positive.
    std::int64_t first = 0, content = 0;
    for (const auto xi : x) {
      if (first == 0) first = xi;
      content = gcd(content, xi);
    }
    if (first <= 0 || content != 1) return;
    const std::int64_t value = g(x);
    if (value == 0) return;
    if (trivial) {
      ++count;
      return;
    }
    if ((value < 0 ? -value : value) > sieve.limit()) throw CapacityError("g(x) exceeds the sieve");
    if (norm_representable(value, 1, a, sieve)) ++count;
  });
  return count;
}

PadicVolume hilbert_volume(const HomogeneousPolynomial& g, std::int64_t a, std::int64_t p, int depth) {
  if (depth < 1) throw DomainError("depth must be positive");
  const int vars = g.variables();
  const std::int64_t modulus = ipow(p, depth);
  long double classes = 1;
  for (int i = 0; i < vars; ++i) classes *= static_cast<long double>(modulus);
  if (classes > kResidueBudget) throw CapacityError("too many residue classes");
  const int unit_digits = p == 2 ? 3 : 1;
  std::int64_t good = 0, bad = 0, open = 0;
  for_each_vector(vars, 0, modulus - 1, [&](const std::vector<std::int64_t>& x) {
    bool primitive = false;
    for (const auto xi : x)
      if (xi % p != 0) primitive = true;
    if (!primitive) return;
    std::int64_t value = g.eval_mod(x, modulus);
    if (value == 0) {
      ++open;
      return;
    }
    int v = 0;
    while (value % p == 0) {
      value /= p;
      ++v;
    }
    if (v + unit_digits > depth) {
      ++open;
      return;
    }
    const std::int64_t unit = value % ipow(p, unit_digits);
    if (hilbert(ipow(p, v) * unit, a, Place::prime(p)) == 1)
      ++good;
    else
      ++bad;
  });
  // g has even degree, so scaling x by p leaves the symbol unchanged and the
  // full volume is the primitive volume over 1 - p^{-(n+1)}.
  const long double primitive_mass = 1 - std::pow(static_cast<long double>(p), -vars);
  PadicVolume out;
  out.determined = static_cast<long double>(good) / classes / primitive_mass;
  out.undetermined = static_cast<long double>(open) / classes / primitive_mass;
  const long double share =
      good + bad > 0 ? static_cast<long double>(good) / static_cast<long double>(good + bad) : 0.5L;
  out.value = out.determined + share * out.undetermined;
  return out;
}

long double omega_p(const HomogeneousPolynomial& g, std::int64_t a, std::int64_t p, int depth) {
  const long double x = static_cast<long double>(p);
  long double projective = 0;
  for (int i = 0; i < g.variables(); ++i) projective += std::pow(x, -i);
  return std::sqrt(1 - 1 / x) * projective * hilbert_volume(g, a, p, depth).value;
}

long double omega_real(const HomogeneousPolynomial& g, std::int64_t a) {
  const int vars = g.variables();
  if (a > 0) return vars * std::ldexp(1.0L, vars - 1);
  const auto per_axis = static_cast<std::int64_t>(
      std::max(8.0L, std::floor(std::pow(4.0e6L, 1.0L / static_cast<long double>(vars)))));
  std::int64_t positive = 0, total = 0;
  std::vector<long double> point(static_cast<std::size_t>(vars));
  for_each_vector(vars, 0, per_axis - 1, [&](const std::vector<std::int64_t>& idx) {
    for (int i = 0; i < vars; ++i)
      point[i] = -1 + (2 * static_cast<long double>(idx[i]) + 1) / static_cast<long double>(per_axis);
    ++total;
    if (g.eval_real(point) > 0) ++positive;
  });
  const long double volume = std::ldexp(1.0L, vars) * static_cast<long double>(positive) /
                             static_cast<long double>(total);
  return static_cast<long double>(vars) / 2 * volume;
}

ProductValue predict_norm_form(const HomogeneousPolynomial& g, std::int64_t a, std::int64_t prime_bound,
                               int depth, std::int64_t small_prime_bound) {
  if (g.variables() != 2) throw DomainError("the norm-form prediction covers binary forms only");
  if (a == 0 || is_square(a)) throw DomainError("a must be a nonzero nonsquare");
  const std::int64_t D = fundamental_discriminant(a);
  auto factor = [&](std::int64_t p) -> long double {
    const long double x = static_cast<long double>(p);
    const int chi = kronecker(D, p);
    const long double regularizer = std::sqrt(1 - chi / x);
    bool enumerate = p <= small_prime_bound || a % p == 0;
    std::int64_t roots = 0;
    if (!enumerate) {
      // Projective roots of g mod p, each required to be simple.
      auto value = [&](std::int64_t x0, std::int64_t x1) { return g.eval_mod({x0, x1}, p); };
      bool all_zero = true;
      for (std::int64_t t = 0; t < p; ++t) {
        const auto v = value(1, t);
        if (v != 0) all_zero = false;
        if (v == 0) {
          // Simple root iff d/dt g(1, t) != 0 mod p, read off g(1, t + p) - g(1, t) = p g'(t) mod p^2.
          const std::int64_t p2 = p * p;
          const std::int64_t diff = (g.eval_mod({1, t + p}, p2) - g.eval_mod({1, t}, p2) + p2) % p2;
          if (diff == 0) enumerate = true;
          ++roots;
        }
      }
      if (value(0, 1) == 0) {
        const std::int64_t p2 = p * p;
        const std::int64_t diff = (g.eval_mod({p, 1}, p2) - g.eval_mod({0, 1}, p2) + p2) % p2;
        if (diff == 0) enumerate = true;
        ++roots;
      }
      if (all_zero) enumerate = true;
    }
    long double volume;
    if (enumerate && p <= small_prime_bound) {
      volume = hilbert_volume(g, a, p, depth).value;
    } else if (enumerate && ipow(p, 2 * std::min(depth, 2)) <= kResidueBudget) {
      volume = hilbert_volume(g, a, p, std::min(depth, 2)).value;
    } else if (chi == 1) {
      volume = 1;
    } else {
      // Inert prime with simple roots: off the roots g(x) is a unit; on a root
      // disc v_p(g) is geometric and the symbol is (-1)^v.
      const long double z = static_cast<long double>(roots) * (x - 1) / (x * x);
      const long double prim = 1 - 1 / (x * x);
      volume = ((prim - z) + z / (x + 1)) / prim;
    }
    return std::sqrt(1 - 1 / x) * (1 + 1 / x) * volume * regularizer;
  };
  auto prod = euler_product(prime_bound, factor, 2 * g.degree());
  const long double l_value = dirichlet_l1(D);
  const long double pi = std::numbers::pi_v<long double>;
  const long double n_plus_1 = 2;
  const long double scale =
      2 * omega_real(g, a) * std::sqrt(l_value) / (n_plus_1 * std::sqrt(pi * g.degree()));
  return prod * scale;
}

}  // namespace conics
