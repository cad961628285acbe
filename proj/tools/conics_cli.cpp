// Command-line front end: censuses, predicted constants, local densities and
// the invariant suites.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "conics/census.hpp"
#include "conics/constants.hpp"
#include "conics/densities.hpp"
#include "conics/errors.hpp"
#include "conics/norm_form.hpp"
#include "conics/verify.hpp"

namespace {

using namespace conics;

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kCapacity = 3 };

struct RunConfig {
  std::string family;
  std::vector<std::string> bmax;
  std::vector<std::string> x;
  std::string b = "1,1,1";
  std::string m = "1,1,1";
  std::string g = "x0^2+3*x1^2";
  std::int64_t a = -1;
  std::string prime_bound = "1e6";
  int depth = 4;
  std::int64_t p = 2;
  unsigned workers = 1;
  std::string out;
  std::string suite;
  std::int64_t samples = 100'000;
};

std::int64_t parse_count(const std::string& text, const char* what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw DomainError(fmt::format("{} is not a number: '{}'", what, text));
  }
  if (used != text.size() || v < 1 || v != std::floor(v) || v > 9e15)
    throw DomainError(fmt::format("{} must be a positive integer: '{}'", what, text));
  return static_cast<std::int64_t>(v);
}

std::array<std::int64_t, 3> parse_triple(const std::string& text, const char* what) {
  std::array<std::int64_t, 3> out{};
  std::stringstream ss(text);
  std::string item;
  std::size_t i = 0;
  while (std::getline(ss, item, ',')) {
    if (i == 3) throw DomainError(fmt::format("{} needs three comma-separated values", what));
    out[i++] = parse_count(item, what);
  }
  if (i != 3) throw DomainError(fmt::format("{} needs three comma-separated values", what));
  return out;
}

std::string num(long double v) { return fmt::format("{:.12g}", static_cast<double>(v)); }

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw DomainError("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::string row(const std::vector<std::string>& bounds, const CountRecord& rec) {
  std::string s;
  for (const auto& b : bounds) s += b + ",";
  return s + fmt::format("{},{},{},{}", rec.raw_count, num(rec.normalized()), num(rec.predicted),
                         num(rec.ratio));
}

int cmd_count(const RunConfig& cfg) {
  const std::int64_t prime_bound = parse_count(cfg.prime_bound, "--prime-bound");
  const unsigned workers = std::max(1u, cfg.workers);
  Output out(cfg.out);
  auto& os = out.stream();

  if (cfg.family == "genguo") {
    if (cfg.x.empty()) throw DomainError("count genguo needs --x X1,X2,X3");
    const FamilyParams params(parse_triple(cfg.b, "--b"), parse_triple(cfg.m, "--m"));
    std::vector<std::array<std::int64_t, 3>> grid;
    std::int64_t top = params.m_product();
    for (const auto& x : cfg.x) {
      grid.push_back(parse_triple(x, "--x"));
      for (const auto v : grid.back()) top = std::max(top, v);
    }
    const FactorSieve sieve(std::max<std::int64_t>(top, 16));
    const long double predicted = predict_genguo(params, prime_bound).value;
    os << "x1,x2,x3,raw_count,normalized,predicted,ratio\n";
    for (const auto& x : grid) {
      const std::array<double, 3> box{static_cast<double>(x[0]), static_cast<double>(x[1]),
                                      static_cast<double>(x[2])};
      const auto raw = count_generalized(params, box, sieve, workers);
      double normalization = 1;
      for (const auto xi : x)
        normalization *= xi >= 2 ? std::sqrt(std::log(static_cast<double>(xi))) / static_cast<double>(xi)
                                 : 0.0;
      const auto rec = make_record({box[0], box[1], box[2]}, raw, normalization,
                                   static_cast<double>(predicted));
      os << row({std::to_string(x[0]), std::to_string(x[1]), std::to_string(x[2])}, rec) << "\n";
    }
    return kOk;
  }

  if (cfg.bmax.empty()) throw DomainError("count needs --bmax");
  std::vector<std::int64_t> bounds;
  for (const auto& s : cfg.bmax) bounds.push_back(parse_count(s, "--bmax"));
  const std::int64_t top = *std::max_element(bounds.begin(), bounds.end());

  auto log_power = [](std::int64_t b, double e) {
    return b >= 2 ? std::pow(std::log(static_cast<double>(b)), e) : 0.0;
  };
  std::function<std::int64_t(std::int64_t)> count;
  std::function<double(std::int64_t)> normalization;
  long double predicted = 0;
  std::unique_ptr<FactorSieve> sieve;
  std::unique_ptr<HomogeneousPolynomial> poly;

  if (cfg.family == "conics" || cfg.family == "conics-all") {
    sieve = std::make_unique<FactorSieve>(std::max<std::int64_t>(top, 16));
    const bool all = cfg.family == "conics-all";
    predicted = all ? predict_all_conics(prime_bound).value : predict_conics(prime_bound).route1.value;
    count = [&, all](std::int64_t b) {
      return all ? count_all_conics(b, *sieve, workers) : count_primitive_conics(b, *sieve, workers);
    };
    normalization = [&](std::int64_t b) {
      return log_power(b, 1.5) / std::pow(static_cast<double>(b), 3);
    };
  } else if (cfg.family == "two-squares") {
    sieve = std::make_unique<FactorSieve>(std::max<std::int64_t>(top, 16));
    predicted = predict_two_squares(prime_bound).value;
    count = [&](std::int64_t b) { return count_two_squares(b, *sieve, workers); };
    normalization = [&](std::int64_t b) { return log_power(b, 1.0) / std::pow(static_cast<double>(b), 2); };
  } else if (cfg.family == "norm-form") {
    poly = std::make_unique<HomogeneousPolynomial>(HomogeneousPolynomial::parse(cfg.g));
    long double reach = 0;
    for (const auto& t : poly->terms())
      reach += std::fabs(static_cast<long double>(t.coefficient)) * std::pow(static_cast<long double>(top), poly->degree());
    if (reach > 2e8L) throw CapacityError("norm-form values exceed the factorization budget");
    sieve = std::make_unique<FactorSieve>(std::max<std::int64_t>(static_cast<std::int64_t>(reach), 16));
    if (poly->variables() == 2) predicted = predict_norm_form(*poly, cfg.a, std::min<std::int64_t>(prime_bound, 10'000), cfg.depth).value;
    count = [&](std::int64_t b) { return count_norm_form(*poly, cfg.a, b, *sieve); };
    const int dim = poly->variables();
    normalization = [&, dim](std::int64_t b) {
      return log_power(b, 0.5) / std::pow(static_cast<double>(b), dim);
    };
  } else {
    throw DomainError("unknown family for count: " + cfg.family);
  }

  os << "bound,raw_count,normalized,predicted,ratio\n";
  for (const auto b : bounds) {
    const auto rec = make_record({static_cast<double>(b)}, count(b), normalization(b),
                                 static_cast<double>(predicted));
    os << row({std::to_string(b)}, rec) << "\n";
  }
  return kOk;
}

int cmd_predict(const RunConfig& cfg) {
  const std::int64_t prime_bound = parse_count(cfg.prime_bound, "--prime-bound");
  Output out(cfg.out);
  auto& os = out.stream();
  os << "constant,value,prime_bound,tail\n";
  auto line = [&](const std::string& name, const ProductValue& v) {
    os << fmt::format("{},{},{},{}\n", name, num(v.value), v.prime_bound, num(v.tail));
  };
  if (cfg.family == "conics") {
    const auto c = predict_conics(prime_bound);
    line("route1", c.route1);
    line("route2", c.route2);
    line("assembly", c.assembly);
    line("all_t", predict_all_conics(prime_bound));
  } else if (cfg.family == "genguo") {
    const FamilyParams params(parse_triple(cfg.b, "--b"), parse_triple(cfg.m, "--m"));
    line("coefficient", predict_genguo(params, prime_bound));
    line("beta", beta_bm(params, prime_bound));
    os << fmt::format("c,{},,\n", c_bm(params));
  } else if (cfg.family == "two-squares") {
    line("regularized", predict_two_squares(prime_bound));
    os << fmt::format("ordered_truncation,{},{},\n", num(two_squares_naive_truncation(prime_bound)),
                      prime_bound);
  } else if (cfg.family == "norm-form") {
    const auto g = HomogeneousPolynomial::parse(cfg.g);
    line("constant", predict_norm_form(g, cfg.a, prime_bound, cfg.depth));
  } else {
    throw DomainError("unknown family for predict: " + cfg.family);
  }
  return kOk;
}

int cmd_density(const RunConfig& cfg) {
  Output out(cfg.out);
  auto& os = out.stream();
  os << "family,p,depth,value,closed,tail_bound\n";
  if (cfg.family == "conic" || cfg.family == "conics") {
    const auto d = local_density_conic(cfg.p, cfg.depth);
    os << fmt::format("conic,{},{},{},{},{}\n", cfg.p, cfg.depth, to_string(d.value),
                      to_string(local_density_conic_closed(cfg.p)), to_string(d.tail_bound));
  } else if (cfg.family == "two-squares") {
    const auto d = local_density_two_squares_enumerated(cfg.p);
    os << fmt::format("two-squares,{},{},{},{},{}\n", cfg.p, cfg.depth, to_string(d.value),
                      to_string(local_density_two_squares(Place::prime(cfg.p))), to_string(d.tail_bound));
  } else if (cfg.family == "norm-form") {
    const auto g = HomogeneousPolynomial::parse(cfg.g);
    const auto v = hilbert_volume(g, cfg.a, cfg.p, cfg.depth);
    os << fmt::format("norm-form,{},{},{},,{}\n", cfg.p, cfg.depth, num(v.value), num(v.undetermined));
  } else {
    throw DomainError("unknown family for density: " + cfg.family);
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg) {
  SuiteOptions options;
  options.prime_bound = parse_count(cfg.prime_bound, "--prime-bound");
  options.samples = cfg.samples;
  options.workers = std::max(1u, cfg.workers);
  const auto report = run_suite(cfg.suite, options);
  Output out(cfg.out);
  auto& os = out.stream();
  std::size_t failed = 0;
  for (const auto& c : report.checks) {
    if (!c.pass) ++failed;
    os << fmt::format("suite={} check={} status={} {}\n", report.suite, c.name, c.pass ? "pass" : "fail",
                      c.detail);
  }
  os << fmt::format("suite={} result={} checks={} failed={}\n", report.suite,
                    report.passed() ? "pass" : "fail", report.checks.size(), failed);
  return report.passed() ? kOk : kVerifyFailed;
}

// Appends "--key value" for every key=value line of the config file whose key
// was not given on the command line.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i + 1 < args.size(); ++i)
    if (args[i] == "--config") {
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      break;
    }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read config file " + path);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key.empty()) continue;
    const std::string flag = "--" + key;
    bool given = false;
    for (const auto& a : args)
      if (a == flag || a.rfind(flag + "=", 0) == 0) given = true;
    if (!given) {
      args.push_back(flag);
      args.push_back(value);
    }
  }
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Counts of soluble diagonal conics and related families"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--prime-bound,-P", cfg.prime_bound, "Euler product truncation (e.g. 1e6)");
    sub->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out, "Output file (default stdout)");
    sub->add_option("--depth", cfg.depth, "p-adic depth")->check(CLI::PositiveNumber);
  };
  auto add_family_params = [&](CLI::App* sub) {
    sub->add_option("--b", cfg.b, "b1,b2,b3");
    sub->add_option("--m", cfg.m, "m12,m13,m23");
    sub->add_option("--g", cfg.g, "Homogeneous polynomial, e.g. x0^2+3*x1^2");
    sub->add_option("--a", cfg.a, "Norm-form parameter a");
  };

  auto* count = app.add_subcommand("count", "Run a census over a bound grid");
  count->add_option("family", cfg.family, "conics|conics-all|genguo|two-squares|norm-form")->required();
  count->add_option("--bmax", cfg.bmax, "Bounds, comma separated")->delimiter(',');
  count->add_option("--x", cfg.x, "Box X1,X2,X3 (repeatable)");
  add_common(count);
  add_family_params(count);

  auto* predict = app.add_subcommand("predict", "Evaluate a predicted leading constant");
  predict->add_option("family", cfg.family, "conics|genguo|two-squares|norm-form")->required();
  add_common(predict);
  add_family_params(predict);

  auto* density = app.add_subcommand("density", "Local density at a prime");
  density->add_option("--family", cfg.family, "conic|two-squares|norm-form")->required();
  density->add_option("--p", cfg.p, "Prime")->required();
  add_common(density);
  add_family_params(density);

  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  verify->add_option("--suite", cfg.suite, "hilbert|detectors|densities|assembly|selberg")->required();
  verify->add_option("--samples", cfg.samples, "Random trials")->check(CLI::PositiveNumber);
  add_common(verify);

  try {
    std::vector<std::string> raw(argv + 1, argv + argc);
    auto args = merge_config(raw);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (count->parsed()) return cmd_count(cfg);
    if (predict->parsed()) return cmd_predict(cfg);
    if (density->parsed()) return cmd_density(cfg);
    return cmd_verify(cfg);
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
