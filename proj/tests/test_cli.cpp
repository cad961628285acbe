#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "oracles.hpp"

#ifndef CONICS_CLI_PATH
#error "CONICS_CLI_PATH must point at the conics executable"
#endif

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CONICS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int rc = pclose(pipe);
  return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  return out;
}

std::string field(const std::string& line, std::size_t index) {
  std::stringstream ss(line);
  std::string item;
  for (std::size_t i = 0; i <= index; ++i) std::getline(ss, item, ',');
  return item;
}

}  // namespace

TEST_CASE("count rows") {
  auto r = run("count conics --bmax 1");
  CHECK(r.status == 0);
  auto l = lines(r.out);
  REQUIRE(l.size() == 2);
  CHECK(l[0] == "bound,raw_count,normalized,predicted,ratio");
  CHECK(field(l[1], 0) == "1");
  CHECK(field(l[1], 1) == "6");

  r = run("count two-squares --bmax 1");
  CHECK(r.status == 0);
  CHECK(field(lines(r.out).at(1), 1) == "1");

  r = run("count genguo --b 1,1,1 --m 1,1,1 --x 2,2,2");
  CHECK(r.status == 0);
  l = lines(r.out);
  REQUIRE(l.size() == 2);
  CHECK(l[0] == "x1,x2,x3,raw_count,normalized,predicted,ratio");
  std::int64_t expect = 0;
  for (std::int64_t a = 1; a <= 2; ++a)
    for (std::int64_t b = 1; b <= 2; ++b)
      for (std::int64_t c = 1; c <= 2; ++c)
        if (oracle::squarefree(a * b * c) && oracle::conic_soluble(a, b, -c)) ++expect;
  CHECK(field(l[1], 3) == std::to_string(expect));

  r = run("count genguo --x 2,2,2 --x 10,10,10 --m 3,1,1");
  CHECK(lines(r.out).size() == 3);
}

TEST_CASE("output is stable across worker counts") {
  const auto one = run("count conics --bmax 5,20,33 --workers 1");
  const auto three = run("count conics --bmax 5,20,33 --workers 3");
  CHECK(one.status == 0);
  CHECK(one.out == three.out);
  CHECK(one.out == run("count conics --bmax 5,20,33 --workers 1").out);
  CHECK(run("count genguo --x 40,40,40 --workers 1").out == run("count genguo --x 40,40,40 --workers 4").out);
}

TEST_CASE("predict and density") {
  auto r = run("predict conics -P 1e5");
  CHECK(r.status == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() >= 3);
  CHECK(field(l[1], 0) == "route1");
  CHECK(field(l[2], 0) == "route2");
  CHECK(std::stod(field(l[1], 1)) == doctest::Approx(std::stod(field(l[2], 1))).epsilon(1e-6));
  r = run("predict two-squares -P 1e5");
  CHECK(r.status == 0);
  CHECK(r.out.find("regularized,0.40940") != std::string::npos);
  r = run("predict genguo --b 1,1,1 --m 1,1,1 -P 1e5");
  CHECK(r.status == 0);
  CHECK(r.out.find("coefficient,0.13172") != std::string::npos);
  r = run("density --family conic --p 3");
  CHECK(r.status == 0);
  CHECK(r.out.find("conic,3,4,299/288,299/288,0") != std::string::npos);
}

TEST_CASE("verify exit codes") {
  auto r = run("verify --suite densities");
  CHECK(r.status == 0);
  CHECK(r.out.find("enumerated=49/48 closed=49/48") != std::string::npos);
  CHECK(r.out.find("suite=densities result=pass") != std::string::npos);
  CHECK(run("verify --suite nonsense").status == 2);
}

TEST_CASE("usage and capacity errors") {
  CHECK(run("").status == 2);
  CHECK(run("count conics").status == 2);
  CHECK(run("count conics --bmax 0").status == 2);
  CHECK(run("count conics --bmax abc").status == 2);
  CHECK(run("count sphere --bmax 3").status == 2);
  CHECK(run("count genguo --m 2,2,1 --x 5,5,5").status == 2);
  CHECK(run("count genguo --x 5,5").status == 2);
  CHECK(run("count conics --bmax 3 --workers 0").status == 2);
  CHECK(run("count conics --bmax 1e9").status == 3);
}

TEST_CASE("config file and output path") {
  const std::string cfg = "test_cli_config.txt", out = "test_cli_out.csv";
  {
    std::ofstream f(cfg);
    f << "# census settings\nbmax = 3\nworkers=2\n";
  }
  auto r = run("count conics --config " + cfg);
  CHECK(r.status == 0);
  CHECK(field(lines(r.out).at(1), 0) == "3");
  r = run("count conics --bmax 1 --config " + cfg);
  CHECK(field(lines(r.out).at(1), 1) == "6");
  CHECK(run("count conics --config missing_file.txt").status == 2);

  CHECK(run("count conics --bmax 1,2 --out " + out).out.empty());
  std::ifstream f(out);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == run("count conics --bmax 1,2").out);
  std::remove(cfg.c_str());
  std::remove(out.c_str());
}
