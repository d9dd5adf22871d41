#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace sieved::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "sieved");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("check eigen-l passes and reports a residual") {
  const auto r = run_args({"check", "eigen-l", "--alpha", "0.5", "--beta", "1.5", "--N", "3", "--nmax", "40"});
  CHECK(r.code == kExitPass);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["params"]["nmax"] == 40);
  CHECK(j["max_residual"].get<double>() < 1e-8);
}

TEST_CASE("check identities --N 4") {
  const auto r = run_args({"check", "identities", "--N", "4", "--format", "csv"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.rfind("suite,alpha,beta,N,nmax,seed,check,", 0) == 0);
  CHECK(r.out.find("E_k(z) = 0") != std::string::npos);
}

TEST_CASE("exit statuses") {
  CHECK(run_args({"check", "algebra", "--N", "3", "--nmax", "4"}).code == kExitFail);
  CHECK(run_args({"check", "eigen-l", "--alpha", "0", "--beta", "-1.2", "--N", "2"}).code == kExitData);
  CHECK(run_args({"check", "nope"}).code == kExitUsage);
  CHECK(run_args({"check", "eigen-l", "--N", "0"}).code == kExitUsage);
  CHECK(run_args({"check", "eigen-l", "--tol", "-1"}).code == kExitUsage);
  CHECK(run_args({"check", "eigen-l", "--format", "xml"}).code == kExitUsage);
  CHECK(run_args({"check", "eigen-l", "--bogus"}).code == kExitUsage);
  CHECK(run_args({}).code == kExitUsage);
  CHECK(run_args({"table", "nope"}).code == kExitUsage);
  CHECK(run_args({"table", "recurrence-u", "--family", "generalized-ultra", "--N", "3"}).code == kExitUsage);
  CHECK(run_args({"table", "verblunsky", "--alpha", "0", "--beta", "-1.2"}).code == kExitData);
  CHECK(run_args({"--help"}).code == kExitPass);
}

TEST_CASE("verblunsky table example") {
  const auto r = run_args({"table", "verblunsky", "--nmax", "5", "--format", "csv"});
  CHECK(r.code == kExitPass);
  CHECK(r.out == "n,a_n\n0,0\n1,-0.3333333333333333\n2,0\n3,-0.2\n4,0\n5,-0.14285714285714285\n");
}

TEST_CASE("eigenvalue table example") {
  const auto r = run_args({"table", "eigenvalues", "--N", "2", "--nmax", "4"});
  const auto j = nlohmann::json::parse(r.out);
  const char* expected[] = {"0", "3", "-1", "4", "-2"};
  for (int n = 0; n < 5; ++n) CHECK(j["rows"][n]["lambda_n"] == expected[n]);
}

TEST_CASE("recurrence-u table") {
  const auto r = run_args({"table", "recurrence-u", "--family", "sieved-ultra-1", "--N", "3", "--alpha", "0.5",
                           "--beta", "0.5", "--nmax", "7", "--format", "csv"});
  CHECK(r.code == kExitPass);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,u_n,measured");
  std::getline(in, line);
  std::getline(in, line);
  CHECK(line == "1,2,2");
  const auto printed = run_args({"table", "recurrence-u", "--family", "generalized-ultra", "--variant", "printed",
                                 "--N", "2", "--alpha", "0.3", "--beta", "1.7", "--format", "csv"});
  CHECK(printed.code == kExitPass);
}

TEST_CASE("psi table rows carry the parity case") {
  const auto r = run_args({"table", "psi", "--N", "2", "--nmax", "5", "--format", "csv"});
  CHECK(r.out.find("\n5,n_odd_k_even,2,1,1,-1,") != std::string::npos);
}

TEST_CASE("byte-identical output regardless of worker count") {
  const std::vector<std::string> base{"check", "eigen-l", "eigen-y", "cmv", "three-term",
                                      "--alpha", "0.3", "--beta", "1.7", "--N", "3", "--nmax", "10"};
  auto with = [&](const char* workers, const char* fmt) {
    auto a = base;
    a.insert(a.end(), {"--workers", workers, "--format", fmt});
    return run_args(a);
  };
  for (const char* fmt : {"json", "csv", "text"}) {
    const auto one = with("1", fmt);
    const auto four = with("4", fmt);
    CHECK(one.code == kExitPass);
    CHECK(one.out == four.out);
  }
  const auto j = nlohmann::json::parse(with("2", "json").out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 4);
  CHECK(j[0]["suite"] == "eigen-l");
  CHECK(j[3]["suite"] == "three-term");
  const auto csv = with("2", "csv").out;
  CHECK(csv.find("suite,alpha") == 0);
  CHECK(csv.find("suite,alpha", 1) == std::string::npos);
}

TEST_CASE("--out writes the file") {
  const auto r = run_args({"table", "eigenvalues", "--nmax", "2", "--format", "csv", "--out", "cli_out.csv"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.empty());
  std::ifstream f("cli_out.csv");
  std::stringstream s;
  s << f.rdbuf();
  CHECK(s.str().rfind("n,mu_n,lambda_n", 0) == 0);
}

TEST_CASE("environment overrides defaults, flags override the environment") {
  ::setenv("SIEVED_N", "5", 1);
  auto r = run_args({"table", "eigenvalues", "--nmax", "1"});
  CHECK(nlohmann::json::parse(r.out)["params"]["N"] == 5);
  r = run_args({"table", "eigenvalues", "--nmax", "1", "--N", "2"});
  CHECK(nlohmann::json::parse(r.out)["params"]["N"] == 2);
  ::unsetenv("SIEVED_N");
}

TEST_CASE("CSV does not depend on the C locale") {
  const auto before = run_args({"table", "verblunsky", "--nmax", "3", "--format", "csv"}).out;
  if (std::setlocale(LC_ALL, "de_DE.UTF-8") != nullptr || std::setlocale(LC_ALL, "fr_FR.UTF-8") != nullptr) {
    CHECK(run_args({"table", "verblunsky", "--nmax", "3", "--format", "csv"}).out == before);
    std::setlocale(LC_ALL, "C");
  }
  CHECK(before.find("-0.3333333333333333") != std::string::npos);
}
