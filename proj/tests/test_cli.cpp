#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using metacomm::cli::dispatch;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("enumerate json") {
  const Run r = run({"enumerate", "--p", "3", "--n", "1", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["census_size"] == 7);
  REQUIRE(j["ideals"].size() == 7);
  CHECK(j["ideals"][0]["label"] == "S1(0)");
  CHECK(j["ideals"][4]["generator"] == nlohmann::json::parse("[[3,0],[3,1]]"));
  CHECK(j["ideals"][6]["label"] == "Rad");
  CHECK(j["gamma"] == nlohmann::json::parse("[[0,1],[3,0]]"));
}

TEST_CASE("permute json") {
  const Run r = run({"permute", "--p", "3", "--n", "1", "--omega", "1,1,0,1", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["mapping"]["S1(0)"] == "S1(1)");
  CHECK(j["mapping"]["S1(2)"] == "S1(0)");
  CHECK(j["mapping"]["S2(1)"] == "S2(1)");
  CHECK(j["cycles"][0] == nlohmann::json::parse(R"j(["S1(0)","S1(1)","S1(2)"])j"));
  CHECK(j["ell1"] == 3);
  CHECK(j["ell2"].is_null());
  CHECK(j["fixed_s1"] == 0);
  CHECK(j["fixed_s2"] == 3);
}

TEST_CASE("cycles") {
  const Run r = run({"cycles", "--p", "3", "--n", "1", "--omega", "2,0,0,1", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["ell1"] == 2);
  CHECK(j["ell2"] == 2);
  CHECK(j["ell_equal"] == true);
}

TEST_CASE("verify") {
  const std::vector<std::string> args = {"verify", "--p", "3", "--n", "1", "--trials", "200", "--seed", "42"};
  const Run r = run(args);
  CHECK(r.code == 0);
  CHECK(r.out.find("result\tPASS") != std::string::npos);
  CHECK(run(args).out == r.out);
  std::vector<std::string> serial = args;
  serial.push_back("--serial");
  CHECK(run(serial).out == r.out);
  const Run ex = run({"verify", "--p", "2", "--n", "1", "--trials", "10", "--exhaustive-mod", "3"});
  CHECK(ex.code == 0);
  CHECK(ex.out.find("kernel mod p^3") != std::string::npos);
}

TEST_CASE("tree") {
  const Run r = run({"tree", "--p", "3", "--n", "1", "--radius", "1", "--highlight", "all", "--format", "dot"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("graph bruhat_tits {", 0) == 0);
  CHECK(r.out.find("label=\"Rad\"") != std::string::npos);
  const Run s1 = run({"tree", "--p", "3", "--n", "1", "--radius", "1", "--highlight", "s1"});
  CHECK(s1.out.find("label=\"S2(0)\"") == std::string::npos);
  CHECK(s1.out.find("label=\"S1(0)\"") != std::string::npos);
}

TEST_CASE("scan") {
  const std::vector<std::string> args = {"scan", "--p-list", "2,3", "--n-list", "1,2", "--trials", "3", "--seed", "5"};
  const Run r = run(args);
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "p\tn\tomega\tcensus_size\tell1\tell2\tfixed_s1\tfixed_s2\tdiagrams_ok");
  std::size_t rows = 0;
  for (std::string line; std::getline(lines, line);) {
    ++rows;
    CHECK(line.find("\ttrue") != std::string::npos);
  }
  CHECK(rows == 12);
  CHECK(run(args).out == r.out);
  const Run one = run({"scan", "--p-list", "3", "--n-list", "1", "--omega", "1,1,0,1"});
  CHECK(one.out.find("3\t1\t1,1,0,1\t7\t3\tNA\t0\t3\ttrue") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"enumerate", "--p", "4", "--n", "1"}).code == 2);
  CHECK(run({"enumerate", "--p", "3", "--n", "0"}).code == 2);
  CHECK(run({"permute", "--p", "3", "--n", "1"}).code == 2);
  const Run bad_c = run({"permute", "--p", "3", "--n", "1", "--omega", "1,0,1,1"});
  CHECK(bad_c.code == 2);
  CHECK(bad_c.err.find("divisible") != std::string::npos);
  const Run bad_det = run({"permute", "--p", "3", "--n", "1", "--omega", "3,0,0,1"});
  CHECK(bad_det.code == 2);
  CHECK(bad_det.err.find("ad - bc") != std::string::npos);
  CHECK(run({"tree", "--p", "3", "--n", "1", "--format", "json"}).code == 2);
  CHECK(run({"enumerate", "--help"}).code == 0);
}
