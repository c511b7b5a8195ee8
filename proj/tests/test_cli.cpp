#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <json.hpp>

#include "cli_runner.hpp"

using namespace testsupport;
using Json = nlohmann::json;

namespace {

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

const std::string kSquares = data_file("squares_f3.eq");

}  // namespace

TEST_CASE("bound") {
  const auto a = run_cli("bound --q 2 --r 2 --k 9 --d 0 --n 100 --format json");
  REQUIRE(a.exit_code == 0);
  const Json j = Json::parse(a.out);
  CHECK(j.at("epsilon") == "1/36");
  CHECK(j.at("applicable") == true);
  for (const auto& [name, flag] : j.at("flags").items()) CHECK(flag == true);

  const auto b = run_cli("bound --q 2 --r 2 --k 8 --d 0 --n 100");
  CHECK(b.exit_code == 0);
  CHECK(contains(b.out, "inapplicable"));

  const auto c = run_cli("bound --q 1 --r 2 --k 9 --d 0 --n 100 2>&1");
  CHECK(c.exit_code == 2);
  CHECK(contains(c.out, "q must be a prime power >= 2"));

  CHECK(run_cli("bound --q 6 --r 2 --k 9 --d 0 --n 1 2>/dev/null").exit_code == 2);
  CHECK(run_cli("bound --q 2 --r 2 --k 9 --d 0 2>/dev/null").exit_code == 2);
  CHECK(run_cli("bound --q 2 --r 2 --k 9 --d 0 --n 5:3 2>/dev/null").exit_code == 2);

  const auto sweep = run_cli("bound --q 2 --r 1 --k 3 --d 0 --n 1:4 --format csv");
  CHECK(sweep.exit_code == 0);
  CHECK(std::count(sweep.out.begin(), sweep.out.end(), '\n') == 5);
}

TEST_CASE("count") {
  const auto a = run_cli("count --q 2 --n 10 --d 2");
  CHECK(a.exit_code == 0);
  CHECK(contains(a.out, "exact=56"));
  const auto b = run_cli("count --q 2 --n 10 --epsilon 0.25 --format json");
  REQUIRE(b.exit_code == 0);
  const Json j = Json::parse(b.out);
  CHECK(j.at("exact") == "56");
  CHECK(j.at("hoeffding").get<double>() == doctest::Approx(749.2).epsilon(1e-3));
  CHECK(j.at("ratio").get<double>() == doctest::Approx(56 / 749.18).epsilon(1e-3));
  CHECK(contains(run_cli("count --q 2 --n 0 --d 0").out, "exact=1"));
  CHECK(run_cli("count --q 2 --n 10 2>/dev/null").exit_code == 2);
  CHECK(run_cli("count --q 2 --n 10 --d 1 --epsilon 0.1 2>/dev/null").exit_code == 2);
  CHECK(run_cli("count --q 2 --n 10 --epsilon 0.7 2>/dev/null").exit_code == 2);
  CHECK(run_cli("count --q 2 --n x:y --d 1 2>/dev/null").exit_code == 2);
  const auto sweep = run_cli("count --q 3 --n 1:6 --epsilon 1/10 --format csv");
  CHECK(sweep.exit_code == 0);
  CHECK(sweep.out.rfind("q,n,d,epsilon,exact,hoeffding,ratio\n", 0) == 0);
  CHECK(std::count(sweep.out.begin(), sweep.out.end(), '\n') == 7);
}

TEST_CASE("cover") {
  const auto a = run_cli("cover --q 3 --n 1 --r 2 --k 3 --a '1;1;1' --format json");
  REQUIRE(a.exit_code == 0);
  const Json j = Json::parse(a.out);
  CHECK(j.at("verification").at("verdict") == "pass");
  CHECK(j.at("verification").at("mode") == "exhaustive");
  CHECK(j.at("verification").at("points_checked") == 27);
  CHECK(j.at("size").get<int>() <= 6);
  CHECK(j.at("size_bound") == "6");

  const auto zero = run_cli("cover --q 3 --n 1 --r 1 --a '0;0' --format json 2>/dev/null");
  REQUIRE(zero.exit_code == 0);
  CHECK(Json::parse(zero.out).at("size") == 1);

  const auto big = run_cli("cover --q 3 --n 5 --r 2 --k 9 --a '1;1;1;1;1;1;1;1;1' 2>&1");
  CHECK(big.exit_code == 3);
  CHECK(contains(big.out, "3^45"));

  CHECK(run_cli("cover --q 3 --n 1 --r 2 --k 4 --a '1;1;1' 2>/dev/null").exit_code == 2);
  CHECK(run_cli("cover --q 3 --n 1 --r 2 --a '1;1' 2>/dev/null").exit_code == 2);
  CHECK(run_cli("cover --q 4 --n 1 --r 2 --a '1;1' --modulus 1,0,1 2>/dev/null").exit_code == 2);
  CHECK(run_cli("cover --eq " + kSquares + " --n 1 --format csv").exit_code == 0);

  const auto sampled = run_cli("cover --q 3 --n 3 --r 2 --a '1;1;1' --format csv", "SLICELAB_BUDGET=5000");
  CHECK(sampled.exit_code == 0);
  CHECK(contains(sampled.out, "sampled,1000,pass"));
  CHECK(run_cli("cover --q 3 --n 3 --r 2 --a '1;1;1' 2>/dev/null", "SLICELAB_BUDGET=500").exit_code == 3);
}

TEST_CASE("cover certificates re-verify from JSON") {
  const std::string path = "cli_test_certificate.json";
  {
    std::ofstream out(path);
    out << run_cli("cover --q 4 --n 2 --r 2 --a '1;1' --format json").out;
  }
  const auto ok = run_cli("cover --check " + path);
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.out, "pass"));

  Json j;
  {
    std::ifstream in(path);
    j = Json::parse(in);
  }
  j["indicator"]["terms"].push_back(Json::array({Json::array({1, 1, 1, 1}), 1}));
  {
    std::ofstream out(path);
    out << j.dump();
  }
  const auto bad = run_cli("cover --check " + path);
  CHECK(bad.exit_code == 1);
  CHECK(contains(bad.out, "fail"));
  {
    std::ofstream out(path);
    out << "{not json";
  }
  CHECK(run_cli("cover --check " + path + " 2>/dev/null").exit_code == 2);
  std::remove(path.c_str());
}

TEST_CASE("verify") {
  const auto a = run_cli("verify --set " + data_file("set_01.txt") + " --eq " + kSquares);
  CHECK(a.exit_code == 0);
  CHECK(a.out.rfind("free", 0) == 0);
  const auto b = run_cli("verify --set " + data_file("set_12.txt") + " --eq " + kSquares);
  CHECK(b.exit_code == 0);
  CHECK(contains(b.out, "witness (1,1,2)"));
  const auto c = run_cli("verify --set " + data_file("set_12.txt") + " --eq " + kSquares +
                         " --format json");
  CHECK(Json::parse(c.out).at("witness") == Json::array({"1", "1", "2"}));
  CHECK(run_cli("verify --set /nonexistent --eq " + kSquares + " 2>/dev/null").exit_code == 2);
  CHECK(run_cli("verify --set " + kSquares + " --eq " + kSquares + " 2>/dev/null").exit_code == 2);
  CHECK(run_cli("verify --set " + data_file("set_01.txt") + " --eq " + kSquares + " 2>/dev/null",
                "SLICELAB_BUDGET=4")
            .exit_code == 3);
}

TEST_CASE("search") {
  const auto a = run_cli("search --q 3 --n 1 --eq " + kSquares + " --mode exhaustive");
  CHECK(a.exit_code == 0);
  CHECK(a.out == "max=2, witness {0,1}\n");
  const auto b = run_cli("search --n 1 --eq " + data_file("sum4_f2.eq"));
  CHECK(contains(b.out, "max=1"));
  const auto g = run_cli("search --n 2 --eq " + kSquares + " --mode greedy --seed 3 --format json");
  REQUIRE(g.exit_code == 0);
  CHECK(Json::parse(g.out).at("seed") == 3);
  CHECK(run_cli("search --q 5 --n 1 --eq " + kSquares + " 2>/dev/null").exit_code == 2);
  CHECK(run_cli("search --n 1 --eq " + kSquares + " --mode other 2>/dev/null").exit_code == 2);
  CHECK(run_cli("search --n 3 --eq " + kSquares + " 2>/dev/null").exit_code == 3);
}

TEST_CASE("usage errors") {
  CHECK(run_cli("2>/dev/null").exit_code == 2);
  CHECK(run_cli("frobnicate 2>/dev/null").exit_code == 2);
  CHECK(run_cli("count --q 2 --n 3 --d 1 --format xml 2>/dev/null").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}
