#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "shrinkca/cli.hpp"

using namespace shrinkca;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("shrink prints the (3,4) reference prefix") {
  auto r = invoke({"shrink", "--p1", "1011", "--s1", "100", "--p2", "11001", "--s2", "1000",
                   "--count", "13"});
  CHECK(r.status == 0);
  CHECK(r.out == "1010110110010\n");
  auto human = invoke({"shrink", "--p1", "1+x^2+x^3", "--s1", "100", "--p2", "1+x+x^4", "--s2",
                       "1000", "--count", "13"});
  CHECK(human.out == r.out);
}

TEST_CASE("lfsr") {
  auto r = invoke({"lfsr", "--poly", "11001", "--state", "1000", "--count", "15"});
  CHECK(r.status == 0);
  CHECK(r.out == "100010011010111\n");
  auto j = invoke({"lfsr", "--poly", "1+x^2+x^3", "--state", "100", "--count", "7", "--format",
                   "json"});
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["sequence"] == "1001110");
  CHECK(doc["poly"] == "1011");
}

TEST_CASE("linearize prints the (3,5) reference pair") {
  auto r = invoke({"linearize", "--l1", "3", "--p2", "111011"});
  CHECK(r.status == 0);
  CHECK(r.out == "01110011111111001110\n11111111100111111111\n");
  auto j = nlohmann::json::parse(invoke({"linearize", "--l1", "3", "--p2", "111011", "--format",
                                         "json"}).out);
  CHECK(j["base_poly"] == "101001");
  CHECK(j["p"] == 4);
  CHECK(j["L"] == 20);
  CHECK(j["N"] == 7);
  CHECK(j["rules_b"] == "11111111100111111111");
}

TEST_CASE("ca run prints the reference run") {
  auto r = invoke({"ca", "run", "--rules", "0111001110", "--state", "0001110110", "--steps", "5"});
  CHECK(r.status == 0);
  CHECK(r.out ==
        "0001110110\n0010010001\n0111101010\n1011101011\n0001101001\n0010101110\n");
}

TEST_CASE("ca charpoly") {
  auto r = invoke({"ca", "charpoly", "--rules", "01111"});
  CHECK(r.status == 0);
  CHECK(r.out == "101001\n");
}

TEST_CASE("bm from a flag and from a file") {
  auto r = invoke({"bm", "--seq", "100010011010111100010011010111"});
  CHECK(r.status == 0);
  CHECK(r.out == "poly 11001\nlc 4\n");

  auto path = std::filesystem::temp_directory_path() / "shrinkca_bm_test.txt";
  {
    std::ofstream f(path);
    f << "10001 00110 10111\n10001 00110 10111\n";
  }
  auto from_file = invoke({"bm", "--seq-file", path.string(), "--format", "json"});
  std::filesystem::remove(path);
  CHECK(from_file.status == 0);
  auto j = nlohmann::json::parse(from_file.out);
  CHECK(j["linear_complexity"] == 4);
  CHECK(j["connection_poly"] == "11001");

  CHECK(invoke({"bm"}).status == 2);
  CHECK(invoke({"bm", "--seq-file", "/nonexistent/shrinkca"}).status == 2);
}

TEST_CASE("attack exit status follows the verdict") {
  auto r = invoke({"attack", "--p1", "1011", "--s1", "100", "--p2", "111011", "--s2", "10000"});
  CHECK(r.status == 0);
  CHECK(r.out.find("verified period 124") != std::string::npos);
  auto j = nlohmann::json::parse(invoke({"attack", "--p1", "1011", "--s1", "100", "--p2", "11001",
                                         "--s2", "1000", "--format", "json"}).out);
  CHECK(j["verdict"] == true);
  CHECK(j["verified_period"] == 60);
  CHECK(j["linearization"]["L"] == 16);
}

TEST_CASE("usage and validation errors exit with 2") {
  CHECK(invoke({}).status == 2);
  CHECK(invoke({"frobnicate"}).status == 2);
  CHECK(invoke({"lfsr", "--poly", "1+y", "--state", "1", "--count", "3"}).status == 2);
  CHECK(invoke({"lfsr", "--poly", "11001", "--state", "1000"}).status == 2);  // --count required
  CHECK(invoke({"lfsr", "--poly", "11001", "--state", "100", "--count", "3"}).status == 2);
  CHECK(invoke({"shrink", "--p1", "11001", "--s1", "1000", "--p2", "11001", "--s2", "1000",
                "--count", "3"}).status == 2);
  CHECK(invoke({"ca", "run", "--rules", "011", "--state", "01", "--steps", "1"}).status == 2);
  CHECK(invoke({"ca", "run", "--rules", "012", "--state", "010", "--steps", "1"}).status == 2);
  CHECK(invoke({"linearize", "--l1", "2", "--p2", "11001"}).status == 2);
  CHECK(invoke({"linearize", "--l1", "3", "--p2", "111011", "--format", "xml"}).status == 2);
  auto r = invoke({"attack", "--p1", "1011", "--s1", "000", "--p2", "11001", "--s2", "1000"});
  CHECK(r.status == 2);
  CHECK(r.err.rfind("error: ", 0) == 0);
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
}

TEST_CASE("help exits cleanly") {
  auto r = invoke({"--help"});
  CHECK(r.status == 0);
  CHECK(r.out.find("attack") != std::string::npos);
}

TEST_CASE("printed values parse back through the flags") {
  auto poly = invoke({"ca", "charpoly", "--rules", "0111001110"}).out;
  poly.pop_back();
  auto lfsr = invoke({"lfsr", "--poly", poly, "--state", "1000000000", "--count", "40"});
  CHECK(lfsr.status == 0);
  auto seq = lfsr.out.substr(0, lfsr.out.size() - 1);
  auto bm = invoke({"bm", "--seq", seq});
  CHECK(bm.status == 0);

  auto pair = invoke({"linearize", "--l1", "3", "--p2", "111011"}).out;
  auto first = pair.substr(0, pair.find('\n'));
  auto charpoly = invoke({"ca", "charpoly", "--rules", first});
  CHECK(charpoly.out == "100000001000000000001\n");  // (1+x^2+x^5)^4
}

TEST_CASE("run_command works on a prepared request") {
  cli::CommandRequest req;
  req.subcommand = "ca charpoly";
  req.rules = RuleVector::parse("11110");
  std::ostringstream out, err;
  CHECK(cli::run_command(req, out, err) == 0);
  CHECK(out.str() == "101001\n");

  cli::CommandRequest missing;
  missing.subcommand = "lfsr";
  std::ostringstream out2, err2;
  CHECK(cli::run_command(missing, out2, err2) == 2);
  CHECK(err2.str().rfind("error: missing --", 0) == 0);
}

TEST_CASE("output is deterministic") {
  std::vector<std::string> args{"attack", "--p1", "1101", "--s1", "011", "--p2", "11001",
                                "--s2", "0110", "--format", "json"};
  CHECK(invoke(args).out == invoke(args).out);
}
