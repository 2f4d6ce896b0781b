/*
 * Copyright 2026 The zpfaff Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "zpfaff/cli.hpp"

using zpfaff::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "zpfaff");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("zmeasure rows") {
    const Result r = call({"zmeasure", "--z", "1,0", "--theta", "0.5", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "lambda,probability\n(2),0.8888888888888887\n\"(1,1)\",0.1111111111111111\n");
  }

  TEST_CASE("kernel matrix at a degenerate z") {
    const Result r = call({"kernel", "matrix", "--z", "0.5,0", "--x", "1.0", "--y", "1.0"});
    CHECK(r.code == 0);
    CHECK(r.out == "x,y,s,s_y,s_x,s_xy,error\n1,1,0,0,0,0,0\n");
  }

  TEST_CASE("json output") {
    const Result r = call({"pairings", "list", "--n", "2", "--t", "1", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["command"] == "pairings list");
    CHECK(doc["rows"].size() == 3);
    CHECK(doc["rows"][0]["cycles"] == 2);
  }

  TEST_CASE("exit codes") {
    const Result bad = call({"zmeasure", "--bogus"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("Usage") != std::string::npos);
    CHECK(call({}).code == 2);
    CHECK(call({"zmeasure", "--z", "0,0", "--n", "2"}).code == 2);
    CHECK(call({"zmeasure", "--z", "1,x", "--n", "2"}).code == 2);
    CHECK(call({"whittaker", "--k", "0", "--m", "0.5", "--x", "0"}).code == 2);
    CHECK(call({"whittaker", "--k", "-4", "--m", "3", "--x", "2", "--method", "asymptotic"}).code == 3);
    CHECK(call({"kernel", "S", "--z", "5,0", "--x", "1", "--y", "2"}).code == 2);
    CHECK(call({"zmeasure", "--help"}).code == 0);
  }

  TEST_CASE("inconclusive limit report exits with 3") {
    const Result r = call({"verify-limit", "--z", "0.5,0", "--u", "1.0", "--xi", "0.8", "--nmax", "20"});
    CHECK(r.code == 3);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["inconclusive"] == true);
  }

  TEST_CASE("writes to --out") {
    const std::string path = "cli_test_out.csv";
    const Result r = call({"gelfand", "coset-type", "--g", "(135)(67)(248)", "--n", "4", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == "g,coset_type\n(1 3 5)(2 4 8)(6 7),\"(3,1)\"\n");
    std::remove(path.c_str());
  }

  TEST_CASE("output does not depend on the worker count") {
    const std::vector<std::string> args = {"lattice-corr", "--z", "0.3,0.4", "--xi", "0.7",
                                           "--x", "5/2,9/2", "--nmax", "30"};
    setenv("ZPFAFF_WORKERS", "1", 1);
    const Result a = call(args);
    setenv("ZPFAFF_WORKERS", "5", 1);
    const Result b = call(args);
    setenv("ZPFAFF_WORKERS", "0", 1);
    const Result bad = call(args);
    unsetenv("ZPFAFF_WORKERS");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(bad.code == 2);
  }

  TEST_CASE("argument parsing helpers") {
    CHECK(zpfaff::cli::parse_complex("0.3,-0.4") == std::complex<double>(0.3, -0.4));
    CHECK(zpfaff::cli::parse_complex("2") == std::complex<double>(2.0, 0.0));
    CHECK(zpfaff::cli::parse_grid("0:1:5").size() == 5);
    CHECK(zpfaff::cli::parse_grid("0:1:5")[4] == 1.0);
    CHECK(zpfaff::cli::parse_grid("1,2.5").at(1) == 2.5);
    CHECK(zpfaff::cli::format_double(0.1) == "0.1");
    CHECK(zpfaff::cli::format_double(-0.0) == "0");
  }

  TEST_CASE("every subcommand runs") {
    CHECK(call({"partitions", "--n", "4"}).code == 0);
    CHECK(call({"mixed", "--z", "0.5", "--xi", "0.5", "--nmax", "3"}).code == 0);
    CHECK(call({"mixed", "--z", "0.5", "--xi", "0.5", "--lambda", "(2,1);(3)"}).code == 0);
    CHECK(call({"pairings", "act", "--x", "{{1,-2},{-1,2}}", "--g", "(1 -1)"}).code == 0);
    CHECK(call({"pairings", "project", "--x", "{{-2,1},{2,-1}}"}).out == "x,projection\n\"{{-2,1},{-1,2}}\",\"{{-1,1}}\"\n");
    CHECK(call({"gelfand", "zonal", "--lambda", "(1,1)", "--g", "(23)"}).out.find("-1/2") != std::string::npos);
    CHECK(call({"gelfand", "restriction", "--z", "1,1", "--n", "2", "--g", "(23)"}).code == 0);
    CHECK(call({"gelfand", "character", "--mu", "(3,1)", "--class", "(1,1,1,1)"}).out == "mu,class,value\n\"(3,1)\",\"(1,1,1,1)\",3\n");
    CHECK(call({"gelfand", "extreme", "--alpha", "0.5", "--rho", "(2,2)"}).out == "rho,value\n\"(2,2)\",0.0625\n");
    CHECK(call({"whittaker", "--k", "0.3", "--m", "0,0.8", "--x", "0.5:2:4"}).code == 0);
    CHECK(call({"kernel", "w", "--z", "0.3,0.4", "--a", "-0.5", "--x", "2"}).out.find("0.23089959899") != std::string::npos);
    CHECK(call({"kernel", "scalar", "--z", "0.3,0.4", "--x", "0.7", "--y", "1.9"}).code == 0);
    CHECK(call({"kernel", "S", "--z", "0.3,0.4", "--x", "1", "--y", "2", "--printed"}).code == 0);
    CHECK(call({"corr", "--z", "0.3,0.4", "--points", "0.6,1.4"}).code == 0);
  }
}
