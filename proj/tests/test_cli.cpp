// Copyright 2026 The wronsk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "../tools/cli.hpp"
#include "wronsk/parser.hpp"
#include "wronsk/rational_function.hpp"
#include "wronsk/wronskian.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = wronsk::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected = wronsk::cli::kExitOk) {
  args.push_back("--json");
  const Outcome o = run(std::move(args));
  CHECK(o.code == expected);
  CHECK(o.err.empty());
  return json::parse(o.out);
}

}  // namespace

TEST_CASE("wronskian prints the canonical rendering") {
  const Outcome o = run({"wronskian", "t^2+t", "2t^2", "t-2"});
  CHECK(o.code == wronsk::cli::kExitOk);
  CHECK(o.out == "-8\n");
  CHECK(o.err.empty());
  CHECK(run({"wronskian", "t", "t^2"}).out == "t^2\n");
  CHECK(run({"wronskian", "--", "-t", "t^-1"}).code == wronsk::cli::kExitOk);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == wronsk::cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == wronsk::cli::kExitUsage);
  CHECK(run({"wronskian", "t^"}).code == wronsk::cli::kExitUsage);
  CHECK(run({"wronskian", "1/0"}).code == wronsk::cli::kExitUsage);
  CHECK(run({"geometry", "rnc", "t^-1; t"}).code == wronsk::cli::kExitUsage);
  CHECK(run({"geometry", "rnc", "t"}).code == wronsk::cli::kExitUsage);
  CHECK(run({"rational", "search", "--n", "2"}).code == wronsk::cli::kExitUsage);

  CHECK(run({"characterize", "t^3", "t^3+t^2", "t^2-2"}).code == wronsk::cli::kExitNegative);
  CHECK(run({"reduce", "t", "2t"}).code == wronsk::cli::kExitNegative);
  CHECK(run({"geometry", "hyperplane", "t; t^2"}).code == wronsk::cli::kExitNegative);
  CHECK(run({"geometry", "rnc", "t^3; t^3+t^2; t^2-2"}).code == wronsk::cli::kExitNegative);
  CHECK(run({"rational", "check2", "1/t", "2/t"}).code == wronsk::cli::kExitNegative);

  const Outcome bad = run({"frobnicate"});
  CHECK(bad.out.empty());
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("characterize") {
  const Outcome text = run({"characterize", "t^3", "t^3+t^2", "t^2-2"});
  CHECK(text.out == "non-constant: 12t^2\n");
  const json j = run_json({"characterize", "t^2+t", "2t^2", "t-2"});
  CHECK(j["constant"] == true);
  CHECK(j["value"] == "-8");
  CHECK(j["det_A"] == "-4");
  CHECK(j["r"] == json::array({0, 1, 2}));
  CHECK(j["A"][2] == json::array({"-2", "1", "0"}));
}

TEST_CASE("classify and reduce") {
  const json c = run_json({"classify", "t", "t^2-t", "t^2+1"});
  CHECK(c["class"] == "nonzero-constant");
  CHECK(c["value"] == "2");
  const json r = run_json({"reduce", "--both", "t^2", "t^2+t", "1"});
  CHECK(r["max"]["degrees"] == json::array({2, 1, 0}));
  CHECK(r["min"]["reduced"] == json::array({"t^2", "t", "1"}));
  CHECK(r["max"]["sign"] == 1);
}

TEST_CASE("geometry") {
  const Outcome h = run({"geometry", "hyperplane", "t^3; t^3+t^2; t^2-2"});
  CHECK(h.out.find("x1 - x2 + x3 + 2 = 0") != std::string::npos);
  const json hj = run_json({"geometry", "hyperplane", "t^3; t^3+t^2; t^2-2"});
  CHECK(hj["hyperplane"]["alpha"] == json::array({"1", "-1", "1"}));
  CHECK(hj["hyperplane"]["c"] == "-2");

  const json rnc = run_json({"geometry", "rnc", "t+1; t^2+t"});
  CHECK(rnc["rnc"] == true);
  CHECK(rnc["M"] == json::parse(R"([["1","0"],["1","1"]])"));
  CHECK(rnc["b"] == json::array({"1", "0"}));

  const json inv = run_json({"geometry", "invariant", "t; t^3"});
  CHECK(inv["numerator"] == "6t");
  CHECK(inv["rational_roots"] == json::array({"0"}));
  CHECK(inv["real_root_count"] == 1);
}

TEST_CASE("rational check2 and search") {
  const json v = run_json({"rational", "check2", "1/t", "1/(t-1)"});
  CHECK(v["is_constant"] == false);
  CHECK(v["K"] == 1);
  CHECK(v["observed_orders"] == json::array({2, 2}));
  CHECK(wronsk::parse_rational(v["result"].get<std::string>()) ==
        wronsk::RationalFunction(wronsk::LaurentPoly(wronsk::Rational(-1)),
                                 {wronsk::Pole{wronsk::Rational(0), 2}, wronsk::Pole{wronsk::Rational(1), 2}}));

  const std::vector<std::string> search{"rational", "search", "--n", "3", "--trials", "40", "--seed", "5"};
  auto one = search, four = search;
  one.insert(one.end(), {"--threads", "1"});
  four.insert(four.end(), {"--threads", "4"});
  const json a = run_json(one), b = run_json(four);
  CHECK(a == b);
  CHECK(a["trials"] == 40);
  CHECK(a["counterexamples"].empty());
  CHECK(a["class_counts"].size() == 3);
}

TEST_CASE("file input and output") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto in = dir / "wronsk_cli_input.json";
  const auto out = dir / "wronsk_cli_report.json";
  {
    std::ofstream f(in);
    f << R"({"functions": ["t^2+t", "2t^2", "t-2"]})";
  }
  CHECK(run({"wronskian", "--from-json", in.string()}).out == "-8\n");
  CHECK(run({"wronskian", "--from-json", (dir / "wronsk_missing.json").string()}).code == wronsk::cli::kExitUsage);

  const Outcome s =
      run({"rational", "search", "--n", "3", "--trials", "10", "--seed", "2", "--out", out.string()});
  CHECK(s.code == wronsk::cli::kExitOk);
  std::ifstream report(out);
  const json j = json::parse(report);
  CHECK(j["seed"] == 2);
  CHECK(j["n"] == 3);
  std::filesystem::remove(in);
  std::filesystem::remove(out);
}

TEST_CASE("JSON renderings parse back") {
  const json w = run_json({"wronskian", "t^-2", "t^3", "1/2*t"});
  const std::string result = w["result"].get<std::string>();
  const wronsk::LaurentPoly f0 = wronsk::parse_laurent("t^-2"), f1 = wronsk::parse_laurent("t^3"),
                            f2 = wronsk::parse_laurent("1/2*t");
  const std::vector<wronsk::LaurentPoly> fs{f0, f1, f2};
  CHECK(wronsk::parse_laurent(result) == wronsk::wronskian(fs));
}
