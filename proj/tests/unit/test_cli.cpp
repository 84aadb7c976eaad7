// Copyright 2026 The abeljacobi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "abeljacobi/cli/cli.hpp"
#include "oracles.hpp"

using namespace abeljacobi;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json parsed(const Outcome& o) {
  REQUIRE(o.code == cli::kExitOk);
  return json::parse(o.out);
}

// Restores ABELJACOBI_BITS on scope exit.
class BitsEnv {
 public:
  explicit BitsEnv(const char* value) {
    if (const char* old = std::getenv("ABELJACOBI_BITS")) saved_ = old;
    if (value) {
      setenv("ABELJACOBI_BITS", value, 1);
    } else {
      unsetenv("ABELJACOBI_BITS");
    }
  }
  ~BitsEnv() {
    if (saved_) {
      setenv("ABELJACOBI_BITS", saved_->c_str(), 1);
    } else {
      unsetenv("ABELJACOBI_BITS");
    }
  }

 private:
  std::optional<std::string> saved_;
};

}  // namespace

TEST_CASE("torsionpoly for X11 at ell = 11") {
  const json j = parsed(call({"torsionpoly", "--curve", "0,-1,-1,0,0", "--ell", "11", "--method", "both"}));
  CHECK(j["equal"] == true);
  CHECK(j["degree"] == 60);
  REQUIRE(j["analytic"].size() == 61);
  CHECK(j["analytic"][59] == "-20");
  CHECK(j["analytic"][60] == "1");
  CHECK(j["analytic"] == j["algebraic"]);
}

TEST_CASE("torsionpoly methods") {
  const json a = parsed(call({"torsionpoly", "--curve", "0,-1,-1,0,0", "--ell", "5", "--method", "algebraic"}));
  CHECK(a["coefficients"].size() == 13);
  CHECK(a["coefficients"][11] == "-4");
  const json b = parsed(call({"torsionpoly", "--curve", "0,-1,-1,0,0", "--ell", "5", "--method", "analytic",
                              "--threads", "2"}));
  CHECK(b["coefficients"] == a["coefficients"]);
}

TEST_CASE("meta") {
  const Outcome o = call({"meta", "--ell", "11"});
  CHECK(o.code == cli::kExitOk);
  CHECK(o.out == "{\"index\":120,\"cusps\":10,\"genus\":1}\n");
  CHECK(call({"meta", "--ell", "6"}).code == cli::kExitUsage);
}

TEST_CASE("rsquares") {
  const json j = parsed(call({"rsquares", "--d", "12", "--n", "16", "--method", "all"}));
  CHECK(j["agree"] == true);
  CHECK(j["formula"] == j["series"]);
  CHECK(j["formula"] == j["bruteforce"]);
  std::vector<mpz_class> theta(17, 0);
  theta[0] = 1;
  for (int x = 1; x * x <= 16; ++x) theta[x * x] = 2;
  std::vector<mpz_class> power(17, 0);
  power[0] = 1;
  for (int k = 0; k < 12; ++k) power = oracles::series_mul(power, theta);
  CHECK(j["formula"] == power[16].get_str());
  const json f = parsed(call({"rsquares", "--d", "4", "--n", "5", "--method", "formula"}));
  CHECK(f["formula"] == "48");
  CHECK(call({"rsquares", "--d", "3", "--n", "5", "--method", "formula"}).code == cli::kExitUsage);
}

TEST_CASE("tau and tau-crt") {
  CHECK(parsed(call({"tau", "--n", "11"})).dump().find("534612") != std::string::npos);
  CHECK(parsed(call({"tau", "--n", "12", "--factorization", "2^2,3^1"})).dump().find("-370944") !=
        std::string::npos);
  CHECK(call({"tau", "--n", "12", "--factorization", "2^3"}).code == cli::kExitUsage);
  // tau(11) = 534612 modulo 2, 3, 5, 7, 13, 17, 19, 23.
  std::string residues;
  for (long m : {2L, 3L, 5L, 7L, 13L, 17L, 19L, 23L}) {
    if (!residues.empty()) residues += ",";
    residues += std::to_string(534612 % m) + ":" + std::to_string(m);
  }
  CHECK(parsed(call({"tau-crt", "--p", "11", "--residues", residues})).dump().find("534612") !=
        std::string::npos);
}

TEST_CASE("periods, log and invert") {
  const json p = parsed(call({"--bits", "128", "periods", "--curve", "0,-1,-1,0,0"}));
  CHECK(p["omega1"]["re"].get<std::string>().rfind("6.34604652139776710844397308", 0) == 0);
  const json l = parsed(call({"--bits", "128", "log", "--curve", "0,-1,-1,0,0", "--point", "0,0"}));
  CHECK(l.dump().find("2.53841860855910684337758923") != std::string::npos);
  for (const char* method : {"secant", "continuation", "linalg"}) {
    const json inv = parsed(call({"--bits", "128", "invert", "--curve", "0,-1,-1,0,0", "--alpha",
                                  "0.28845666006353486856563385,0.13261969244895411173917178", "--method", method}));
    INFO("method = ", method);
    CHECK(inv.contains("accuracy"));
    CHECK(inv["point"]["x"]["re"].get<std::string>().rfind("6.79", 0) == 0);
  }
}

TEST_CASE("help lists every flag") {
  const Outcome o = call({"--help-all"});
  CHECK(o.code == cli::kExitOk);
  for (const char* flag : {"--bits", "--curve", "--point", "--alpha", "--method", "--eps", "--steps", "--seed0",
                           "--seed1", "--iterations", "--ell", "--threads", "--n", "--factorization", "--p",
                           "--residues", "--d"}) {
    CHECK_MESSAGE(o.out.find(flag) != std::string::npos, flag);
  }
  for (const char* sub : {"periods", "log", "invert", "torsionpoly", "tau", "tau-crt", "rsquares", "meta"}) {
    CHECK(call({sub, "--help"}).code == cli::kExitOk);
  }
}

TEST_CASE("usage errors exit 2") {
  CHECK(call({}).code == cli::kExitUsage);
  CHECK(call({"meta", "--ell", "11", "--bogus"}).code == cli::kExitUsage);
  CHECK(call({"frobnicate"}).code == cli::kExitUsage);
  CHECK(call({"periods", "--curve", "0,0,0,0,0"}).code == cli::kExitUsage);
  CHECK(call({"log", "--curve", "0,-1,-1,0,0", "--point", "2,2"}).code == cli::kExitUsage);
  CHECK(call({"--bits", "20", "periods", "--curve", "0,-1,-1,0,0"}).code == cli::kExitUsage);
}

TEST_CASE("numerical failures exit 3 with a JSON error") {
  const Outcome o = call({"invert", "--curve", "0,-1,-1,0,0", "--alpha", "0,0", "--method", "secant"});
  CHECK(o.code == cli::kExitNumerical);
  const json j = json::parse(o.out);
  CHECK(j["error"] == "TargetIsOrigin");
  CHECK(j["stage"] == "inversion");
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"torsionpoly", "--curve", "0,-1,-1,0,0", "--ell", "7", "--method",
                                         "analytic", "--threads", "4"};
  const Outcome a = call(args);
  const Outcome b = call(args);
  CHECK(a.code == cli::kExitOk);
  CHECK(a.out == b.out);
  const std::vector<std::string> p = {"periods", "--curve", "1,-1,1,-4,3"};
  CHECK(call(p).out == call(p).out);
}

TEST_CASE("ABELJACOBI_BITS sets the default precision") {
  const std::vector<std::string> args = {"periods", "--curve", "0,-1,-1,0,0"};
  std::string at_default;
  {
    BitsEnv env(nullptr);
    at_default = call(args).out;
  }
  BitsEnv env("96");
  const std::string at_96 = call(args).out;
  CHECK(at_96 != at_default);
  CHECK(at_96.size() < at_default.size());
  std::vector<std::string> explicit_bits = args;
  explicit_bits.insert(explicit_bits.begin(), {"--bits", "96"});
  CHECK(call(explicit_bits).out == at_96);
  std::vector<std::string> override_bits = args;
  override_bits.insert(override_bits.begin(), {"--bits", "256"});
  CHECK(call(override_bits).out == at_default);
}
