// Copyright 2026 The sconc Authors
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

#include <gtest/gtest.h>

#include <chrono>
#include <fstream>
#include <sstream>

#include "diagoracle.hpp"
#include "error.hpp"
#include "support.hpp"

namespace sconc::diag {
namespace {

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct GoldenCase {
  std::string name;
  Params params;
};

std::vector<GoldenCase> golden_cases() {
  std::vector<GoldenCase> out{{"hopf", {}}, {"unlink", {}}};
  for (int k : {-1, 0, 2, 3}) out.push_back({"torus-link", {{"k", k}}});
  for (int k : {0, 1, 2}) out.push_back({"meridians-with-twist", {{"k", k}, {"m", 2}}});
  out.push_back({"meridians-with-twist", {{"k", 1}, {"m", 3}}});
  for (int n : {0, 1, 2}) out.push_back({"band-belt", {{"n", n}}});
  for (int j : {0, 1}) out.push_back({"band-sum", {{"joined", j}, {"p", 1}, {"q", 1}}});
  out.push_back({"band-sum", {{"joined", 1}, {"p", 1}, {"q", 0}}});
  for (int v : {0, 1, 2})
    for (int a : {0, 1}) out.push_back({"clasp", {{"after", a}, {"variant", v}}});
  return out;
}

TEST(Scenes, MatchGoldenFiles) {
  for (const auto& c : golden_cases()) {
    const std::string key = scene_key(c.name, c.params);
    const std::string want = read(sconc::testing::source_dir() + "/tests/golden/" + key + ".txt");
    ASSERT_FALSE(want.empty()) << key;
    EXPECT_EQ(encode(scene(c.name, c.params)), want) << key;
  }
}

TEST(Scenes, AreWellFormedAndRoundTrip) {
  for (const auto& c : golden_cases()) {
    const Diagram d = scene(c.name, c.params);
    EXPECT_TRUE(check(d).empty()) << scene_key(c.name, c.params);
    EXPECT_EQ(encode(decode(encode(d))), encode(d));
  }
}

TEST(Scenes, KnownLinkingNumbers) {
  EXPECT_EQ(std::abs(lk_diagram(scene("hopf"), "A", "B").value), 1);
  EXPECT_EQ(lk_diagram(scene("unlink"), "A", "B").value, 0);
  for (int k = -3; k <= 4; ++k) {
    EXPECT_EQ(std::abs(lk_diagram(scene("torus-link", {{"k", k}}), "A", "B").value), std::abs(k));
    const Diagram d = scene("meridians-with-twist", {{"k", k}, {"m", 2}});
    EXPECT_EQ(std::abs(lk_diagram(d, "C1", "C2").value), std::abs(k));
    EXPECT_EQ(std::abs(lk_diagram(d, "A", "C1").value), 1);
  }
}

TEST(Scenes, LinkingIgnoresBasepoint) {
  const Diagram d = scene("torus-link", {{"k", 3}});
  for (int r = -2; r <= 5; ++r)
    EXPECT_EQ(lk_diagram(rotate_component(d, "A", r), "A", "B").value, lk_diagram(d, "A", "B").value);
}

TEST(Scenes, Errors) {
  EXPECT_THROW(scene("nope"), Error);
  EXPECT_THROW(scene("band-belt", {{"n", 99}}), Error);
  EXPECT_THROW(lk_diagram(scene("hopf"), "A", "A"), Error);
  EXPECT_THROW(lk_diagram(scene("hopf"), "A", "Z"), Error);
  EXPECT_THROW(decode("A: (1,sideways,+1)"), Error);
  EXPECT_THROW(decode("A: (1,over,+1)\nB: (1,under,-1)"), Error);
  EXPECT_FALSE(check(decode("A: (1,over,+1)")).empty());
}

TEST(Crosscheck, EveryRuleAgreesWithOracle) {
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& r : crosscheck_all()) {
    EXPECT_GT(r.cases, 0) << r.rule;
    EXPECT_TRUE(r.mismatches.empty()) << r.rule << ": " << r.mismatches.front();
  }
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 10.0);
  EXPECT_THROW(crosscheck("nope"), Error);
}

TEST(Crosscheck, TwistFlipsLinkingExactlyForOddK) {
  for (int k = 0; k <= 4; ++k)
    for (int m : {2, 3}) {
      const Diagram d = scene("meridians-with-twist", {{"k", k}, {"m", m}});
      EXPECT_EQ(lk_diagram(d, "C1", "C2").bit, k % 2);
    }
}

}  // namespace
}  // namespace sconc::diag
