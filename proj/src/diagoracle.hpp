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

#ifndef SCONC_DIAGORACLE_HPP_
#define SCONC_DIAGORACLE_HPP_

#include <array>
#include <map>
#include <string>
#include <vector>

namespace sconc::diag {

struct Visit {
  int crossing = 0;
  bool over = false;
  friend bool operator==(const Visit&, const Visit&) = default;
};

struct Component {
  std::string name;
  std::vector<Visit> visits;  // circular
  friend bool operator==(const Component&, const Component&) = default;
};

// Multi-component Gauss code with signed crossings. Virtual crossings are
// allowed: only signs and component incidence are consumed.
struct Diagram {
  std::vector<Component> components;
  std::map<int, int> signs;  // crossing id -> +1 or -1
  friend bool operator==(const Diagram&, const Diagram&) = default;

  int index_of(const std::string& name) const;
};

// Empty when every crossing is visited exactly once over and once under.
std::vector<std::string> check(const Diagram& d);

struct Linking {
  int value = 0;
  int bit = 0;
};
Linking lk_diagram(const Diagram& d, const std::string& a, const std::string& b);

Diagram rotate_component(const Diagram& d, const std::string& name, int k);

using Point = std::array<double, 3>;
using Polyline = std::vector<Point>;  // closed; last point joins the first
struct Scene3 {
  std::vector<std::pair<std::string, Polyline>> components;
};
// Projects along a fixed generic direction and records every crossing.
Diagram project(const Scene3& s);

using Params = std::map<std::string, int>;
std::vector<std::string> scene_names();
Diagram scene(const std::string& name, const Params& p = {});
std::string scene_key(const std::string& name, const Params& p);

// Text codec: one line per component, "name: (id,over|under,+1|-1) ...".
std::string encode(const Diagram& d);
Diagram decode(const std::string& text);

struct CrosscheckReport {
  std::string rule;
  int cases = 0;
  std::vector<std::string> mismatches;
  std::vector<std::string> log;
};
std::vector<std::string> rule_names();
CrosscheckReport crosscheck(const std::string& rule);
std::vector<CrosscheckReport> crosscheck_all();

}  // namespace sconc::diag

#endif  // SCONC_DIAGORACLE_HPP_
