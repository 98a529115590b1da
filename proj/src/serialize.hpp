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

#ifndef SCONC_SERIALIZE_HPP_
#define SCONC_SERIALIZE_HPP_

#include <memory>
#include <string>

#include "json.hpp"
#include "state.hpp"

namespace sconc {

using Json = nlohmann::json;

inline constexpr const char* kScenarioSchema = "sconc-scenario/1";
inline constexpr const char* kTraceSchema = "sconc-trace/1";

Json element_to_json(const GroupModel& g, const Element& e);
Element element_from_json(const GroupModel& g, const Json& j);

Json group_to_json(const GroupModel& g, const std::string& builtin = "");
GroupModel group_from_json(const Json& j);

Json context_to_json(const AmbientContext& ctx);
AmbientContext context_from_json(std::shared_ptr<const GroupModel> g, const Json& j);

Json state_to_json(const GroupModel& g, const LinkState& s);
LinkState state_from_json(const GroupModel& g, const Json& j);

std::string canonical_string(const GroupModel& g, const LinkState& s);
std::string sha256_hex(const std::string& data);
std::string state_hash(const GroupModel& g, const LinkState& s);

struct Scenario {
  std::string group_name;  // builtin name, empty for explicit tables
  AmbientContext ctx;
  LinkState state;
  Json script = Json::array();
};

Scenario scenario_from_json(const Json& j);
Json scenario_to_json(const Scenario& sc);
Scenario load_scenario(const std::string& path);
Json load_json(const std::string& path);

}  // namespace sconc

#endif  // SCONC_SERIALIZE_HPP_
