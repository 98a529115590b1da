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

#include "serialize.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "catalog.hpp"
#include "error.hpp"

namespace sconc {

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { fail(ErrorCode::kParse, msg); }

const Json& need(const Json& j, const char* k) {
  if (!j.is_object() || !j.contains(k)) parse_fail(std::string("missing field '") + k + "'");
  return j.at(k);
}

template <typename T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const Json::exception& e) {
    parse_fail(std::string("bad ") + what + ": " + e.what());
  }
}

Json subspace_to_json(const F2Subspace& s) {
  Json out = Json::array();
  for (const auto& v : s.generators()) out.push_back(v.bits());
  return out;
}

F2Subspace subspace_from_json(std::size_t dim, const Json& j, const char* what) {
  if (!j.is_array()) parse_fail(std::string(what) + " must be a list of bit vectors");
  F2Subspace s(dim);
  for (const auto& row : j) {
    auto bits = get_as<std::vector<int>>(row, what);
    if (bits.size() != dim)
      fail(ErrorCode::kInvalidArgument, std::string(what) + ": vector length " + std::to_string(bits.size()) +
                                            " does not match dimension " + std::to_string(dim));
    for (int b : bits) if (b != 0 && b != 1) parse_fail(std::string(what) + ": entries must be 0 or 1");
    s.add(F2Vec::from_bits(bits));
  }
  return s;
}

const char* dual_name(DualSphere d) {
  switch (d) {
    case DualSphere::kFramed: return "framed";
    case DualSphere::kUnframed: return "unframed";
    default: return "none";
  }
}

}  // namespace

Json element_to_json(const GroupModel& g, const Element& e) {
  if (g.is_finite()) return e.at(0);
  return e;
}

Element element_from_json(const GroupModel& g, const Json& j) {
  Element e;
  if (j.is_number_integer()) e = {j.get<int64_t>()};
  else e = get_as<Element>(j, "element");
  return g.normalize(e);
}

Json group_to_json(const GroupModel& g, const std::string& builtin) {
  if (!builtin.empty()) return Json{{"builtin", builtin}};
  const GroupSpec& s = g.spec();
  Json j;
  if (s.kind == GroupSpec::Kind::kFinite) {
    j["kind"] = "finite";
    j["table"] = s.table;
    Json gens = Json::array();
    for (const auto& x : s.generators) gens.push_back(x.at(0));
    j["generators"] = gens;
  } else {
    j["kind"] = "abelian";
    j["rank"] = s.rank;
    j["torsion"] = s.torsion;
    j["generators"] = s.generators;
  }
  if (!s.generator_names.empty()) j["names"] = s.generator_names;
  return j;
}

GroupModel group_from_json(const Json& j) {
  if (j.is_object() && j.contains("builtin")) {
    const auto name = get_as<std::string>(j.at("builtin"), "builtin");
    if (!has_named_group(name)) fail(ErrorCode::kInvalidArgument, "unknown builtin group '" + name + "'");
    return named_group(name);
  }
  GroupSpec s;
  const auto kind = get_as<std::string>(need(j, "kind"), "group kind");
  if (kind == "finite") {
    s.kind = GroupSpec::Kind::kFinite;
    s.table = get_as<std::vector<std::vector<int>>>(need(j, "table"), "table");
    for (const auto& x : need(j, "generators")) {
      if (x.is_number_integer()) s.generators.push_back({x.get<int64_t>()});
      else s.generators.push_back(get_as<Element>(x, "generator"));
    }
  } else if (kind == "abelian") {
    s.kind = GroupSpec::Kind::kAbelian;
    s.rank = get_as<int>(need(j, "rank"), "rank");
    s.torsion = j.contains("torsion") ? get_as<std::vector<int64_t>>(j.at("torsion"), "torsion") : std::vector<int64_t>{};
    s.generators = get_as<std::vector<Element>>(need(j, "generators"), "generators");
  } else {
    parse_fail("group kind must be 'finite' or 'abelian'");
  }
  if (j.contains("names")) s.generator_names = get_as<std::vector<std::string>>(j.at("names"), "names");
  return GroupModel::build(s);
}

Json context_to_json(const AmbientContext& ctx) {
  return Json{{"s_characteristic", ctx.s_characteristic},
              {"dual_sphere", dual_name(ctx.dual_sphere)},
              {"based", ctx.based},
              {"mu_pi3", subspace_to_json(ctx.mu_pi3)},
              {"mu_pi3_zero", ctx.mu_pi3_zero},
              {"delta_self", subspace_to_json(ctx.delta_self)},
              {"boundary_note", ctx.boundary_note}};
}

AmbientContext context_from_json(std::shared_ptr<const GroupModel> g, const Json& j) {
  AmbientContext ctx = AmbientContext::make(g);
  if (j.is_null()) return ctx;
  if (!j.is_object()) parse_fail("context must be an object");
  if (j.contains("s_characteristic")) ctx.s_characteristic = get_as<bool>(j.at("s_characteristic"), "s_characteristic");
  if (j.contains("based")) ctx.based = get_as<bool>(j.at("based"), "based");
  if (j.contains("mu_pi3_zero")) ctx.mu_pi3_zero = get_as<bool>(j.at("mu_pi3_zero"), "mu_pi3_zero");
  if (j.contains("boundary_note")) ctx.boundary_note = get_as<std::string>(j.at("boundary_note"), "boundary_note");
  if (j.contains("dual_sphere")) {
    const auto d = get_as<std::string>(j.at("dual_sphere"), "dual_sphere");
    if (d == "none") ctx.dual_sphere = DualSphere::kNone;
    else if (d == "framed") ctx.dual_sphere = DualSphere::kFramed;
    else if (d == "unframed") ctx.dual_sphere = DualSphere::kUnframed;
    else parse_fail("dual_sphere must be none, framed or unframed");
  }
  if (j.contains("mu_pi3")) ctx.mu_pi3 = subspace_from_json(g->two_torsion().size(), j.at("mu_pi3"), "mu_pi3");
  if (j.contains("delta_self")) ctx.delta_self = subspace_from_json(g->h1_dim(), j.at("delta_self"), "delta_self");
  if (ctx.mu_pi3_zero && ctx.mu_pi3.rank() != 0)
    fail(ErrorCode::kInvalidArgument, "mu_pi3_zero asserted but mu_pi3 is nonzero");
  return ctx;
}

Json state_to_json(const GroupModel& g, const LinkState& s) {
  Json circles = Json::array();
  for (const auto& [id, c] : s.circles()) {
    Json o{{"id", id}};
    if (c.type == CircleType::kTypeII) {
      o["type"] = "II";
      o["label"] = element_to_json(g, c.label);
    } else {
      o["type"] = "I";
      o["partner"] = c.partner;
      o["role"] = c.role == Role::kActive ? "active" : "inactive";
      if (c.role == Role::kActive) o["label"] = element_to_json(g, c.label);
    }
    circles.push_back(std::move(o));
  }
  Json lk = Json::array();
  for (const auto& [a, b] : s.lk_entries()) lk.push_back({a, b});
  Json clasps = Json::array();
  for (const auto& [k, m] : s.clasps())
    for (int i = 0; i < m; ++i) clasps.push_back({k.first, k.second});
  Json tw = Json::array();
  for (const auto& [k, v] : s.tw()) tw.push_back({k.first, k.second, v});
  return Json{{"circles", circles}, {"lk", lk},         {"clasps", clasps},
              {"tw", tw},           {"homology_tag", s.homology_tag()}, {"next_id", s.next_id()}};
}

LinkState state_from_json(const GroupModel& g, const Json& j) {
  LinkState s;
  if (!j.is_object()) parse_fail("state must be an object");
  for (const auto& c : need(j, "circles")) {
    Circle x;
    x.id = get_as<Id>(need(c, "id"), "circle id");
    const auto type = get_as<std::string>(need(c, "type"), "circle type");
    if (type == "II") {
      x.type = CircleType::kTypeII;
      x.role = Role::kNone;
      x.label = element_from_json(g, need(c, "label"));
    } else if (type == "I") {
      x.type = CircleType::kTypeI;
      x.partner = get_as<Id>(need(c, "partner"), "partner");
      const auto role = get_as<std::string>(need(c, "role"), "role");
      if (role == "active") {
        x.role = Role::kActive;
        x.label = element_from_json(g, need(c, "label"));
      } else if (role == "inactive") {
        x.role = Role::kInactive;
        if (c.contains("label")) parse_fail("inactive circle " + std::to_string(x.id) + " must not store a label");
      } else {
        parse_fail("role must be active or inactive");
      }
    } else {
      parse_fail("circle type must be I or II");
    }
    s.insert(x);
  }
  auto pair_of = [](const Json& e, const char* what) {
    auto v = get_as<std::vector<Id>>(e, what);
    if (v.size() < 2) parse_fail(std::string(what) + " entries need two ids");
    return v;
  };
  if (j.contains("lk"))
    for (const auto& e : j.at("lk")) {
      auto v = pair_of(e, "lk");
      if (v.size() == 3 && v[2] == 0) continue;
      s.set_lk(v[0], v[1], true);
    }
  if (j.contains("clasps"))
    for (const auto& e : j.at("clasps")) {
      auto v = pair_of(e, "clasps");
      s.add_clasps(v[0], v[1], v.size() == 3 ? static_cast<int>(v[2]) : 1);
    }
  if (j.contains("tw"))
    for (const auto& e : j.at("tw")) {
      auto v = get_as<std::vector<Id>>(e, "tw");
      if (v.size() != 3) parse_fail("tw entries are [a, b, bit]");
      s.set_tw(v[0], v[1], static_cast<int>(v[2]));
    }
  if (j.contains("homology_tag")) s.set_tag(get_as<std::string>(j.at("homology_tag"), "homology_tag"));
  if (j.contains("next_id")) {
    const auto n = get_as<Id>(j.at("next_id"), "next_id");
    if (n < s.next_id()) parse_fail("next_id must exceed every circle id");
    s.set_next_id(n);
  }
  return s;
}

// Compact text form, one field per ';'-separated section:
//   sconc-state/1;c=<id>:<I|II>:<A|N|->:<partner>:<label>,...;lk=<a>-<b>,...;
//   cl=<a>-<b>x<m>,...;tw=<a>-<b>=<v>,...;tag=<tag>;next=<id>
// Labels are normalized coordinates joined by '.', '-' when not stored.
// Type II circles print partner 0.
std::string canonical_string(const GroupModel& g, const LinkState& s) {
  std::string out = "sconc-state/1;c=";
  auto num = [&out](int64_t v) { out += std::to_string(v); };
  bool first = true;
  for (const auto& [id, c] : s.circles()) {
    if (!first) out += ',';
    first = false;
    num(id);
    out += c.type == CircleType::kTypeII ? ":II:" : ":I:";
    out += c.role == Role::kActive ? "A:" : c.role == Role::kInactive ? "N:" : "-:";
    num(c.partner < 0 ? 0 : c.partner);
    out += ':';
    if (c.label.empty()) {
      out += '-';
    } else {
      const Element e = g.normalize(c.label);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) out += '.';
        num(e[i]);
      }
    }
  }
  out += ";lk=";
  first = true;
  for (const auto& [a, b] : s.lk_entries()) {
    if (!first) out += ',';
    first = false;
    num(a);
    out += '-';
    num(b);
  }
  out += ";cl=";
  first = true;
  for (const auto& [k, m] : s.clasps()) {
    if (!first) out += ',';
    first = false;
    num(k.first);
    out += '-';
    num(k.second);
    out += 'x';
    num(m);
  }
  out += ";tw=";
  first = true;
  for (const auto& [k, v] : s.tw()) {
    if (!first) out += ',';
    first = false;
    num(k.first);
    out += '-';
    num(k.second);
    out += '=';
    num(v);
  }
  out += ";tag=" + s.homology_tag() + ";next=";
  num(s.next_id());
  return out;
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

std::string state_hash(const GroupModel& g, const LinkState& s) { return sha256_hex(canonical_string(g, s)); }

Scenario scenario_from_json(const Json& j) {
  if (!j.is_object()) parse_fail("scenario must be an object");
  if (j.contains("schema") && j.at("schema") != kScenarioSchema)
    parse_fail("unsupported scenario schema " + j.at("schema").dump());
  Scenario sc;
  const Json& gj = need(j, "group");
  if (gj.is_object() && gj.contains("builtin")) sc.group_name = gj.at("builtin").get<std::string>();
  auto g = std::make_shared<const GroupModel>(group_from_json(gj));
  sc.ctx = context_from_json(g, j.contains("context") ? j.at("context") : Json());
  sc.state = j.contains("state") ? state_from_json(*g, j.at("state")) : LinkState{};
  if (j.contains("script")) {
    if (!j.at("script").is_array()) parse_fail("script must be a list");
    sc.script = j.at("script");
  }
  return sc;
}

Json scenario_to_json(const Scenario& sc) {
  Json j{{"schema", kScenarioSchema},
         {"group", group_to_json(sc.ctx.g(), sc.group_name)},
         {"context", context_to_json(sc.ctx)},
         {"state", state_to_json(sc.ctx.g(), sc.state)}};
  if (!sc.script.empty()) j["script"] = sc.script;
  return j;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kNotFound, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    parse_fail(path + ": " + e.what());
  }
}

Scenario load_scenario(const std::string& path) { return scenario_from_json(load_json(path)); }

}  // namespace sconc
