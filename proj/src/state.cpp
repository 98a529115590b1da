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

#include "state.hpp"

#include <algorithm>
#include <sstream>

#include "error.hpp"

namespace sconc {

AmbientContext AmbientContext::make(std::shared_ptr<const GroupModel> group) {
  AmbientContext ctx;
  ctx.mu_pi3 = F2Subspace(group->two_torsion().size());
  ctx.delta_self = F2Subspace(group->h1_dim());
  ctx.group = std::move(group);
  return ctx;
}

const Circle& LinkState::circle(Id c) const {
  auto it = circles_.find(c);
  if (it == circles_.end()) fail(ErrorCode::kNotFound, "unknown circle " + std::to_string(c));
  return it->second;
}

Id LinkState::dual(Id c) const {
  const Circle& x = circle(c);
  return x.type == CircleType::kTypeII ? c : x.partner;
}

Id LinkState::active_of(Id c) const {
  const Circle& x = circle(c);
  if (x.type == CircleType::kTypeII) fail(ErrorCode::kInvalidArgument, "circle " + std::to_string(c) + " is type II");
  return x.role == Role::kActive ? c : x.partner;
}

Element LinkState::label_of(const GroupModel& g, Id c) const {
  const Circle& x = circle(c);
  if (x.type == CircleType::kTypeII || x.role == Role::kActive) return x.label;
  return g.inv(circle(x.partner).label);
}

std::vector<Id> LinkState::linked(Id c) const {
  std::vector<Id> out;
  for (const auto& [a, b] : lk_) {
    if (a == c) out.push_back(b);
    else if (b == c) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int LinkState::lk_total(Id c) const {
  circle(c);
  int t = 0;
  for (const auto& [a, b] : lk_) if (a == c || b == c) t ^= 1;
  return t;
}

int LinkState::clasp_count(Id a, Id b) const {
  auto it = clasps_.find(key(a, b));
  return it == clasps_.end() ? 0 : it->second;
}

int LinkState::foreign_clasps(Id c) const {
  int n = 0;
  for (const auto& [k, m] : clasps_)
    if ((k.first == c) != (k.second == c)) n += m;
  return n;
}

bool LinkState::is_split(Id c) const {
  circle(c);
  for (const auto& [a, b] : lk_) if (a == c || b == c) return false;
  return foreign_clasps(c) == 0;
}

bool LinkState::is_hopf_pair(Id active) const {
  const Circle& x = circle(active);
  if (x.type != CircleType::kTypeI || x.role != Role::kActive) return false;
  const Id p = x.partner;
  if (!lk(active, p)) return false;
  if (linked(active).size() != 1 || linked(p).size() != 1) return false;
  for (const auto& [k, m] : clasps_) {
    const bool ta = k.first == active || k.second == active;
    const bool tp = k.first == p || k.second == p;
    if ((ta || tp) && k != key(active, p) && k.first != k.second) return false;
  }
  return true;
}

int LinkState::tw_value(Id a, Id b) const {
  auto it = tw_.find(key(a, b));
  if (it == tw_.end()) fail(ErrorCode::kNotFound, "no tw entry for " + std::to_string(a) + "," + std::to_string(b));
  return it->second;
}

void LinkState::insert(const Circle& c) {
  if (c.id <= 0) fail(ErrorCode::kInvalidArgument, "circle ids must be positive");
  if (circles_.count(c.id)) fail(ErrorCode::kInvalidArgument, "duplicate circle id " + std::to_string(c.id));
  circles_[c.id] = c;
  next_id_ = std::max(next_id_, c.id + 1);
}

std::pair<Id, Id> LinkState::add_pair(const Element& label) {
  const Id a = next_id_, b = next_id_ + 1;
  insert(Circle{a, CircleType::kTypeI, Role::kActive, b, label});
  insert(Circle{b, CircleType::kTypeI, Role::kInactive, a, {}});
  return {a, b};
}

Id LinkState::add_type_ii(const Element& label) {
  const Id a = next_id_;
  insert(Circle{a, CircleType::kTypeII, Role::kNone, -1, label});
  return a;
}

void LinkState::erase(Id c) {
  circle(c);
  circles_.erase(c);
  std::erase_if(lk_, [c](const IdPair& k) { return k.first == c || k.second == c; });
  std::erase_if(clasps_, [c](const auto& kv) { return kv.first.first == c || kv.first.second == c; });
  std::erase_if(tw_, [c](const auto& kv) { return kv.first.first == c || kv.first.second == c; });
}

void LinkState::set_lk(Id a, Id b, bool v) {
  if (a == b) fail(ErrorCode::kInvalidArgument, "lk diagonal is fixed at zero");
  circle(a);
  circle(b);
  if (v) lk_.insert(key(a, b));
  else lk_.erase(key(a, b));
}

void LinkState::add_clasps(Id a, Id b, int n) {
  circle(a);
  circle(b);
  if (n <= 0) return;
  clasps_[key(a, b)] += n;
}

void LinkState::remove_clasp(Id a, Id b) {
  auto it = clasps_.find(key(a, b));
  if (it == clasps_.end()) fail(ErrorCode::kPrecondition, "no clasp between " + std::to_string(a) + " and " + std::to_string(b));
  if (--it->second == 0) clasps_.erase(it);
}

void LinkState::drop_clasps_of(Id c) {
  std::erase_if(clasps_, [c](const auto& kv) { return kv.first.first == c || kv.first.second == c; });
}

void LinkState::set_tw(Id a, Id b, int v) {
  if (a == b) fail(ErrorCode::kInvalidArgument, "tw is defined on distinct circles");
  circle(a);
  circle(b);
  tw_[key(a, b)] = v & 1;
}

void LinkState::erase_tw(Id a, Id b) { tw_.erase(key(a, b)); }

void LinkState::swap_roles(Id c, const GroupModel& g) {
  const Id a = active_of(c);
  Circle& act = circles_.at(a);
  Circle& ina = circles_.at(act.partner);
  ina.label = g.inv(act.label);
  ina.role = Role::kActive;
  act.label.clear();
  act.role = Role::kInactive;
}

bool dual_parity_holds(const LinkState& s, Id c) {
  return s.lk_total(c) == s.lk_total(s.dual(c));
}

std::vector<std::pair<Id, Id>> type_i_pairs(const LinkState& s) {
  std::vector<std::pair<Id, Id>> out;
  for (const auto& [id, c] : s.circles())
    if (c.type == CircleType::kTypeI && c.role == Role::kActive) out.emplace_back(id, c.partner);
  return out;
}

std::vector<Id> type_ii_circles(const LinkState& s) {
  std::vector<Id> out;
  for (const auto& [id, c] : s.circles())
    if (c.type == CircleType::kTypeII) out.push_back(id);
  return out;
}

namespace {

void add(ValidationReport& r, std::string rule, std::vector<Id> ids, std::string detail) {
  r.push_back(Violation{std::move(rule), std::move(ids), std::move(detail)});
}

}  // namespace

ValidationReport validate(const LinkState& s, const AmbientContext& ctx) {
  ValidationReport r;
  const GroupModel& g = ctx.g();
  const auto& cs = s.circles();

  for (const auto& [id, c] : cs) {
    if (c.id != id) add(r, "circle-id", {id}, "stored id differs from key");
    if (c.type == CircleType::kTypeII) {
      if (c.partner != -1 || c.role != Role::kNone) add(r, "type-ii-unpaired", {id}, "type II circle has a partner or role");
      if (!g.valid(c.label)) {
        add(r, "label-valid", {id}, "label is not a group element");
      } else if (!g.is_identity(g.mul(c.label, c.label))) {
        add(r, "type-ii-involution", {id}, "type II label squares to a nontrivial element");
      }
      continue;
    }
    auto p = cs.find(c.partner);
    if (p == cs.end() || p->second.type != CircleType::kTypeI || p->second.partner != id) {
      add(r, "partner-involution", {id}, "partner is missing or not reciprocal");
      continue;
    }
    if (c.role == Role::kActive) {
      if (p->second.role != Role::kInactive) add(r, "active-inactive", {id, c.partner}, "pair must have one active and one inactive circle");
      if (!g.valid(c.label)) add(r, "label-valid", {id}, "label is not a group element");
    } else if (c.role == Role::kInactive) {
      if (!c.label.empty()) add(r, "inactive-label", {id}, "inactive circles carry no stored label");
    } else {
      add(r, "active-inactive", {id}, "type I circle without a role");
    }
  }

  for (const auto& [a, b] : s.lk_entries()) {
    if (a == b) add(r, "lk-diagonal", {a}, "nonzero diagonal entry");
    if (!cs.count(a) || !cs.count(b)) add(r, "lk-ids", {a, b}, "lk entry names an unknown circle");
  }
  for (const auto& [k, m] : s.clasps()) {
    if (!cs.count(k.first) || !cs.count(k.second)) add(r, "clasp-ids", {k.first, k.second}, "clasp names an unknown circle");
    if (m <= 0) add(r, "clasp-multiplicity", {k.first, k.second}, "nonpositive multiplicity");
  }
  std::set<IdPair> keys(s.lk_entries().begin(), s.lk_entries().end());
  for (const auto& kv : s.clasps()) if (kv.first.first != kv.first.second) keys.insert(kv.first);
  for (const auto& [a, b] : keys) {
    if (s.lk_entries().count({a, b}) != static_cast<std::size_t>(s.clasp_count(a, b) & 1))
      add(r, "clasp-congruence", {a, b}, "lk differs from clasp count mod 2");
  }

  const auto t2 = type_ii_circles(s);
  for (std::size_t i = 0; i < t2.size(); ++i) {
    for (std::size_t j = i + 1; j < t2.size(); ++j) {
      const Circle& x = cs.at(t2[i]);
      const Circle& y = cs.at(t2[j]);
      const bool same = g.valid(x.label) && g.valid(y.label) && g.equal(x.label, y.label);
      const bool has = s.tw().count(key(x.id, y.id)) > 0;
      if (same && !has) add(r, "tw-domain", {x.id, y.id}, "missing tw entry for equal-label type II pair");
    }
  }
  for (const auto& [k, v] : s.tw()) {
    auto x = cs.find(k.first), y = cs.find(k.second);
    const bool ok = x != cs.end() && y != cs.end() && x->second.type == CircleType::kTypeII &&
                    y->second.type == CircleType::kTypeII && g.valid(x->second.label) &&
                    g.valid(y->second.label) && g.equal(x->second.label, y->second.label);
    if (!ok) add(r, "tw-domain", {k.first, k.second}, "tw entry outside equal-label type II pairs");
    if (v != 0 && v != 1) add(r, "tw-value", {k.first, k.second}, "tw is a bit");
  }

  if (ctx.parity_rule_applies()) {
    for (const auto& [a, b] : type_i_pairs(s)) {
      if (cs.count(b) && !dual_parity_holds(s, a)) {
        std::ostringstream d;
        d << "lk(A,L-A)=" << s.lk_total(a) << " but lk(A',L-A')=" << s.lk_total(b);
        add(r, "dual-parity", {a, b}, d.str());
      }
    }
  }

  if (!cs.empty() && s.next_id() <= cs.rbegin()->first)
    add(r, "next-id", {cs.rbegin()->first}, "next_id must exceed every circle id");
  return r;
}

LinkState flip_activity(const LinkState& s, const AmbientContext& ctx, Id c) {
  if (s.is_type_ii(c)) fail(ErrorCode::kInvalidArgument, "flip_activity on type II circle " + std::to_string(c));
  LinkState out = s;
  out.swap_roles(c, ctx.g());
  return out;
}

}  // namespace sconc
