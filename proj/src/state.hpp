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

#ifndef SCONC_STATE_HPP_
#define SCONC_STATE_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "f2.hpp"
#include "group.hpp"

namespace sconc {

using Id = int64_t;
using IdPair = std::pair<Id, Id>;

inline IdPair key(Id a, Id b) { return a < b ? IdPair{a, b} : IdPair{b, a}; }

enum class CircleType { kTypeI, kTypeII };
enum class Role { kActive, kInactive, kNone };
enum class DualSphere { kNone, kFramed, kUnframed };

struct Circle {
  Id id = 0;
  CircleType type = CircleType::kTypeI;
  Role role = Role::kNone;
  Id partner = -1;
  Element label;  // empty on inactive circles
  friend bool operator==(const Circle&, const Circle&) = default;
};

struct AmbientContext {
  std::shared_ptr<const GroupModel> group;
  bool s_characteristic = false;
  DualSphere dual_sphere = DualSphere::kNone;
  F2Subspace mu_pi3;
  F2Subspace delta_self;
  bool based = false;
  bool mu_pi3_zero = false;  // caller asserts mu(pi_3 X) = 0
  std::string boundary_note;

  const GroupModel& g() const { return *group; }
  bool parity_rule_applies() const { return s_characteristic && dual_sphere != DualSphere::kNone; }
  static AmbientContext make(std::shared_ptr<const GroupModel> group);
};

class LinkState {
 public:
  const std::map<Id, Circle>& circles() const { return circles_; }
  const std::set<IdPair>& lk_entries() const { return lk_; }
  const std::map<IdPair, int>& clasps() const { return clasps_; }
  const std::map<IdPair, int>& tw() const { return tw_; }
  const std::string& homology_tag() const { return homology_tag_; }
  Id next_id() const { return next_id_; }

  bool has(Id c) const { return circles_.count(c) > 0; }
  const Circle& circle(Id c) const;
  Id dual(Id c) const;
  bool is_type_ii(Id c) const { return circle(c).type == CircleType::kTypeII; }
  bool is_active(Id c) const { return circle(c).role == Role::kActive; }
  // Active circle of the pair containing c.
  Id active_of(Id c) const;
  // Label seen from c: an inactive circle carries the inverse of its partner.
  Element label_of(const GroupModel& g, Id c) const;

  bool lk(Id a, Id b) const { return a != b && lk_.count(key(a, b)) > 0; }
  std::vector<Id> linked(Id c) const;
  int lk_total(Id c) const;
  int clasp_count(Id a, Id b) const;
  // Clasps between c and other circles, with multiplicity.
  int foreign_clasps(Id c) const;
  // No linking and no clasps with any other circle.
  bool is_split(Id c) const;
  bool is_hopf_pair(Id active) const;

  int tw_value(Id a, Id b) const;

  // Mutators. They keep ids and bookkeeping consistent but enforce no
  // topological rule; moves are responsible for that.
  void set_tag(std::string t) { homology_tag_ = std::move(t); }
  void set_next_id(Id n) { next_id_ = n; }
  void insert(const Circle& c);
  std::pair<Id, Id> add_pair(const Element& label);
  Id add_type_ii(const Element& label);
  void erase(Id c);
  void set_lk(Id a, Id b, bool v);
  void flip_lk(Id a, Id b) { set_lk(a, b, !lk(a, b)); }
  void add_clasps(Id a, Id b, int n = 1);
  void remove_clasp(Id a, Id b);
  void drop_clasps_of(Id c);
  void set_tw(Id a, Id b, int v);
  void erase_tw(Id a, Id b);
  void swap_roles(Id c, const GroupModel& g);

  friend bool operator==(const LinkState&, const LinkState&) = default;

 private:
  std::map<Id, Circle> circles_;
  std::set<IdPair> lk_;
  std::map<IdPair, int> clasps_;
  std::map<IdPair, int> tw_;
  std::string homology_tag_;
  Id next_id_ = 1;
};

struct Violation {
  std::string rule;
  std::vector<Id> ids;
  std::string detail;
};
using ValidationReport = std::vector<Violation>;

ValidationReport validate(const LinkState& s, const AmbientContext& ctx);
bool dual_parity_holds(const LinkState& s, Id c);

// Type I pairs, as (active, inactive), in active-id order.
std::vector<std::pair<Id, Id>> type_i_pairs(const LinkState& s);
std::vector<Id> type_ii_circles(const LinkState& s);

LinkState flip_activity(const LinkState& s, const AmbientContext& ctx, Id c);

}  // namespace sconc

#endif  // SCONC_STATE_HPP_
