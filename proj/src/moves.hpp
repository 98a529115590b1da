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

#ifndef SCONC_MOVES_HPP_
#define SCONC_MOVES_HPP_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "serialize.hpp"
#include "state.hpp"

namespace sconc {

struct MoveRecord {
  std::string name;
  Json params;
  std::string pre_hash;
  std::string post_hash;
};
using Trace = std::vector<MoveRecord>;

Json record_to_json(const MoveRecord& r);
MoveRecord record_from_json(const Json& j);
Json trace_to_json(const Trace& t, const std::string& initial_hash, const std::string& final_hash);

// Band surgery of one dual pair (A, A') into (A1, A1') and (A2, A2').
// A1, A1' keep the input ids. sigma[X] = {lk(A1,X), lk(A2,X)} for third
// circles X; missing entries send all linking to A1. cross[i][j] is
// lk(Ai, Aj'). nu = lk(A1,A2), nu_dual = lk(A1',A2').
struct SplitSpec {
  Id pair = 0;
  std::map<Id, std::array<int, 2>> sigma;
  std::map<Id, std::array<int, 2>> sigma_dual;
  std::optional<std::array<std::array<int, 2>, 2>> cross;
  std::optional<int> nu;
  int nu_dual = 0;
  int belts = 0;
  bool clean = false;

  Json to_json() const;
  static SplitSpec from_json(const Json& j);
};

struct SplitResult {
  Id a2 = 0, a2_dual = 0;
  std::vector<Id> belts;  // active belt circles
};

// Applies moves to a working state and records each primitive.
class MoveEngine {
 public:
  MoveEngine(const AmbientContext& ctx, LinkState s, bool hash_steps = true);

  const LinkState& state() const { return s_; }
  const AmbientContext& ctx() const { return ctx_; }
  const Trace& trace() const { return trace_; }
  Trace take_trace() { return std::move(trace_); }

  // Primitives. Each returns ids of newly created circles where relevant.
  std::pair<Id, Id> clasp_finger(Id a, Id b);
  std::pair<Id, Id> trivial_finger(const Element& g);
  Id introduce_type_ii();
  void flip_activity(Id c);
  SplitResult whitney_split(const SplitSpec& spec);
  std::vector<Id> whitney_merge(Id x, Id y, int belts = 0, bool clean = false);
  std::pair<Id, Id> whitney_pair_type_ii(Id a, Id b);
  void ambient_surgery(Id c);
  std::pair<Id, Id> merge_hopf_pairs(Id a, Id b);
  void remove_trivial_hopf_pairs(Id a, Id b);

  // Composites, recorded as their primitive expansions.
  std::pair<Id, Id> move_meridian(Id x, Id e);
  std::pair<Id, Id> shorten_cycle(const std::vector<Id>& cycle);
  std::pair<Id, Id> add_hopf_pair(const Element& g);

  // Dispatch by record name; composites are accepted.
  void apply(const std::string& name, const Json& params);

 private:
  void commit(const std::string& name, Json params, LinkState next);

  AmbientContext ctx_;
  LinkState s_;
  Trace trace_;
  bool hash_steps_;
};

// The twist side effect of surgery: k full twists flip lk(X,Y) for every
// pair of distinct circles in `linkers`, k times.
void apply_twists(LinkState& s, const std::vector<Id>& linkers, int k);

struct ScriptResult {
  LinkState state;
  Trace trace;
};
// Runs every record in order. On failure throws an Error naming the step
// index; the caller's state is never touched.
ScriptResult apply_script(const LinkState& s, const AmbientContext& ctx, const Json& script);

}  // namespace sconc

#endif  // SCONC_MOVES_HPP_
