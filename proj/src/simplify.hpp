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

#ifndef SCONC_SIMPLIFY_HPP_
#define SCONC_SIMPLIFY_HPP_

#include <string>
#include <vector>

#include "moves.hpp"

namespace sconc {

// In-place pipeline stages on an engine.
void eliminate_type_ii(MoveEngine& eng);
// Returns the active circle of the final Hopf pair.
Id reduce_to_hopf(MoveEngine& eng);

struct PipelineResult {
  LinkState state;
  Trace trace;
  Id hopf = 0;
  Element label;
};
PipelineResult eliminate_type_ii(const LinkState& s, const AmbientContext& ctx);
PipelineResult reduce_to_hopf(const LinkState& s, const AmbientContext& ctx);
// eliminate_type_II followed by reduce_to_hopf.
PipelineResult simplify_to_hopf(const LinkState& s, const AmbientContext& ctx);

enum class Outcome { kConcordant, kObstructedFq, kObstructedKm, kInconclusive };
const char* outcome_name(Outcome o);

struct Verdict {
  Outcome outcome = Outcome::kInconclusive;
  F2Vec cls;
  std::string reason;
  std::vector<std::string> notes;
  Trace trace;
  LinkState final_state;
  std::string initial_hash;
  std::string final_hash;
};
Verdict decide(const LinkState& s, const AmbientContext& ctx);
Json verdict_to_json(const Verdict& v, const GroupModel& g);

}  // namespace sconc

#endif  // SCONC_SIMPLIFY_HPP_
