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

#ifndef SCONC_SWEEP_HPP_
#define SCONC_SWEEP_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "moves.hpp"

namespace sconc {

using Rng = std::mt19937_64;

struct GenOptions {
  int max_pairs = 4;
  int max_type_ii_classes = 2;
  bool allow_mu = false;   // may leave an unpaired nontrivial type II label
  bool gadgets = true;     // split Hopf pairs and Hopf cycles
  double link_density = 0.35;
};

Element random_element(const GroupModel& g, Rng& rng);
AmbientContext sweep_context(std::shared_ptr<const GroupModel> g, bool s_characteristic);
// A state that passes validate() under ctx, with every type II circle of
// even total linking and tw of the form tau(A) + tau(B) + c(label).
LinkState random_state(const AmbientContext& ctx, Rng& rng, const GenOptions& opt = {});

// Candidate moves for a state, each as a (name, params) record with
// randomized parameters. Only moves whose preconditions hold are returned.
std::vector<std::pair<std::string, Json>> random_moves(const LinkState& s, const AmbientContext& ctx, Rng& rng);

struct SweepReport {
  uint64_t states = 0;
  uint64_t moves = 0;
  uint64_t parity_checks = 0;
  uint64_t violations = 0;
  std::map<std::string, uint64_t> per_move;
  std::vector<std::string> messages;  // first few violations
  Json to_json() const;
};

// Groups used by the sweep.
std::vector<std::string> sweep_groups();
SweepReport run_sweep(uint64_t seed, int count, int threads = 1, int walk_length = 6);

}  // namespace sconc

#endif  // SCONC_SWEEP_HPP_
