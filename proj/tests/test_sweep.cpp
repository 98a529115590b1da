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

#include "sweep.hpp"
#include "invariants.hpp"
#include "support.hpp"

namespace sconc {
namespace {

TEST(Sweep, SmallRunHasNoViolations) {
  const SweepReport r = run_sweep(3, 150);
  EXPECT_EQ(r.states, 150u);
  EXPECT_GT(r.moves, 150u);
  EXPECT_GT(r.parity_checks, 0u);
  EXPECT_EQ(r.violations, 0u) << (r.messages.empty() ? "" : r.messages.front());
}

TEST(Sweep, EveryMoveKindIsExercised) {
  const SweepReport r = run_sweep(4, 300);
  for (const char* m : {"clasp_finger", "trivial_finger", "introduce_type_II", "flip_activity", "whitney_move",
                        "whitney_pair_typeII", "ambient_surgery", "merge_hopf_pairs", "remove_trivial_hopf_pairs",
                        "move_meridian", "shorten_cycle", "add_hopf_pair"})
    EXPECT_GT(r.per_move.count(m) ? r.per_move.at(m) : 0u, 0u) << m;
}

TEST(Sweep, DeterministicAcrossThreadCounts) {
  const SweepReport a = run_sweep(9, 60, 1), b = run_sweep(9, 60, 3);
  EXPECT_EQ(a.to_json(), b.to_json());
}

TEST(Generator, ProducesValidStates) {
  Rng rng(17);
  for (const auto& name : sweep_groups())
    for (bool schar : {false, true}) {
      const AmbientContext ctx = sweep_context(testing::grp(name), schar);
      for (int i = 0; i < 50; ++i) {
        const LinkState s = random_state(ctx, rng);
        ASSERT_TRUE(validate(s, ctx).empty());
        EXPECT_TRUE(mu(s, ctx).is_zero());
      }
    }
}

}  // namespace
}  // namespace sconc
