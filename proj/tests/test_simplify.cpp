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

#include <random>

#include "error.hpp"
#include "invariants.hpp"
#include "moves.hpp"
#include "serialize.hpp"
#include "simplify.hpp"
#include "support.hpp"
#include "sweep.hpp"

namespace sconc {
namespace {

using testing::context;
using testing::hopf;
using testing::link;

TEST(EliminateTypeII, Examples) {
  const auto ctx = context("Z/2", true, DualSphere::kUnframed);
  LinkState s;
  const Id a = s.add_type_ii({0});
  const Id b = s.add_type_ii({0});
  s.set_tw(a, b, 0);
  const auto r = eliminate_type_ii(s, ctx);
  EXPECT_TRUE(type_ii_circles(r.state).empty());
  ASSERT_EQ(type_i_pairs(r.state).size(), 1u);
  EXPECT_TRUE(r.state.lk_entries().empty());

  LinkState t;
  const Id c = t.add_type_ii({1});
  const Id d = t.add_type_ii({1});
  t.set_tw(c, d, 1);
  const auto q = eliminate_type_ii(t, ctx);
  ASSERT_EQ(type_i_pairs(q.state).size(), 1u);
  const Id h = type_i_pairs(q.state)[0].first;
  EXPECT_TRUE(q.state.is_hopf_pair(h));
  EXPECT_EQ(q.state.circle(h).label, (Element{1}));
  EXPECT_EQ(delta(q.state, ctx), F2Vec::from_bits({1}));

  LinkState lone;
  lone.add_type_ii({1});
  EXPECT_THROW(eliminate_type_ii(lone, ctx), Error);
}

TEST(EliminateTypeII, OddIdentityClassGetsACompanion) {
  const auto ctx = context("Z/2", false, DualSphere::kFramed);
  LinkState s;
  s.add_type_ii({0});
  const auto r = eliminate_type_ii(s, ctx);
  EXPECT_TRUE(type_ii_circles(r.state).empty());
  EXPECT_EQ(r.trace.front().name, "introduce_type_II");
}

TEST(ReduceToHopf, Examples) {
  const auto ctx = context("Q8", true, DualSphere::kUnframed);
  const GroupModel& g = ctx.g();
  const Element a = g.generators()[0], b = g.generators()[1];
  LinkState one;
  hopf(one, a);
  const auto r1 = reduce_to_hopf(one, ctx);
  EXPECT_EQ(r1.label, a);
  EXPECT_EQ(r1.state, one);

  LinkState two;
  hopf(two, a);
  hopf(two, b);
  const auto r2 = reduce_to_hopf(two, ctx);
  EXPECT_EQ(r2.label, g.mul(b, a));
  EXPECT_EQ(r2.state.circles().size(), 2u);
  EXPECT_TRUE(r2.state.is_hopf_pair(r2.hopf));
}

TEST(ReduceToHopf, EmptyStateGivesIdentityHopfPair) {
  const auto ctx = context("Z", true, DualSphere::kUnframed);
  const auto r = reduce_to_hopf(LinkState{}, ctx);
  EXPECT_EQ(r.label, (Element{0}));
  EXPECT_TRUE(r.state.is_hopf_pair(r.hopf));
}

TEST(ReduceToHopf, Preconditions) {
  const auto ctx = context("Z/2", true, DualSphere::kUnframed);
  LinkState s;
  const Id a = s.add_type_ii({1});
  const Id b = s.add_type_ii({1});
  s.set_tw(a, b, 0);
  EXPECT_THROW(reduce_to_hopf(s, ctx), Error);
  EXPECT_THROW(reduce_to_hopf(LinkState{}, context("Z/2", true, DualSphere::kNone)), Error);
}

// Cycle (A1, A2'), ..., (Am, A1'); iterated shortening keeps the merged
// circle first.
Element iterate_shorten(const AmbientContext& ctx, const std::vector<Element>& labels) {
  LinkState s;
  std::vector<Id> cyc;
  for (const auto& g : labels) cyc.push_back(s.add_pair(g).first);
  for (std::size_t i = 0; i < cyc.size(); ++i) link(s, cyc[i], s.dual(cyc[(i + 1) % cyc.size()]));
  MoveEngine eng(ctx, s);
  while (cyc.size() > 1) {
    const Id e = eng.shorten_cycle(cyc).first;
    cyc.erase(cyc.begin(), cyc.begin() + 2);
    cyc.insert(cyc.begin(), eng.state().active_of(e));
  }
  EXPECT_TRUE(eng.state().is_hopf_pair(cyc[0]));
  return eng.state().label_of(ctx.g(), cyc[0]);
}

TEST(ShortenCycle, IteratedProductOverQ8) {
  const auto ctx = context("Q8", true, DualSphere::kUnframed);
  const GroupModel& g = ctx.g();
  const auto els = g.elements();
  std::mt19937_64 rng(3);
  for (std::size_t m = 2; m <= 5; ++m) {
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Element> labels;
      Element want = g.identity();
      for (std::size_t i = 0; i < m; ++i) {
        labels.push_back(els[rng() % els.size()]);
        want = g.mul(labels.back(), want);
      }
      EXPECT_EQ(iterate_shorten(ctx, labels), want);
    }
  }
}

TEST(Decide, BallTimesCircle) {
  const Scenario odd = load_scenario(testing::source_dir() + "/scenarios/b3s1-odd.json");
  const Verdict v = decide(odd.state, odd.ctx);
  EXPECT_EQ(v.outcome, Outcome::kObstructedKm);
  EXPECT_EQ(v.cls, F2Vec::from_bits({1}));

  const Scenario even = load_scenario(testing::source_dir() + "/scenarios/b3s1-even.json");
  const Verdict w = decide(even.state, even.ctx);
  EXPECT_EQ(w.outcome, Outcome::kConcordant);
  EXPECT_TRUE(w.final_state.circles().empty());
  const auto replay = apply_script(even.state, even.ctx, trace_to_json(w.trace, w.initial_hash, w.final_hash)["steps"]);
  EXPECT_EQ(state_hash(even.ctx.g(), replay.state), w.final_hash);
}

TEST(Decide, ObstructedFq) {
  const auto ctx = context("Z/2", false, DualSphere::kFramed);
  LinkState s;
  s.add_type_ii({1});
  EXPECT_EQ(decide(s, ctx).outcome, Outcome::kObstructedFq);
}

TEST(Decide, InconclusiveCases) {
  auto ctx = context("Z/2", true, DualSphere::kUnframed);
  LinkState s;
  s.add_type_ii({1});
  ctx.mu_pi3.add(F2Vec::from_bits({1}));
  EXPECT_EQ(decide(s, ctx).outcome, Outcome::kInconclusive);

  auto q = context("Z", true, DualSphere::kUnframed);
  q.delta_self.add(F2Vec::from_bits({1}));
  LinkState h;
  hopf(h, {1});
  EXPECT_EQ(decide(h, q).outcome, Outcome::kInconclusive);
}

TEST(Decide, NeedsDualSphere) {
  EXPECT_THROW(decide(LinkState{}, context("Z", false, DualSphere::kNone)), Error);
}

bool balanced(const LinkState& s) {
  for (const auto& [a, ad] : type_i_pairs(s))
    if (s.lk_total(a) % 2 != s.lk_total(ad) % 2) return false;
  return true;
}

// Replays a trace one record at a time, validating every intermediate
// state and checking mu stays put. Delta is compared step by step: always
// in s-characteristic contexts, otherwise only across non-surgery moves
// out of a parity-balanced state.
void check_trace(const LinkState& s0, const AmbientContext& ctx, const Trace& trace, const LinkState& final_state) {
  const F2Vec mu0 = mu(s0, ctx);
  LinkState cur = s0;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const LinkState prev = cur;
    const std::string& name = trace[i].name;
    cur = apply_script(cur, ctx, Json::array({record_to_json(trace[i])})).state;
    ASSERT_TRUE(validate(cur, ctx).empty()) << "after step " << i << " " << name;
    ASSERT_EQ(mu(cur, ctx), mu0);
    const bool surgery = name == "ambient_surgery" || name == "move_meridian" || name == "shorten_cycle";
    if (ctx.s_characteristic || (!surgery && balanced(prev)))
      ASSERT_EQ(delta(cur, ctx), delta(prev, ctx)) << "after step " << i << " " << name;
  }
  EXPECT_EQ(cur, final_state);
}

TEST(PipelineProperties, SimplifyConservesDelta) {
  std::mt19937_64 rng(21);
  for (const auto& name : sweep_groups()) {
    const AmbientContext ctx = sweep_context(testing::grp(name), true);
    for (int i = 0; i < 12; ++i) {
      const LinkState s = random_state(ctx, rng);
      const auto r = simplify_to_hopf(s, ctx);
      EXPECT_EQ(ctx.g().eps(r.label), delta(s, ctx));
      EXPECT_EQ(r.state.circles().size(), 2u);
      check_trace(s, ctx, r.trace, r.state);
    }
  }
}

TEST(PipelineProperties, NonCharacteristicIsConcordant) {
  std::mt19937_64 rng(22);
  for (const auto& name : sweep_groups()) {
    const AmbientContext ctx = sweep_context(testing::grp(name), false);
    for (int i = 0; i < 12; ++i) {
      const LinkState s = random_state(ctx, rng);
      const Verdict v = decide(s, ctx);
      ASSERT_EQ(v.outcome, Outcome::kConcordant) << v.reason;
      EXPECT_TRUE(v.final_state.circles().empty());
      check_trace(s, normalize_dual(ctx).ctx, v.trace, v.final_state);
    }
  }
}

TEST(PipelineProperties, DecideIsDeterministic) {
  std::mt19937_64 rng(23);
  const AmbientContext ctx = sweep_context(testing::grp("Q8"), true);
  for (int i = 0; i < 10; ++i) {
    const LinkState s = random_state(ctx, rng);
    const Verdict a = decide(s, ctx), b = decide(s, ctx);
    EXPECT_EQ(a.final_hash, b.final_hash);
    EXPECT_EQ(a.trace.size(), b.trace.size());
    EXPECT_EQ(a.outcome == Outcome::kConcordant, ctx.g().eps(simplify_to_hopf(s, ctx).label).is_zero());
  }
}

}  // namespace
}  // namespace sconc
