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

#include "simplify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "error.hpp"
#include "invariants.hpp"

namespace sconc {

namespace {

void require_valid(const LinkState& s, const AmbientContext& ctx, const char* who) {
  const auto rep = validate(s, ctx);
  if (!rep.empty())
    fail(ErrorCode::kPrecondition, std::string(who) + ": invalid input state (" + rep.front().rule + ": " + rep.front().detail + ")");
}

}  // namespace

void eliminate_type_ii(MoveEngine& eng) {
  const AmbientContext& ctx = eng.ctx();
  const GroupModel& g = ctx.g();
  if (!mu(eng.state(), ctx).is_zero())
    fail(ErrorCode::kPrecondition, "eliminate_type_II: mu is nonzero, type II circles cannot be paired off");

  std::vector<std::vector<Id>> classes;
  for (Id c : type_ii_circles(eng.state())) {
    const Element& lab = eng.state().circle(c).label;
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const auto& cl) { return g.equal(eng.state().circle(cl.front()).label, lab); });
    if (it == classes.end()) classes.push_back({c});
    else it->push_back(c);
  }
  for (auto& cl : classes) {
    if (cl.size() % 2 == 0) continue;
    if (!g.is_identity(eng.state().circle(cl.front()).label))
      fail(ErrorCode::kInternal, "eliminate_type_II: odd class with mu = 0");
    cl.push_back(eng.introduce_type_ii());
  }

  std::vector<std::pair<Id, Id>> pairs;
  for (const auto& cl : classes) {
    if (!ctx.parity_rule_applies()) {
      for (std::size_t i = 0; i + 1 < cl.size(); i += 2) pairs.emplace_back(cl[i], cl[i + 1]);
      continue;
    }
    std::vector<Id> by_parity[2];
    for (Id c : cl) by_parity[eng.state().lk_total(c)].push_back(c);
    for (const auto& v : by_parity) {
      if (v.size() % 2)
        fail(ErrorCode::kPrecondition, "eliminate_type_II: a label class has an odd number of circles with odd linking");
      for (std::size_t i = 0; i + 1 < v.size(); i += 2) pairs.emplace_back(v[i], v[i + 1]);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [a, b] : pairs) eng.whitney_pair_type_ii(a, b);
}

Id reduce_to_hopf(MoveEngine& eng) {
  const AmbientContext& ctx = eng.ctx();
  if (!type_ii_circles(eng.state()).empty()) fail(ErrorCode::kPrecondition, "reduce_to_hopf: type II circles present");
  if (ctx.dual_sphere != DualSphere::kUnframed)
    fail(ErrorCode::kApplicability, "reduce_to_hopf needs an unframed dual sphere (s-characteristic context)");
  auto S = [&]() -> const LinkState& { return eng.state(); };

  std::vector<Id> done;
  std::set<Id> long_circles;
  std::vector<Id> long_pairs;
  for (const auto& [a, ad] : type_i_pairs(S())) {
    if (S().is_hopf_pair(a) && S().clasp_count(a, ad) == 1) {
      done.push_back(a);
    } else {
      long_circles.insert(a);
      long_circles.insert(ad);
      long_pairs.push_back(a);
    }
  }

  // Unclasp the long circles from each other.
  for (;;) {
    const auto& cl = S().clasps();
    auto it = std::find_if(cl.begin(), cl.end(), [&](const auto& kv) {
      return long_circles.count(kv.first.first) && long_circles.count(kv.first.second);
    });
    if (it == cl.end()) break;
    const IdPair k = it->first;
    eng.clasp_finger(k.first, k.second);
  }

  // Balance and split so that every long circle carries one meridian.
  for (Id x : long_pairs) {
    const Id xd = S().dual(x);
    auto count = [&](Id c) { return static_cast<int>(S().linked(c).size()); };
    if (count(x) == 0 && count(xd) == 0) {
      eng.ambient_surgery(x);
      continue;
    }
    while (count(x) != count(xd)) {
      const Id from = count(x) > count(xd) ? x : xd;
      eng.move_meridian(from, S().linked(from).front());
    }
    while (count(x) > 1) {
      SplitSpec sp;
      sp.pair = x;
      sp.sigma[S().linked(x).front()] = {0, 1};
      sp.sigma_dual[S().linked(xd).front()] = {0, 1};
      sp.cross = std::array<std::array<int, 2>, 2>{{{0, 0}, {0, 0}}};
      sp.nu_dual = 0;
      sp.clean = true;
      eng.whitney_split(sp);
    }
  }

  // Every remaining circle now has exactly one link: orient the cycles.
  const std::set<Id> terminal(done.begin(), done.end());
  std::set<Id> visited;
  std::vector<std::vector<Id>> cycles;
  for (const auto& [a, ad] : type_i_pairs(S())) {
    if (terminal.count(a) || visited.count(a)) continue;
    std::vector<Id> cyc{a};
    visited.insert(a);
    visited.insert(ad);
    Id cur = a;
    for (;;) {
      const auto nb = S().linked(cur);
      if (nb.size() != 1) fail(ErrorCode::kInternal, "reduce_to_hopf: circle " + std::to_string(cur) + " does not have exactly one link");
      const Id nxt = nb.front();
      if (nxt == S().dual(a)) break;
      if (S().active_of(nxt) == a) fail(ErrorCode::kInternal, "reduce_to_hopf: malformed cycle");
      if (S().is_active(nxt)) eng.flip_activity(nxt);
      cur = S().dual(nxt);
      cyc.push_back(cur);
      visited.insert(cur);
      visited.insert(nxt);
    }
    cycles.push_back(std::move(cyc));
  }

  for (auto cyc : cycles) {
    if (cyc.size() == 1) {
      done.push_back(cyc.front());
      continue;
    }
    while (cyc.size() > 1) {
      const Id e = eng.shorten_cycle(cyc).first;
      cyc.erase(cyc.begin(), cyc.begin() + 2);
      cyc.insert(cyc.begin(), e);
    }
    done.push_back(cyc.front());
  }

  if (done.empty()) return eng.add_hopf_pair(ctx.g().identity()).first;
  std::sort(done.begin(), done.end());
  Id cur = done.front();
  for (std::size_t i = 1; i < done.size(); ++i) cur = eng.merge_hopf_pairs(cur, done[i]).first;
  return cur;
}

PipelineResult eliminate_type_ii(const LinkState& s, const AmbientContext& ctx) {
  require_valid(s, ctx, "eliminate_type_II");
  MoveEngine eng(ctx, s);
  eliminate_type_ii(eng);
  return {eng.state(), eng.take_trace(), 0, {}};
}

PipelineResult reduce_to_hopf(const LinkState& s, const AmbientContext& ctx) {
  require_valid(s, ctx, "reduce_to_hopf");
  MoveEngine eng(ctx, s);
  const Id h = reduce_to_hopf(eng);
  const Element lab = eng.state().circle(h).label;
  if (ctx.s_characteristic && !(ctx.g().eps(lab) == delta(s, ctx)))
    fail(ErrorCode::kInternal, "reduce_to_hopf: final label does not conserve delta");
  return {eng.state(), eng.take_trace(), h, lab};
}

PipelineResult simplify_to_hopf(const LinkState& s, const AmbientContext& ctx) {
  require_valid(s, ctx, "simplify");
  MoveEngine eng(ctx, s);
  eliminate_type_ii(eng);
  const Id h = reduce_to_hopf(eng);
  const Element lab = eng.state().circle(h).label;
  if (ctx.s_characteristic && !(ctx.g().eps(lab) == delta(s, ctx)))
    fail(ErrorCode::kInternal, "simplify: final label does not conserve delta");
  return {eng.state(), eng.take_trace(), h, lab};
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kConcordant: return "concordant";
    case Outcome::kObstructedFq: return "obstructed-fq";
    case Outcome::kObstructedKm: return "obstructed-km";
    default: return "inconclusive";
  }
}

Verdict decide(const LinkState& s, const AmbientContext& ctx0) {
  const Normalized norm = normalize_dual(ctx0);
  const AmbientContext& ctx = norm.ctx;
  const GroupModel& g = ctx.g();
  require_valid(s, ctx, "decide");

  Verdict v;
  v.notes = norm.notes;
  v.initial_hash = state_hash(g, s);
  MoveEngine eng(ctx, s);
  auto finish = [&](Outcome o, F2Vec cls, std::string reason) {
    v.outcome = o;
    v.cls = std::move(cls);
    v.reason = std::move(reason);
    v.final_state = eng.state();
    v.final_hash = state_hash(g, eng.state());
    v.trace = eng.take_trace();
    return v;
  };

  const F2Vec m = mu(s, ctx);
  const auto f = ctx.mu_pi3.reduce(m);
  if (!f.is_zero) return finish(Outcome::kObstructedFq, f.rep, "fq is nonzero");
  if (!m.is_zero())
    return finish(Outcome::kInconclusive, F2Vec(m.size()),
                  "mu is nonzero on this representative; the decision needs a representative with mu = 0");

  eliminate_type_ii(eng);

  if (!ctx.s_characteristic) {
    while (!eng.state().clasps().empty()) {
      const IdPair k = eng.state().clasps().begin()->first;
      const Id xd = eng.state().dual(k.first);
      const auto [n, nd] = eng.clasp_finger(k.first, k.second);
      const auto [p, pd] = eng.clasp_finger(nd, xd);
      (void)pd;
      eng.ambient_surgery(n);
      eng.ambient_surgery(p);
    }
    while (!eng.state().circles().empty()) eng.ambient_surgery(eng.state().circles().begin()->first);
    return finish(Outcome::kConcordant, F2Vec(g.h1_dim()), "fq = 0 with a framed dual sphere");
  }

  const Id h = reduce_to_hopf(eng);
  const Element lab = eng.state().circle(h).label;
  const F2Vec e = g.eps(lab);
  if (!(e == delta(s, ctx))) fail(ErrorCode::kInternal, "decide: final label does not conserve delta");
  if (e.is_zero()) {
    const Id inv = eng.add_hopf_pair(g.inv(lab)).first;
    const Id one = eng.merge_hopf_pairs(h, inv).first;
    const Id extra = eng.add_hopf_pair(g.identity()).first;
    eng.remove_trivial_hopf_pairs(one, extra);
    return finish(Outcome::kConcordant, F2Vec(g.h1_dim()), "final Hopf label is trivial in H1(X;Z/2)");
  }
  const auto k = ctx.delta_self.reduce(e);
  if (!k.is_zero) return finish(Outcome::kObstructedKm, k.rep, "km is nonzero");
  return finish(Outcome::kInconclusive, F2Vec(g.h1_dim()),
                "km vanishes only in the quotient; no state-level change of representative is available");
}

Json verdict_to_json(const Verdict& v, const GroupModel& g) {
  return Json{{"verdict", outcome_name(v.outcome)},
              {"class", v.cls.bits()},
              {"reason", v.reason},
              {"notes", v.notes},
              {"final_state", state_to_json(g, v.final_state)},
              {"trace", trace_to_json(v.trace, v.initial_hash, v.final_hash)}};
}

}  // namespace sconc
