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

// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "catalog.hpp"
#include "diagoracle.hpp"
#include "error.hpp"
#include "invariants.hpp"
#include "moves.hpp"
#include "serialize.hpp"
#include "simplify.hpp"
#include "sweep.hpp"

namespace {

using namespace sconc;

struct Result {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_s(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

Scenario shipped(const std::string& name) { return load_scenario(std::string(SCONC_SOURCE_DIR) + "/scenarios/" + name + ".json"); }

std::shared_ptr<const GroupModel> grp(const std::string& n) { return std::make_shared<const GroupModel>(named_group(n)); }

Result move_invariance() {
  const auto t0 = std::chrono::steady_clock::now();
  const SweepReport r = run_sweep(1, 1000);
  const double t = seconds_since(t0);
  Result out;
  out.pass = r.states >= 1000 && r.violations == 0 && t < 60.0 && r.per_move.size() >= 12;
  out.detail = std::to_string(r.states) + " states, " + std::to_string(r.moves) + " moves, " +
               std::to_string(r.per_move.size()) + " move kinds, " + std::to_string(r.violations) + " violations, " + fmt_s(t);
  if (!r.messages.empty()) out.detail += "; first: " + r.messages.front();
  return out;
}

Result pipeline_conservation() {
  Rng rng(2);
  int states = 0, bad = 0;
  std::string first;
  const auto groups = sweep_groups();
  for (int i = 0; i < 250; ++i) {
    const AmbientContext ctx = sweep_context(grp(groups[i % groups.size()]), true);
    const LinkState s = random_state(ctx, rng);
    ++states;
    try {
      const PipelineResult r = simplify_to_hopf(s, ctx);
      const std::string initial = state_hash(ctx.g(), s), final_hash = state_hash(ctx.g(), r.state);
      const auto replay = apply_script(s, ctx, trace_to_json(r.trace, initial, final_hash)["steps"]);
      const bool ok = ctx.g().eps(r.label) == delta(s, ctx) && r.state.circles().size() == 2 &&
                      r.state.is_hopf_pair(r.hopf) && state_hash(ctx.g(), replay.state) == final_hash;
      if (!ok && first.empty()) first = "state " + std::to_string(i) + " conservation or replay mismatch";
      bad += !ok;
    } catch (const Error& e) {
      ++bad;
      if (first.empty()) first = "state " + std::to_string(i) + ": " + e.what();
    }
  }
  return {bad == 0 && states >= 200, std::to_string(states) + " states, " + std::to_string(bad) + " failures" +
                                         (first.empty() ? "" : "; first: " + first)};
}

Element iterate_shorten(const AmbientContext& ctx, const std::vector<Element>& labels) {
  LinkState s;
  std::vector<Id> cyc;
  for (const auto& g : labels) cyc.push_back(s.add_pair(g).first);
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    const Id d = s.dual(cyc[(i + 1) % cyc.size()]);
    s.set_lk(cyc[i], d, true);
    s.add_clasps(cyc[i], d);
  }
  MoveEngine eng(ctx, s, false);
  while (cyc.size() > 1) {
    const Id e = eng.shorten_cycle(cyc).first;
    cyc.erase(cyc.begin(), cyc.begin() + 2);
    cyc.insert(cyc.begin(), eng.state().active_of(e));
  }
  if (!eng.state().is_hopf_pair(cyc[0]) || eng.state().circles().size() != 2) return {-1};
  return eng.state().label_of(ctx.g(), cyc[0]);
}

Result label_algebra() {
  AmbientContext ctx = AmbientContext::make(grp("Q8"));
  ctx.s_characteristic = true;
  ctx.dual_sphere = DualSphere::kUnframed;
  const GroupModel& g = ctx.g();
  const auto els = g.elements();
  long cycles = 0, bad = 0;
  for (std::size_t m = 2; m <= 5; ++m) {
    std::vector<std::size_t> idx(m, 0);
    while (true) {
      std::vector<Element> labels;
      Element want = g.identity();
      for (std::size_t k : idx) {
        labels.push_back(els[k]);
        want = g.mul(els[k], want);
      }
      ++cycles;
      bad += iterate_shorten(ctx, labels) != want;
      std::size_t p = 0;
      while (p < m && ++idx[p] == els.size()) idx[p++] = 0;
      if (p == m) break;
    }
  }
  return {bad == 0, std::to_string(cycles) + " labeled cycles of length 2..5 over Q8, " + std::to_string(bad) + " mismatches"};
}

Result balanced_words() {
  const auto t0 = std::chrono::steady_clock::now();
  long groups = 0, elements = 0, bad = 0;
  for (const auto& name : small_group_names()) {
    const GroupModel g = named_group(name);
    ++groups;
    for (const auto& x : g.elements()) {
      if (!g.eps(x).is_zero()) continue;
      ++elements;
      const Word w = g.balanced_word(x);
      std::vector<int> parity(g.generators().size(), 0);
      for (const auto& l : w) parity[static_cast<std::size_t>(l.gen)] ^= 1;
      bool ok = g.eval(w) == x;
      for (int p : parity) ok = ok && p == 0;
      bad += !ok;
    }
  }
  const double t = seconds_since(t0);
  return {bad == 0 && t < 5.0, std::to_string(groups) + " groups, " + std::to_string(elements) + " kernel elements, " +
                                   std::to_string(bad) + " failures, " + fmt_s(t)};
}

Result decision_endpoints() {
  std::string detail;
  bool pass = true;
  const Scenario odd = shipped("b3s1-odd");
  const Verdict vo = decide(odd.state, odd.ctx);
  const bool odd_ok = vo.outcome == Outcome::kObstructedKm && vo.cls == F2Vec::from_bits({1});
  detail += std::string("b3s1-odd ") + outcome_name(vo.outcome) + " class " + vo.cls.str();
  const Scenario even = shipped("b3s1-even");
  const Verdict ve = decide(even.state, even.ctx);
  const bool even_ok = ve.outcome == Outcome::kConcordant && ve.final_state.circles().empty();
  detail += std::string(", b3s1-even ") + outcome_name(ve.outcome) + " with " +
            std::to_string(ve.final_state.circles().size()) + " circles left";
  Rng rng(5);
  int n = 0, concordant = 0;
  const auto groups = sweep_groups();
  for (int i = 0; i < 200; ++i) {
    const AmbientContext ctx = sweep_context(grp(groups[i % groups.size()]), false);
    const LinkState s = random_state(ctx, rng);
    ++n;
    const Verdict v = decide(s, ctx);
    concordant += v.outcome == Outcome::kConcordant && v.final_state.circles().empty();
  }
  detail += ", random non-characteristic " + std::to_string(concordant) + "/" + std::to_string(n) + " concordant";
  pass = odd_ok && even_ok && concordant == n;
  return {pass, detail};
}

Result bounds() {
  const std::vector<std::pair<std::string, uint64_t>> want{
      {"s3s1", 1}, {"b3s1-odd", 2}, {"b3s1-even", 2}, {"z4-schar", 4}, {"q8-typeII", 2}};
  bool pass = true;
  std::string detail;
  for (const auto& [name, v] : want) {
    const auto b = concordance_bound(shipped(name).ctx);
    pass = pass && b && *b == v;
    if (!detail.empty()) detail += ", ";
    detail += name + " " + (b ? std::to_string(*b) : "n/a");
  }
  return {pass, detail};
}

Result oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  int cases = 0;
  std::size_t mism = 0;
  std::string first;
  for (const auto& r : diag::crosscheck_all()) {
    cases += r.cases;
    mism += r.mismatches.size();
    if (first.empty() && !r.mismatches.empty()) first = r.rule + ": " + r.mismatches.front();
  }
  const double t = seconds_since(t0);
  return {mism == 0 && t < 10.0, std::to_string(cases) + " cases over " + std::to_string(diag::rule_names().size()) +
                                     " rules, " + std::to_string(mism) + " mismatches, " + fmt_s(t) +
                                     (first.empty() ? "" : "; first: " + first)};
}

// Parity checked straight from the lk entries.
bool parity_ok(const LinkState& s) {
  std::map<Id, int> row;
  for (const auto& [a, b] : s.lk_entries()) {
    row[a] ^= 1;
    row[b] ^= 1;
  }
  for (const auto& [a, ad] : type_i_pairs(s))
    if (row[a] != row[ad]) return false;
  return true;
}

Result parity_guard() {
  Rng rng(8);
  long reached = 0, bad = 0;
  const auto groups = sweep_groups();
  for (int i = 0; i < 400; ++i) {
    const AmbientContext ctx = sweep_context(grp(groups[i % groups.size()]), true);
    const LinkState s0 = random_state(ctx, rng);
    ++reached;
    bad += !parity_ok(s0);
    for (const auto& [name, params] : random_moves(s0, ctx, rng)) {
      MoveEngine eng(ctx, s0, false);
      try {
        eng.apply(name, params);
      } catch (const Error&) {
        continue;
      }
      ++reached;
      bad += !parity_ok(eng.state());
    }
    LinkState cur = s0;
    for (int step = 0; step < 8; ++step) {
      auto cand = random_moves(cur, ctx, rng);
      if (cand.empty()) break;
      const auto& [name, params] = cand[rng() % cand.size()];
      MoveEngine eng(ctx, cur, false);
      try {
        eng.apply(name, params);
      } catch (const Error&) {
        continue;
      }
      cur = eng.state();
      ++reached;
      bad += !parity_ok(cur);
    }
    if (i % 4 == 0) {
      MoveEngine eng(ctx, s0, false);
      eliminate_type_ii(eng);
      reduce_to_hopf(eng);
      LinkState replay = s0;
      for (const auto& rec : eng.trace()) {
        MoveEngine one(ctx, replay, false);
        one.apply(rec.name, rec.params);
        replay = one.state();
        ++reached;
        bad += !parity_ok(replay);
      }
    }
  }
  return {bad == 0, std::to_string(reached) + " reachable characteristic states, " + std::to_string(bad) + " parity violations"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"move invariance of mu and delta", move_invariance},
      {"pipeline conservation and replay", pipeline_conservation},
      {"cycle label algebra over Q8", label_algebra},
      {"balanced words for small groups", balanced_words},
      {"decision endpoints", decision_endpoints},
      {"concordance bounds", bounds},
      {"diagram oracle agreement", oracle},
      {"dual parity under characteristic contexts", parity_guard},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    failed += !r.pass;
    std::printf("criterion %zu %s: %s (%s)\n", i + 1, r.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
