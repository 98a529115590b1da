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

#include "sweep.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "catalog.hpp"
#include "error.hpp"
#include "invariants.hpp"

namespace sconc {

namespace {

int coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng) ? 1 : 0; }

template <typename T>
const T& pick(const std::vector<T>& v, Rng& rng) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Element random_involution_or_one(const GroupModel& g, Rng& rng) {
  const auto& t = g.two_torsion();
  if (t.empty() || coin(rng, 0.3)) return g.identity();
  return pick(t, rng);
}

}  // namespace

Element random_element(const GroupModel& g, Rng& rng) {
  if (g.is_finite()) return {uniform(rng, 0, static_cast<int>(g.order()) - 1)};
  const GroupSpec& s = g.spec();
  Element e;
  for (int i = 0; i < s.rank; ++i) e.push_back(uniform(rng, -3, 3));
  for (int64_t n : s.torsion) e.push_back(uniform(rng, 0, static_cast<int>(n) - 1));
  return g.normalize(e);
}

AmbientContext sweep_context(std::shared_ptr<const GroupModel> g, bool s_characteristic) {
  AmbientContext ctx = AmbientContext::make(std::move(g));
  ctx.s_characteristic = s_characteristic;
  ctx.dual_sphere = s_characteristic ? DualSphere::kUnframed : DualSphere::kFramed;
  ctx.mu_pi3_zero = true;
  return ctx;
}

LinkState random_state(const AmbientContext& ctx, Rng& rng, const GenOptions& opt) {
  const GroupModel& g = ctx.g();
  LinkState s;
  s.set_tag("alpha");

  // Generic part: pairs and type II circles with random linking.
  std::vector<Id> generic;
  std::vector<std::vector<Id>> objects;  // circles of each pair / type II circle
  const int np = uniform(rng, 0, opt.max_pairs);
  for (int i = 0; i < np; ++i) {
    auto [a, b] = s.add_pair(random_element(g, rng));
    generic.push_back(a);
    generic.push_back(b);
    objects.push_back({a, b});
  }
  std::vector<std::vector<Id>> classes;
  const int nc = uniform(rng, 0, opt.max_type_ii_classes);
  for (int c = 0; c < nc; ++c) {
    const Element lab = random_involution_or_one(g, rng);
    if (std::any_of(classes.begin(), classes.end(), [&](const auto& cl) { return g.equal(s.circle(cl.front()).label, lab); }))
      continue;
    int size = g.is_identity(lab) ? uniform(rng, 1, 3) : 2 * uniform(rng, 1, 2);
    if (opt.allow_mu && !g.is_identity(lab) && coin(rng, 0.3)) size -= 1;
    std::vector<Id> cl;
    for (int k = 0; k < size; ++k) {
      const Id t = s.add_type_ii(lab);
      cl.push_back(t);
      generic.push_back(t);
      objects.push_back({t});
    }
    classes.push_back(cl);
  }
  for (std::size_t i = 0; i < generic.size(); ++i)
    for (std::size_t j = i + 1; j < generic.size(); ++j)
      if (coin(rng, opt.link_density)) s.set_lk(generic[i], generic[j], true);

  // Repair: pairs need equal parities on both circles, type II circles
  // need even totals. Defects come in even number; fix them two at a time.
  std::vector<std::size_t> defects;
  for (std::size_t o = 0; o < objects.size(); ++o) {
    int p = 0;
    for (Id c : objects[o]) p ^= s.lk_total(c);
    if (p) defects.push_back(o);
  }
  for (std::size_t k = 0; k + 1 < defects.size(); k += 2) {
    const Id u = pick(objects[defects[k]], rng), v = pick(objects[defects[k + 1]], rng);
    s.flip_lk(u, v);
  }

  for (const auto& [a, b] : s.lk_entries()) s.add_clasps(a, b, coin(rng, 0.15) ? 3 : 1);
  for (std::size_t i = 0; i < generic.size(); ++i) {
    if (coin(rng, 0.1)) s.add_clasps(generic[i], generic[i]);
    for (std::size_t j = i + 1; j < generic.size(); ++j)
      if (!s.lk(generic[i], generic[j]) && coin(rng, 0.05)) s.add_clasps(generic[i], generic[j], 2);
  }

  for (const auto& cl : classes) {
    std::vector<int> tau;
    for (std::size_t k = 0; k < cl.size(); ++k) tau.push_back(coin(rng, 0.5));
    const int c0 = coin(rng, 0.5);
    for (std::size_t i = 0; i < cl.size(); ++i)
      for (std::size_t j = i + 1; j < cl.size(); ++j) s.set_tw(cl[i], cl[j], tau[i] ^ tau[j] ^ c0);
  }

  if (opt.gadgets) {
    const int nh = uniform(rng, 0, 2);
    for (int i = 0; i < nh; ++i) {
      auto [a, b] = s.add_pair(coin(rng, 0.5) ? g.identity() : random_element(g, rng));
      s.set_lk(a, b, true);
      s.add_clasps(a, b);
    }
    if (coin(rng, 0.5)) {
      const int m = uniform(rng, 2, 4);
      std::vector<std::pair<Id, Id>> ps;
      for (int i = 0; i < m; ++i) ps.push_back(s.add_pair(random_element(g, rng)));
      for (int i = 0; i < m; ++i) {
        const Id a = ps[i].first, bd = ps[(i + 1) % m].second;
        s.set_lk(a, bd, true);
        s.add_clasps(a, bd);
      }
    }
  }
  return s;
}

namespace {

bool splits_after_finger(const LinkState& s, Id e, Id x) {
  return s.linked(e) == std::vector<Id>{x} && s.clasp_count(e, x) == 1 && s.foreign_clasps(e) == 1 && !s.is_type_ii(e);
}

std::vector<Id> find_cycle(const LinkState& s, Id a) {
  std::vector<Id> cyc{a};
  Id cur = a;
  for (std::size_t guard = 0; guard < s.circles().size(); ++guard) {
    const auto nb = s.linked(cur);
    if (nb.size() != 1) return {};
    const Id nxt = nb.front();
    if (s.is_type_ii(nxt) || s.is_active(nxt)) return {};
    if (s.linked(nxt).size() != 1 || s.clasp_count(cur, nxt) != 1 || s.foreign_clasps(cur) != 1 || s.foreign_clasps(nxt) != 1)
      return {};
    const Id na = s.dual(nxt);
    if (na == a) return cyc.size() >= 2 ? cyc : std::vector<Id>{};
    if (std::find(cyc.begin(), cyc.end(), na) != cyc.end()) return {};
    cyc.push_back(na);
    cur = na;
  }
  return {};
}

}  // namespace

std::vector<std::pair<std::string, Json>> random_moves(const LinkState& s, const AmbientContext& ctx, Rng& rng) {
  const GroupModel& g = ctx.g();
  std::vector<std::pair<std::string, Json>> out;
  std::vector<Id> type_i, type_ii, actives;
  for (const auto& [id, c] : s.circles()) {
    if (c.type == CircleType::kTypeII) type_ii.push_back(id);
    else type_i.push_back(id);
    if (c.role == Role::kActive) actives.push_back(id);
  }

  if (!s.clasps().empty()) {
    std::vector<IdPair> ks;
    for (const auto& kv : s.clasps()) ks.push_back(kv.first);
    const IdPair k = pick(ks, rng);
    out.push_back({"clasp_finger", Json{{"a", k.first}, {"b", k.second}}});
  }
  out.push_back({"trivial_finger", Json{{"g", element_to_json(g, random_element(g, rng))}}});
  out.push_back({"introduce_type_II", Json::object()});
  if (!type_i.empty()) out.push_back({"flip_activity", Json{{"c", pick(type_i, rng)}}});

  if (!actives.empty()) {
    const Id a = pick(actives, rng), ad = s.dual(a);
    SplitSpec sp;
    sp.pair = a;
    std::set<Id> thirds;
    for (Id x : s.linked(a)) thirds.insert(x);
    for (Id x : s.linked(ad)) thirds.insert(x);
    thirds.erase(a);
    thirds.erase(ad);
    for (Id x : thirds) {
      const int l = s.lk(a, x), ld = s.lk(ad, x);
      const int b = coin(rng, 0.5), bd = coin(rng, 0.5);
      sp.sigma[x] = {b, b ^ l};
      sp.sigma_dual[x] = {bd, bd ^ ld};
    }
    std::array<std::array<int, 2>, 2> c{};
    c[0][1] = coin(rng, 0.5);
    c[1][0] = coin(rng, 0.5);
    c[1][1] = coin(rng, 0.5);
    c[0][0] = (s.lk(a, ad) + c[0][1] + c[1][0] + c[1][1]) & 1;
    sp.cross = c;
    sp.nu_dual = coin(rng, 0.5);
    sp.belts = uniform(rng, 0, 2);
    out.push_back({"whitney_move", sp.to_json()});
  }

  std::vector<std::pair<Id, Id>> merges;
  for (std::size_t i = 0; i < type_i.size(); ++i)
    for (std::size_t j = i + 1; j < type_i.size(); ++j) {
      const Id x = type_i[i], y = type_i[j];
      if (s.dual(x) != y && g.equal(s.label_of(g, x), s.label_of(g, y))) merges.emplace_back(x, y);
    }
  if (!merges.empty()) {
    const auto [x, y] = pick(merges, rng);
    out.push_back({"whitney_move", Json{{"mode", "merge"}, {"x", x}, {"y", y}, {"belts", uniform(rng, 0, 2)}, {"clean", false}}});
  }

  std::vector<std::pair<Id, Id>> t2pairs;
  for (std::size_t i = 0; i < type_ii.size(); ++i)
    for (std::size_t j = i + 1; j < type_ii.size(); ++j) {
      const Id a = type_ii[i], b = type_ii[j];
      if (!g.equal(s.circle(a).label, s.circle(b).label)) continue;
      if (ctx.parity_rule_applies() && s.lk_total(a) != s.lk_total(b)) continue;
      t2pairs.emplace_back(a, b);
    }
  if (!t2pairs.empty()) {
    const auto [a, b] = pick(t2pairs, rng);
    out.push_back({"whitney_pair_typeII", Json{{"a", a}, {"b", b}}});
  }

  if (ctx.dual_sphere != DualSphere::kNone) {
    std::vector<Id> surg;
    for (Id c : type_i) if (s.is_split(s.dual(c))) surg.push_back(c);
    if (!surg.empty()) out.push_back({"ambient_surgery", Json{{"c", pick(surg, rng)}}});
  }

  std::vector<std::pair<Id, Id>> mers;
  if (ctx.dual_sphere != DualSphere::kNone)
    for (Id e : type_i) {
      const auto nb = s.linked(e);
      if (nb.size() == 1 && nb.front() != s.dual(e) && splits_after_finger(s, e, nb.front())) mers.emplace_back(nb.front(), e);
    }
  if (!mers.empty()) {
    const auto [x, e] = pick(mers, rng);
    out.push_back({"move_meridian", Json{{"x", x}, {"e", e}}});
  }

  if (ctx.dual_sphere == DualSphere::kUnframed) {
    std::vector<std::vector<Id>> cycles;
    for (Id a : actives) {
      auto c = find_cycle(s, a);
      if (!c.empty()) cycles.push_back(std::move(c));
    }
    if (!cycles.empty()) out.push_back({"shorten_cycle", Json{{"cycle", pick(cycles, rng)}}});
  }

  std::vector<Id> hopf, trivial_hopf;
  for (Id a : actives)
    if (s.is_hopf_pair(a)) {
      hopf.push_back(a);
      if (g.is_identity(s.circle(a).label)) trivial_hopf.push_back(a);
    }
  if (hopf.size() >= 2) {
    std::vector<Id> h = hopf;
    std::shuffle(h.begin(), h.end(), rng);
    out.push_back({"merge_hopf_pairs", Json{{"a", h[0]}, {"b", h[1]}}});
  }
  if (trivial_hopf.size() >= 2 && ctx.dual_sphere != DualSphere::kNone)
    out.push_back({"remove_trivial_hopf_pairs", Json{{"a", trivial_hopf[0]}, {"b", trivial_hopf[1]}}});

  Element h = random_element(g, rng);
  if (!g.eps(h).is_zero()) h = g.mul(h, h);
  out.push_back({"add_hopf_pair", Json{{"g", element_to_json(g, h)}}});
  return out;
}

Json SweepReport::to_json() const {
  return Json{{"states", states},         {"moves", moves},   {"parity_checks", parity_checks},
              {"violations", violations}, {"per_move", per_move}, {"messages", messages}};
}

std::vector<std::string> sweep_groups() { return {"Z", "Z/2", "Z/4", "Z2xZ2", "Q8"}; }

namespace {

bool uses_surgery(const std::string& name) {
  return name == "ambient_surgery" || name == "move_meridian" || name == "shorten_cycle";
}

bool all_pairs_balanced(const LinkState& s) {
  for (const auto& [a, ad] : type_i_pairs(s))
    if (!dual_parity_holds(s, a)) return false;
  return true;
}

// Outside s-characteristic contexts delta is only an invariant of states
// whose dual pairs have equal parity, and framed surgery is excluded.
bool delta_applies(const AmbientContext& ctx, const LinkState& s, const std::string& name) {
  if (ctx.s_characteristic) return true;
  return !uses_surgery(name) && all_pairs_balanced(s);
}

struct Checker {
  const AmbientContext& ctx;
  SweepReport& rep;
  std::string where;

  void violation(const std::string& msg) {
    ++rep.violations;
    if (rep.messages.size() < 20) rep.messages.push_back(where + ": " + msg);
  }

  // Applies one move and checks the invariants. Returns false when the
  // move could not be applied.
  bool step(LinkState& s, const std::string& name, const Json& params) {
    MoveEngine eng(ctx, s, false);
    try {
      eng.apply(name, params);
    } catch (const Error& e) {
      violation(name + " " + params.dump() + " rejected: " + e.what());
      return false;
    }
    const LinkState& t = eng.state();
    ++rep.moves;
    ++rep.per_move[name];
    const auto vr = validate(t, ctx);
    if (!vr.empty()) violation(name + " " + params.dump() + " produced invalid state: " + vr.front().rule + " " + vr.front().detail);
    if (!(mu(s, ctx) == mu(t, ctx))) violation(name + " changed mu");
    if (delta_applies(ctx, s, name) && !(delta(s, ctx) == delta(t, ctx)))
      violation(name + " " + params.dump() + " changed delta");
    if (s.homology_tag() != t.homology_tag()) violation(name + " changed the homology tag");
    if (ctx.parity_rule_applies()) {
      for (const auto& [a, ad] : type_i_pairs(t)) {
        ++rep.parity_checks;
        if (!dual_parity_holds(t, a)) violation(name + " broke dual-pair parity at " + std::to_string(a));
      }
    }
    s = t;
    return true;
  }
};

}  // namespace

SweepReport run_sweep(uint64_t seed, int count, int threads, int walk_length) {
  const auto names = sweep_groups();
  std::vector<std::shared_ptr<const GroupModel>> groups;
  for (const auto& n : names) groups.push_back(std::make_shared<const GroupModel>(named_group(n)));

  std::vector<SweepReport> parts(static_cast<std::size_t>(std::max(count, 0)));
  auto work = [&](int i) {
    SweepReport& rep = parts[static_cast<std::size_t>(i)];
    Rng rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<uint64_t>(i));
    const std::size_t gi = static_cast<std::size_t>(i) % groups.size();
    const bool schar = (i / static_cast<int>(groups.size())) % 2 == 0;
    const AmbientContext ctx = sweep_context(groups[gi], schar);
    Checker chk{ctx, rep, "state " + std::to_string(i) + " (" + names[gi] + (schar ? ", s-char" : ", framed") + ")"};
    const LinkState s0 = random_state(ctx, rng);
    ++rep.states;
    const auto v0 = validate(s0, ctx);
    if (!v0.empty()) {
      chk.violation("generator produced invalid state: " + v0.front().rule);
      return;
    }
    for (const auto& [name, params] : random_moves(s0, ctx, rng)) {
      LinkState s = s0;
      chk.step(s, name, params);
    }
    LinkState s = s0;
    for (int k = 0; k < walk_length; ++k) {
      auto cands = random_moves(s, ctx, rng);
      // Keep walks from growing without bound.
      if (s.circles().size() > 24)
        std::erase_if(cands, [](const auto& c) { return c.first == "trivial_finger" || c.first == "add_hopf_pair" || c.first == "introduce_type_II"; });
      if (cands.empty()) break;
      const auto& [name, params] = pick(cands, rng);
      if (!chk.step(s, name, params)) break;
    }
  };

  threads = std::max(1, threads);
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      for (int i = w; i < count; i += threads) work(i);
    });
  for (auto& t : pool) t.join();

  SweepReport total;
  for (const auto& p : parts) {
    total.states += p.states;
    total.moves += p.moves;
    total.parity_checks += p.parity_checks;
    total.violations += p.violations;
    for (const auto& [k, v] : p.per_move) total.per_move[k] += v;
    for (const auto& m : p.messages)
      if (total.messages.size() < 20) total.messages.push_back(m);
  }
  return total;
}

}  // namespace sconc
