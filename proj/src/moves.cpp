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

#include "moves.hpp"

#include <algorithm>
#include <set>

#include "error.hpp"

namespace sconc {

namespace {

[[noreturn]] void pre_fail(const std::string& msg) { fail(ErrorCode::kPrecondition, msg); }

std::string ids(Id a) { return std::to_string(a); }
std::string ids(Id a, Id b) { return std::to_string(a) + "," + std::to_string(b); }

void require_type_i(const LinkState& s, Id c, const char* move) {
  if (!s.has(c)) fail(ErrorCode::kNotFound, std::string(move) + ": unknown circle " + ids(c));
  if (s.is_type_ii(c)) pre_fail(std::string(move) + ": circle " + ids(c) + " is type II");
}

void require_dual_sphere(const AmbientContext& ctx, const char* move) {
  if (ctx.dual_sphere == DualSphere::kNone)
    fail(ErrorCode::kApplicability, std::string(move) + " needs a dual sphere in the context");
}

// Removes clasps between c and any other circle; self-clasps stay.
void drop_foreign_clasps(LinkState& s, Id c) {
  const int self = s.clasp_count(c, c);
  s.drop_clasps_of(c);
  if (self > 0) s.add_clasps(c, c, self);
}

// One clasp for every linked pair touching a circle in `fresh`.
void seed_clasps(LinkState& s, const std::set<Id>& fresh) {
  const auto entries = s.lk_entries();
  for (const auto& [a, b] : entries)
    if (fresh.count(a) || fresh.count(b)) s.add_clasps(a, b);
}

int bit(const Json& j) {
  const int v = j.get<int>();
  if (v != 0 && v != 1) fail(ErrorCode::kInvalidArgument, "expected a bit, got " + j.dump());
  return v;
}

Id id_param(const Json& p, const char* k) {
  if (!p.is_object() || !p.contains(k)) fail(ErrorCode::kParse, std::string("missing parameter '") + k + "'");
  return p.at(k).get<Id>();
}

}  // namespace

Json record_to_json(const MoveRecord& r) {
  Json j{{"move", r.name}, {"params", r.params}};
  if (!r.pre_hash.empty()) j["pre"] = r.pre_hash;
  if (!r.post_hash.empty()) j["post"] = r.post_hash;
  return j;
}

MoveRecord record_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("move")) fail(ErrorCode::kParse, "move record needs a 'move' field");
  MoveRecord r;
  r.name = j.at("move").get<std::string>();
  r.params = j.value("params", Json::object());
  r.pre_hash = j.value("pre", "");
  r.post_hash = j.value("post", "");
  return r;
}

Json trace_to_json(const Trace& t, const std::string& initial_hash, const std::string& final_hash) {
  Json steps = Json::array();
  for (const auto& r : t) steps.push_back(record_to_json(r));
  return Json{{"schema", kTraceSchema}, {"initial", initial_hash}, {"final", final_hash}, {"steps", steps}};
}

Json SplitSpec::to_json() const {
  Json j{{"mode", "split"}, {"pair", pair}, {"nu_dual", nu_dual}, {"belts", belts}, {"clean", clean}};
  auto rows = [](const std::map<Id, std::array<int, 2>>& m) {
    Json out = Json::array();
    for (const auto& [x, b] : m) out.push_back({x, b[0], b[1]});
    return out;
  };
  j["sigma"] = rows(sigma);
  j["sigma_dual"] = rows(sigma_dual);
  if (cross) j["cross"] = {{(*cross)[0][0], (*cross)[0][1]}, {(*cross)[1][0], (*cross)[1][1]}};
  if (nu) j["nu"] = *nu;
  return j;
}

SplitSpec SplitSpec::from_json(const Json& j) {
  SplitSpec s;
  s.pair = id_param(j, "pair");
  auto rows = [](const Json& a, std::map<Id, std::array<int, 2>>& m) {
    for (const auto& r : a) {
      if (!r.is_array() || r.size() != 3) fail(ErrorCode::kParse, "split rows are [id, bit, bit]");
      m[r[0].get<Id>()] = {bit(r[1]), bit(r[2])};
    }
  };
  if (j.contains("sigma")) rows(j.at("sigma"), s.sigma);
  if (j.contains("sigma_dual")) rows(j.at("sigma_dual"), s.sigma_dual);
  if (j.contains("cross")) {
    const Json& c = j.at("cross");
    if (!c.is_array() || c.size() != 2 || c[0].size() != 2 || c[1].size() != 2)
      fail(ErrorCode::kParse, "cross is a 2x2 bit matrix");
    s.cross = std::array<std::array<int, 2>, 2>{{{bit(c[0][0]), bit(c[0][1])}, {bit(c[1][0]), bit(c[1][1])}}};
  }
  if (j.contains("nu")) s.nu = bit(j.at("nu"));
  s.nu_dual = j.contains("nu_dual") ? bit(j.at("nu_dual")) : 0;
  s.belts = j.value("belts", 0);
  s.clean = j.value("clean", false);
  return s;
}

void apply_twists(LinkState& s, const std::vector<Id>& linkers, int k) {
  if (k < 0) k = -k;
  for (std::size_t i = 0; i < linkers.size(); ++i) {
    for (std::size_t j = i + 1; j < linkers.size(); ++j) {
      if (k % 2) s.flip_lk(linkers[i], linkers[j]);
      s.add_clasps(linkers[i], linkers[j], k);
    }
  }
}

MoveEngine::MoveEngine(const AmbientContext& ctx, LinkState s, bool hash_steps)
    : ctx_(ctx), s_(std::move(s)), hash_steps_(hash_steps) {}

void MoveEngine::commit(const std::string& name, Json params, LinkState next) {
  MoveRecord r{name, std::move(params), "", ""};
  if (hash_steps_) {
    r.pre_hash = trace_.empty() ? state_hash(ctx_.g(), s_) : trace_.back().post_hash;
    r.post_hash = state_hash(ctx_.g(), next);
  }
  s_ = std::move(next);
  trace_.push_back(std::move(r));
}

std::pair<Id, Id> MoveEngine::clasp_finger(Id a, Id b) {
  const GroupModel& g = ctx_.g();
  if (!s_.has(a) || !s_.has(b)) fail(ErrorCode::kNotFound, "clasp_finger: unknown circle in " + ids(a, b));
  if (s_.clasp_count(a, b) == 0) pre_fail("clasp_finger: no clasp between " + ids(a, b));
  LinkState n = s_;
  n.remove_clasp(a, b);
  if (a != b) n.flip_lk(a, b);
  const Element e = g.mul(g.inv(s_.label_of(g, b)), s_.label_of(g, a));
  const Id ad = s_.dual(a), bd = s_.dual(b);
  auto [E, Ed] = n.add_pair(e);
  n.set_lk(E, bd, true);
  n.add_clasps(E, bd);
  n.set_lk(Ed, ad, true);
  n.add_clasps(Ed, ad);
  for (Id t : {a, b}) {
    if (!s_.is_type_ii(t)) continue;
    for (const auto& [k, v] : s_.tw())
      if (k.first == t || k.second == t) n.set_tw(k.first, k.second, n.tw_value(k.first, k.second) ^ 1);
  }
  commit("clasp_finger", Json{{"a", a}, {"b", b}}, std::move(n));
  return {E, Ed};
}

std::pair<Id, Id> MoveEngine::trivial_finger(const Element& g) {
  const Element x = ctx_.g().normalize(g);
  LinkState n = s_;
  auto ids_new = n.add_pair(x);
  commit("trivial_finger", Json{{"g", element_to_json(ctx_.g(), x)}}, std::move(n));
  return ids_new;
}

Id MoveEngine::introduce_type_ii() {
  const GroupModel& g = ctx_.g();
  LinkState n = s_;
  const Id t = n.add_type_ii(g.identity());
  for (Id c : type_ii_circles(s_))
    if (g.is_identity(s_.circle(c).label)) n.set_tw(c, t, 0);
  commit("introduce_type_II", Json::object(), std::move(n));
  return t;
}

void MoveEngine::flip_activity(Id c) {
  if (!s_.has(c)) fail(ErrorCode::kNotFound, "flip_activity: unknown circle " + ids(c));
  commit("flip_activity", Json{{"c", c}}, sconc::flip_activity(s_, ctx_, c));
}

SplitResult MoveEngine::whitney_split(const SplitSpec& spec) {
  const GroupModel& g = ctx_.g();
  require_type_i(s_, spec.pair, "whitney_move");
  const Id A = s_.active_of(spec.pair), Ad = s_.dual(A);
  if (spec.belts < 0) fail(ErrorCode::kInvalidArgument, "whitney_move: negative intersection count");
  if (spec.clean && spec.belts != 0) fail(ErrorCode::kInvalidArgument, "whitney_move: a clean move has no intersections");

  std::set<Id> thirds;
  for (Id x : s_.linked(A)) thirds.insert(x);
  for (Id x : s_.linked(Ad)) thirds.insert(x);
  thirds.erase(A);
  thirds.erase(Ad);
  for (const auto* m : {&spec.sigma, &spec.sigma_dual}) {
    for (const auto& [x, b] : *m) {
      if (!s_.has(x) || x == A || x == Ad) fail(ErrorCode::kInvalidArgument, "whitney_move: bad split row for " + ids(x));
    }
  }
  auto row = [&](const std::map<Id, std::array<int, 2>>& m, Id side, Id x) -> std::array<int, 2> {
    const int l = s_.lk(side, x) ? 1 : 0;
    auto it = m.find(x);
    if (it == m.end()) return {l, 0};
    if (((it->second[0] + it->second[1]) & 1) != l)
      fail(ErrorCode::kInvalidArgument, "whitney_move: split row for " + ids(x) + " does not sum to its linking");
    return it->second;
  };

  const int lkaa = s_.lk(A, Ad) ? 1 : 0;
  const auto cross = spec.cross.value_or(std::array<std::array<int, 2>, 2>{{{lkaa, 0}, {0, 0}}});
  if (((cross[0][0] + cross[0][1] + cross[1][0] + cross[1][1]) & 1) != lkaa)
    fail(ErrorCode::kInvalidArgument, "whitney_move: cross bits do not sum to lk(A,A')");

  std::map<Id, std::array<int, 2>> rs, rt;
  int s1 = 0, t1 = 0;
  for (Id x : thirds) {
    rs[x] = row(spec.sigma, A, x);
    rt[x] = row(spec.sigma_dual, Ad, x);
    s1 += rs[x][0];
    t1 += rt[x][0];
  }
  const int forced = (s1 + t1 + spec.nu_dual + cross[0][1] + cross[1][0] + spec.belts) & 1;
  int nu = spec.nu.value_or(forced);
  if (ctx_.parity_rule_applies() && nu != forced)
    pre_fail("whitney_move: nu=" + std::to_string(nu) + " breaks the dual-pair parity; the context forces " +
             std::to_string(forced));

  LinkState n = s_;
  drop_foreign_clasps(n, A);
  drop_foreign_clasps(n, Ad);
  const Element a = s_.circle(A).label;
  auto [A2, A2d] = n.add_pair(a);
  for (Id x : thirds) {
    n.set_lk(A, x, rs[x][0]);
    n.set_lk(A2, x, rs[x][1]);
    n.set_lk(Ad, x, rt[x][0]);
    n.set_lk(A2d, x, rt[x][1]);
  }
  n.set_lk(A, Ad, cross[0][0]);
  n.set_lk(A, A2d, cross[0][1]);
  n.set_lk(A2, Ad, cross[1][0]);
  n.set_lk(A2, A2d, cross[1][1]);
  n.set_lk(A, A2, nu);
  n.set_lk(Ad, A2d, spec.nu_dual);
  SplitResult res{A2, A2d, {}};
  std::set<Id> fresh{A, Ad, A2, A2d};
  for (int k = 0; k < spec.belts; ++k) {
    auto [B, Bd] = n.add_pair(g.identity());
    n.set_lk(B, A, true);
    n.set_lk(B, A2, true);
    fresh.insert(B);
    res.belts.push_back(B);
  }
  seed_clasps(n, fresh);

  SplitSpec rec = spec;
  rec.pair = A;
  rec.sigma = rs;
  rec.sigma_dual = rt;
  rec.cross = cross;
  rec.nu = nu;
  commit("whitney_move", rec.to_json(), std::move(n));
  return res;
}

std::vector<Id> MoveEngine::whitney_merge(Id x, Id y, int belts, bool clean) {
  const GroupModel& g = ctx_.g();
  require_type_i(s_, x, "whitney_move");
  require_type_i(s_, y, "whitney_move");
  if (belts < 0) fail(ErrorCode::kInvalidArgument, "whitney_move: negative intersection count");
  if (clean && belts != 0) fail(ErrorCode::kInvalidArgument, "whitney_move: a clean move has no intersections");
  const Id xd = s_.dual(x), yd = s_.dual(y);
  if (x == y || y == xd) pre_fail("whitney_move: merge needs circles from two different pairs");
  if (!g.equal(s_.label_of(g, x), s_.label_of(g, y)))
    pre_fail("whitney_move: labels of " + ids(x, y) + " are not compatible");

  auto img = [&](Id c) { return c == y ? x : c == yd ? xd : c; };
  LinkState n = s_;
  std::vector<std::pair<IdPair, int>> moved;
  for (const auto& [k, m] : s_.clasps()) {
    const bool touches = k.first == y || k.second == y || k.first == yd || k.second == yd ||
                         k.first == x || k.second == x || k.first == xd || k.second == xd;
    if (touches) moved.push_back({key(img(k.first), img(k.second)), m});
  }
  std::map<Id, int> row, row_d;
  for (Id c : {x, y})
    for (Id z : s_.linked(c)) row[z] ^= 1;
  for (Id c : {xd, yd})
    for (Id z : s_.linked(c)) row_d[z] ^= 1;
  const int mutual = (s_.lk(x, xd) + s_.lk(x, yd) + s_.lk(y, xd) + s_.lk(y, yd)) & 1;

  n.erase(y);
  n.erase(yd);
  n.drop_clasps_of(x);
  n.drop_clasps_of(xd);
  for (Id c : s_.linked(x)) if (n.has(c)) n.set_lk(x, c, false);
  for (Id c : s_.linked(xd)) if (n.has(c)) n.set_lk(xd, c, false);
  for (const auto& [z, v] : row)
    if (z != x && z != y && z != xd && z != yd) n.set_lk(x, z, v);
  for (const auto& [z, v] : row_d)
    if (z != x && z != y && z != xd && z != yd) n.set_lk(xd, z, v);
  n.set_lk(x, xd, mutual);
  for (const auto& [k, m] : moved) n.add_clasps(k.first, k.second, m);

  std::vector<Id> out;
  for (int k = 0; k < belts; ++k) out.push_back(n.add_pair(g.identity()).first);
  commit("whitney_move", Json{{"mode", "merge"}, {"x", x}, {"y", y}, {"belts", belts}, {"clean", clean}}, std::move(n));
  return out;
}

std::pair<Id, Id> MoveEngine::whitney_pair_type_ii(Id a, Id b) {
  const GroupModel& g = ctx_.g();
  if (!s_.has(a) || !s_.has(b)) fail(ErrorCode::kNotFound, "whitney_pair_typeII: unknown circle in " + ids(a, b));
  if (a == b || !s_.is_type_ii(a) || !s_.is_type_ii(b)) pre_fail("whitney_pair_typeII: needs two distinct type II circles");
  const Element lab = s_.circle(a).label;
  if (!g.equal(lab, s_.circle(b).label)) pre_fail("whitney_pair_typeII: labels of " + ids(a, b) + " differ");
  std::vector<Id> ra, rb;
  for (Id x : s_.linked(a)) if (x != b) ra.push_back(x);
  for (Id x : s_.linked(b)) if (x != a) rb.push_back(x);
  if (ctx_.parity_rule_applies() && (ra.size() % 2) != (rb.size() % 2))
    pre_fail("whitney_pair_typeII: circles " + ids(a, b) + " link the rest with different parity");
  int nu = s_.tw_value(a, b) + static_cast<int>(ra.size());
  for (Id c : type_ii_circles(s_)) {
    if (c == a || c == b || !g.equal(s_.circle(c).label, lab)) continue;
    nu += s_.tw_value(a, c) + s_.tw_value(b, c);
  }
  LinkState n = s_;
  n.erase(a);
  n.erase(b);
  auto [P, Pd] = n.add_pair(lab);
  for (Id x : ra) n.set_lk(P, x, true);
  for (Id x : rb) n.set_lk(Pd, x, true);
  n.set_lk(P, Pd, nu & 1);
  seed_clasps(n, {P, Pd});
  commit("whitney_pair_typeII", Json{{"a", a}, {"b", b}}, std::move(n));
  return {P, Pd};
}

void MoveEngine::ambient_surgery(Id c) {
  require_dual_sphere(ctx_, "ambient_surgery");
  require_type_i(s_, c, "ambient_surgery");
  const Id cd = s_.dual(c);
  if (!s_.is_split(cd)) pre_fail("ambient_surgery: dual circle " + ids(cd) + " of " + ids(c) + " is not split");
  const std::vector<Id> linkers = s_.linked(c);
  LinkState n = s_;
  n.erase(c);
  n.erase(cd);
  if (ctx_.dual_sphere == DualSphere::kUnframed) apply_twists(n, linkers, 1);
  commit("ambient_surgery", Json{{"c", c}}, std::move(n));
}

std::pair<Id, Id> MoveEngine::merge_hopf_pairs(Id a, Id b) {
  const GroupModel& g = ctx_.g();
  require_type_i(s_, a, "merge_hopf_pairs");
  require_type_i(s_, b, "merge_hopf_pairs");
  const Id A = s_.active_of(a), B = s_.active_of(b);
  if (A == B) pre_fail("merge_hopf_pairs: needs two different pairs");
  if (!s_.is_hopf_pair(A) || !s_.is_hopf_pair(B)) pre_fail("merge_hopf_pairs: inputs " + ids(A, B) + " are not split Hopf pairs");
  const Element lab = g.mul(s_.circle(B).label, s_.circle(A).label);
  LinkState n = s_;
  for (Id c : {A, s_.dual(A), B, s_.dual(B)}) n.erase(c);
  auto out = n.add_pair(lab);
  n.set_lk(out.first, out.second, true);
  n.add_clasps(out.first, out.second);
  commit("merge_hopf_pairs", Json{{"a", A}, {"b", B}}, std::move(n));
  return out;
}

void MoveEngine::remove_trivial_hopf_pairs(Id a, Id b) {
  const GroupModel& g = ctx_.g();
  require_dual_sphere(ctx_, "remove_trivial_hopf_pairs");
  require_type_i(s_, a, "remove_trivial_hopf_pairs");
  require_type_i(s_, b, "remove_trivial_hopf_pairs");
  const Id A = s_.active_of(a), B = s_.active_of(b);
  if (A == B) pre_fail("remove_trivial_hopf_pairs: needs two different pairs");
  if (!s_.is_hopf_pair(A) || !s_.is_hopf_pair(B)) pre_fail("remove_trivial_hopf_pairs: inputs are not split Hopf pairs");
  if (!g.is_identity(s_.circle(A).label) || !g.is_identity(s_.circle(B).label))
    pre_fail("remove_trivial_hopf_pairs: labels must be the identity");
  LinkState n = s_;
  for (Id c : {A, s_.dual(A), B, s_.dual(B)}) n.erase(c);
  commit("remove_trivial_hopf_pairs", Json{{"a", A}, {"b", B}}, std::move(n));
}

std::pair<Id, Id> MoveEngine::move_meridian(Id x, Id e) {
  require_type_i(s_, e, "move_meridian");
  if (!s_.has(x)) fail(ErrorCode::kNotFound, "move_meridian: unknown circle " + ids(x));
  if (e == x || s_.linked(e) != std::vector<Id>{x}) pre_fail("move_meridian: " + ids(e) + " is not a meridian of " + ids(x));
  if (s_.dual(e) == x) pre_fail("move_meridian: " + ids(e) + " and " + ids(x) + " form one pair");
  auto out = clasp_finger(e, x);
  ambient_surgery(s_.dual(e));
  return out;
}

std::pair<Id, Id> MoveEngine::shorten_cycle(const std::vector<Id>& cycle) {
  const std::size_t m = cycle.size();
  if (m < 2) pre_fail("shorten_cycle: a cycle needs at least two pairs");
  if (ctx_.dual_sphere != DualSphere::kUnframed)
    fail(ErrorCode::kApplicability, "shorten_cycle relies on the twist of an unframed dual sphere");
  std::set<Id> seen;
  for (std::size_t i = 0; i < m; ++i) {
    const Id a = cycle[i];
    require_type_i(s_, a, "shorten_cycle");
    if (!s_.is_active(a)) pre_fail("shorten_cycle: " + ids(a) + " is not an active circle");
    if (!seen.insert(a).second) pre_fail("shorten_cycle: repeated pair " + ids(a));
  }
  for (std::size_t i = 0; i < m; ++i) {
    const Id a = cycle[i], nd = s_.dual(cycle[(i + 1) % m]);
    if (s_.linked(a) != std::vector<Id>{nd} || s_.linked(nd) != std::vector<Id>{a})
      pre_fail("shorten_cycle: " + ids(a) + " must link exactly " + ids(nd));
    if (s_.clasp_count(a, nd) != 1 || s_.foreign_clasps(a) != 1 || s_.foreign_clasps(nd) != 1)
      pre_fail("shorten_cycle: link " + ids(a, nd) + " must be realized by a single clasp");
  }
  const Id a1 = cycle[0], a2 = cycle[1];
  auto out = clasp_finger(a1, s_.dual(a2));
  ambient_surgery(s_.dual(a1));
  ambient_surgery(a2);
  return out;
}

std::pair<Id, Id> MoveEngine::add_hopf_pair(const Element& g0) {
  const GroupModel& g = ctx_.g();
  const Element x = g.normalize(g0);
  if (!g.eps(x).is_zero()) pre_fail("add_hopf_pair: " + element_str(x) + " is nonzero in H1(X;Z/2)");
  const Word w = g.balanced_word(x);
  const SplitSpec hopf_split = [] {
    SplitSpec s;
    s.cross = std::array<std::array<int, 2>, 2>{{{1, 0}, {0, 1}}};
    s.nu_dual = 0;
    s.clean = true;
    return s;
  }();
  auto split_trivial = [&](const Element& lab) {
    SplitSpec s = hopf_split;
    s.pair = trivial_finger(lab).first;
    const SplitResult r = whitney_split(s);
    return std::array<Id, 2>{s.pair, r.a2};
  };
  if (w.empty()) {
    auto p = split_trivial(g.identity());
    return merge_hopf_pairs(p[0], p[1]);
  }

  const std::size_t ng = g.generators().size();
  std::vector<int> pos(ng, 0), neg(ng, 0);
  for (const Letter& l : w) (l.sign > 0 ? pos : neg)[l.gen]++;
  std::vector<std::vector<Id>> pool_pos(ng), pool_neg(ng);
  for (std::size_t i = 0; i < ng; ++i) {
    const int total = pos[i] + neg[i];
    if (total == 0) continue;
    if (total % 2) fail(ErrorCode::kInternal, "add_hopf_pair: unbalanced word");
    std::vector<Id> made;
    for (int k = 0; k < total / 2; ++k)
      for (Id c : split_trivial(g.generators()[i])) made.push_back(c);
    for (int k = 0; k < neg[i]; ++k) {
      flip_activity(made[k]);
      pool_neg[i].push_back(s_.dual(made[k]));
    }
    for (std::size_t k = neg[i]; k < made.size(); ++k) pool_pos[i].push_back(made[k]);
  }
  std::vector<Id> letters;
  std::vector<std::size_t> used_pos(ng, 0), used_neg(ng, 0);
  for (const Letter& l : w) {
    if (l.sign > 0) letters.push_back(pool_pos[l.gen][used_pos[l.gen]++]);
    else letters.push_back(pool_neg[l.gen][used_neg[l.gen]++]);
  }
  std::pair<Id, Id> cur{letters.back(), s_.dual(letters.back())};
  for (std::size_t k = letters.size() - 1; k-- > 0;) cur = merge_hopf_pairs(cur.first, letters[k]);
  return cur;
}

void MoveEngine::apply(const std::string& name, const Json& p) {
  const GroupModel& g = ctx_.g();
  if (name == "clasp_finger") {
    clasp_finger(id_param(p, "a"), id_param(p, "b"));
  } else if (name == "trivial_finger") {
    if (!p.contains("g")) fail(ErrorCode::kParse, "trivial_finger needs 'g'");
    trivial_finger(element_from_json(g, p.at("g")));
  } else if (name == "introduce_type_II") {
    introduce_type_ii();
  } else if (name == "flip_activity") {
    flip_activity(id_param(p, "c"));
  } else if (name == "whitney_move") {
    const std::string mode = p.value("mode", "");
    if (mode == "split") whitney_split(SplitSpec::from_json(p));
    else if (mode == "merge") whitney_merge(id_param(p, "x"), id_param(p, "y"), p.value("belts", 0), p.value("clean", false));
    else fail(ErrorCode::kParse, "whitney_move mode must be split or merge");
  } else if (name == "whitney_pair_typeII") {
    whitney_pair_type_ii(id_param(p, "a"), id_param(p, "b"));
  } else if (name == "ambient_surgery") {
    ambient_surgery(id_param(p, "c"));
  } else if (name == "merge_hopf_pairs") {
    merge_hopf_pairs(id_param(p, "a"), id_param(p, "b"));
  } else if (name == "remove_trivial_hopf_pairs") {
    remove_trivial_hopf_pairs(id_param(p, "a"), id_param(p, "b"));
  } else if (name == "move_meridian") {
    move_meridian(id_param(p, "x"), id_param(p, "e"));
  } else if (name == "shorten_cycle") {
    if (!p.contains("cycle")) fail(ErrorCode::kParse, "shorten_cycle needs 'cycle'");
    shorten_cycle(p.at("cycle").get<std::vector<Id>>());
  } else if (name == "add_hopf_pair") {
    if (!p.contains("g")) fail(ErrorCode::kParse, "add_hopf_pair needs 'g'");
    add_hopf_pair(element_from_json(g, p.at("g")));
  } else {
    fail(ErrorCode::kParse, "unknown move '" + name + "'");
  }
}

ScriptResult apply_script(const LinkState& s, const AmbientContext& ctx, const Json& script) {
  if (!script.is_array()) fail(ErrorCode::kParse, "script must be a list of move records");
  MoveEngine eng(ctx, s);
  std::string cur;
  for (std::size_t i = 0; i < script.size(); ++i) {
    try {
      const MoveRecord r = record_from_json(script[i]);
      if (!r.pre_hash.empty()) {
        if (cur.empty()) cur = state_hash(ctx.g(), eng.state());
        if (r.pre_hash != cur) fail(ErrorCode::kPrecondition, "pre-state hash mismatch");
      }
      const std::size_t before = eng.trace().size();
      eng.apply(r.name, r.params);
      cur = eng.trace().size() > before ? eng.trace().back().post_hash : state_hash(ctx.g(), eng.state());
      if (!r.post_hash.empty() && r.post_hash != cur) fail(ErrorCode::kPrecondition, "post-state hash mismatch");
    } catch (const Error& e) {
      fail(e.code(), "step " + std::to_string(i) + ": " + e.what());
    } catch (const Json::exception& e) {
      fail(ErrorCode::kParse, "step " + std::to_string(i) + ": " + e.what());
    }
  }
  return {eng.state(), eng.take_trace()};
}

}  // namespace sconc
