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

#include "diagoracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "error.hpp"
#include "moves.hpp"

namespace sconc::diag {

int Diagram::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < components.size(); ++i)
    if (components[i].name == name) return static_cast<int>(i);
  fail(ErrorCode::kNotFound, "diagram has no component '" + name + "'");
}

std::vector<std::string> check(const Diagram& d) {
  std::map<int, std::pair<int, int>> seen;  // id -> (#over, #under)
  for (const auto& c : d.components)
    for (const auto& v : c.visits) (v.over ? seen[v.crossing].first : seen[v.crossing].second)++;
  std::vector<std::string> out;
  for (const auto& [id, ou] : seen) {
    if (ou.first != 1 || ou.second != 1) out.push_back("crossing " + std::to_string(id) + " is not visited once over and once under");
    if (!d.signs.count(id)) out.push_back("crossing " + std::to_string(id) + " has no sign");
  }
  for (const auto& [id, s] : d.signs) {
    if (!seen.count(id)) out.push_back("crossing " + std::to_string(id) + " is never visited");
    if (s != 1 && s != -1) out.push_back("crossing " + std::to_string(id) + " has sign other than +-1");
  }
  return out;
}

Linking lk_diagram(const Diagram& d, const std::string& a, const std::string& b) {
  const int ia = d.index_of(a), ib = d.index_of(b);
  if (ia == ib) fail(ErrorCode::kInvalidArgument, "lk_diagram needs two different components");
  std::map<int, int> where;  // crossing -> bitmask of {a, b} visits
  for (const auto& v : d.components[ia].visits) where[v.crossing] |= 1;
  for (const auto& v : d.components[ib].visits) where[v.crossing] |= 2;
  int sum = 0;
  for (const auto& [id, mask] : where)
    if (mask == 3) sum += d.signs.at(id);
  if (sum % 2) fail(ErrorCode::kInternal, "odd signed crossing count between " + a + " and " + b);
  const int v = sum / 2;
  return {v, std::abs(v) % 2};
}

Diagram rotate_component(const Diagram& d, const std::string& name, int k) {
  Diagram out = d;
  auto& vs = out.components[static_cast<std::size_t>(out.index_of(name))].visits;
  if (!vs.empty()) {
    const int n = static_cast<int>(vs.size());
    std::rotate(vs.begin(), vs.begin() + ((k % n) + n) % n, vs.end());
  }
  return out;
}

namespace {

using std::numbers::pi;

// Fixed generic rotation; keeps every shipped scene free of degenerate
// projections.
Point rotate(const Point& p) {
  const double a = 0.4137, b = 0.2931, c = 0.1789;
  const double ca = std::cos(a), sa = std::sin(a), cb = std::cos(b), sb = std::sin(b), cc = std::cos(c), sc = std::sin(c);
  Point q = {p[0], ca * p[1] - sa * p[2], sa * p[1] + ca * p[2]};
  q = {cb * q[0] + sb * q[2], q[1], -sb * q[0] + cb * q[2]};
  return {cc * q[0] - sc * q[1], sc * q[0] + cc * q[1], q[2]};
}

double cross2(double ax, double ay, double bx, double by) { return ax * by - ay * bx; }

struct Seg {
  int comp;
  int idx;
  Point p, q;
  double minx, maxx, miny, maxy;
};

enum class Plane { kXY, kXZ, kYZ };

Polyline circle(Point c, double r, Plane pl, int n = 48) {
  Polyline out;
  for (int i = 0; i < n; ++i) {
    const double t = 2 * pi * i / n;
    const double u = r * std::cos(t), v = r * std::sin(t);
    switch (pl) {
      case Plane::kXY: out.push_back({c[0] + u, c[1] + v, c[2]}); break;
      case Plane::kXZ: out.push_back({c[0] + u, c[1], c[2] + v}); break;
      case Plane::kYZ: out.push_back({c[0], c[1] + u, c[2] + v}); break;
    }
  }
  return out;
}

int param(const Params& p, const char* k, int def) {
  auto it = p.find(k);
  return it == p.end() ? def : it->second;
}

Scene3 meridians_with_twist(int k, int m) {
  Scene3 s;
  s.components.push_back({"A", circle({0, 0, -1.5}, 2.0, Plane::kXY, 64)});
  const int steps = 48 * std::max(1, std::abs(k));
  for (int i = 0; i < m; ++i) {
    const double phi = 2 * pi * i / m, rho = 0.5, R = 4.0 + i;
    Polyline c;
    c.push_back({rho * std::cos(phi), rho * std::sin(phi), -3.0});
    for (int j = 0; j <= steps; ++j) {
      const double z = -1.0 + 2.0 * j / steps;
      const double ang = phi + 2 * pi * k * (z + 1.0) / 2.0;
      c.push_back({rho * std::cos(ang), rho * std::sin(ang), z});
    }
    c.push_back({rho * std::cos(phi), rho * std::sin(phi), 3.0});
    c.push_back({R * std::cos(phi), R * std::sin(phi), 3.0});
    c.push_back({R * std::cos(phi), R * std::sin(phi), -3.0});
    s.components.push_back({"C" + std::to_string(i + 1), c});
  }
  return s;
}

Polyline rectangle(double x0, double x1, double y0, double y1) {
  return {{x0, y0, 0}, {x1, y0, 0}, {x1, y1, 0}, {x0, y1, 0}};
}

Scene3 band_belt(int n) {
  const double eps = 0.2;
  Scene3 s;
  s.components.push_back({"A1", rectangle(-2.0, -eps, -1.0, 1.0)});
  s.components.push_back({"A2", rectangle(eps, 2.0, -1.0, 1.0)});
  for (int j = 0; j < n; ++j) {
    const double y = -0.6 + 1.2 * (j + 0.5) / std::max(n, 1);
    s.components.push_back({"B" + std::to_string(j + 1), circle({0, y, 0}, 0.5, Plane::kXZ)});
  }
  return s;
}

// Circle through the plane z = 0 piercing it at x = cx - r and x = cx + r.
Polyline piercing(double cx, double cy, double r) { return circle({cx, cy, 0}, r, Plane::kXZ); }

Scene3 band_sum(int p, int q, int joined) {
  Scene3 s;
  const double eps = 0.15, th = std::asin(eps);
  if (joined) {
    Polyline ab;
    const int n = 48;
    for (int i = 0; i <= n; ++i) {
      const double t = th + (2 * pi - 2 * th) * i / n;
      ab.push_back({-2 + std::cos(t), std::sin(t), 0});
    }
    for (int i = 0; i <= n; ++i) {
      const double t = pi + th + (2 * pi - 2 * th) * i / n;
      ab.push_back({2 + std::cos(t), std::sin(t), 0});
    }
    s.components.push_back({"AB", ab});
  } else {
    s.components.push_back({"A", circle({-2, 0, 0}, 1.0, Plane::kXY)});
    s.components.push_back({"B", circle({2, 0, 0}, 1.0, Plane::kXY)});
  }
  Polyline x;
  if (p && q) x = piercing(0, 0, 2.0);
  else if (p) x = piercing(-3, 0, 1.0);
  else if (q) x = piercing(3, 0, 1.0);
  else x = piercing(0, 5, 0.5);
  s.components.push_back({"X", x});
  return s;
}

// variant 0: clasp between circles of two pairs; 1: self-clasp; 2: clasp
// between the two circles of one pair.
Scene3 clasp_scene(int variant, int after) {
  Scene3 s;
  if (variant == 0) {
    s.components.push_back({"A", circle({0, 0, 0}, 1.0, Plane::kXY)});
    s.components.push_back({"B", circle({after ? 3.0 : 1.0, 0, 0}, 1.0, Plane::kXZ)});
    s.components.push_back({"Ad", circle({10, 0, 0}, 1.0, Plane::kXY)});
    s.components.push_back({"Bd", circle({20, 0, 0}, 1.0, Plane::kXY)});
    if (after) {
      s.components.push_back({"M1", piercing(11, 0, 0.5)});
      s.components.push_back({"M2", piercing(21, 0, 0.5)});
    }
  } else if (variant == 1) {
    s.components.push_back({"A", circle({0, 0, 0}, 1.0, Plane::kXY)});
    s.components.push_back({"Ad", circle({10, 0, 0}, 1.0, Plane::kXY)});
    if (after) {
      s.components.push_back({"M1", piercing(11, 0, 0.5)});
      s.components.push_back({"M2", piercing(11, 0.3, 0.5)});
    }
  } else {
    s.components.push_back({"A", circle({0, 0, 0}, 1.0, Plane::kXY)});
    s.components.push_back({"Ad", circle({after ? 3.0 : 1.0, 0, 0}, 1.0, Plane::kXZ)});
    if (after) {
      s.components.push_back({"M1", piercing(-1, 0, 0.5)});
      s.components.push_back({"M2", circle({4, 0, 0}, 0.5, Plane::kXY)});
    }
  }
  return s;
}

Scene3 torus_link(int k) {
  Scene3 s;
  const double R = 2.0, r = 0.7;
  const int n = 64 * std::max(1, std::abs(k));
  for (int j = 0; j < 2; ++j) {
    Polyline c;
    for (int i = 0; i < n; ++i) {
      const double th = 2 * pi * i / n, ph = k * th + pi * j;
      c.push_back({(R + r * std::cos(ph)) * std::cos(th), (R + r * std::cos(ph)) * std::sin(th), r * std::sin(ph)});
    }
    s.components.push_back({j ? "B" : "A", c});
  }
  return s;
}

}  // namespace

Diagram project(const Scene3& sc) {
  std::vector<Seg> segs;
  for (std::size_t ci = 0; ci < sc.components.size(); ++ci) {
    const Polyline& pl = sc.components[ci].second;
    for (std::size_t i = 0; i < pl.size(); ++i) {
      const Point p = rotate(pl[i]), q = rotate(pl[(i + 1) % pl.size()]);
      segs.push_back({static_cast<int>(ci), static_cast<int>(i), p, q, std::min(p[0], q[0]), std::max(p[0], q[0]),
                      std::min(p[1], q[1]), std::max(p[1], q[1])});
    }
  }
  struct Hit {
    int seg;
    double t;
    int crossing;
    bool over;
  };
  std::vector<std::vector<Hit>> hits(sc.components.size());
  Diagram d;
  int next = 1;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const Seg& a = segs[i];
      const Seg& b = segs[j];
      if (a.maxx < b.minx || b.maxx < a.minx || a.maxy < b.miny || b.maxy < a.miny) continue;
      if (a.comp == b.comp) {
        const int n = static_cast<int>(sc.components[a.comp].second.size());
        const int gap = std::abs(a.idx - b.idx);
        if (gap <= 1 || gap == n - 1) continue;
      }
      const double dax = a.q[0] - a.p[0], day = a.q[1] - a.p[1];
      const double dbx = b.q[0] - b.p[0], dby = b.q[1] - b.p[1];
      const double den = cross2(dax, day, dbx, dby);
      if (std::abs(den) < 1e-14) continue;
      const double wx = b.p[0] - a.p[0], wy = b.p[1] - a.p[1];
      const double t = cross2(wx, wy, dbx, dby) / den;
      const double u = cross2(wx, wy, dax, day) / den;
      if (t < 0 || t >= 1 || u < 0 || u >= 1) continue;
      const double za = a.p[2] + t * (a.q[2] - a.p[2]);
      const double zb = b.p[2] + u * (b.q[2] - b.p[2]);
      const bool a_over = za > zb;
      const double s = a_over ? cross2(dax, day, dbx, dby) : cross2(dbx, dby, dax, day);
      const int id = next++;
      d.signs[id] = s > 0 ? 1 : -1;
      hits[a.comp].push_back({a.idx, t, id, a_over});
      hits[b.comp].push_back({b.idx, u, id, !a_over});
    }
  }
  for (std::size_t ci = 0; ci < sc.components.size(); ++ci) {
    auto& h = hits[ci];
    std::sort(h.begin(), h.end(), [](const Hit& x, const Hit& y) { return x.seg != y.seg ? x.seg < y.seg : x.t < y.t; });
    Component c{sc.components[ci].first, {}};
    for (const auto& x : h) c.visits.push_back({x.crossing, x.over});
    d.components.push_back(std::move(c));
  }
  return d;
}

std::vector<std::string> scene_names() {
  return {"hopf", "unlink", "torus-link", "meridians-with-twist", "band-belt", "band-sum", "clasp"};
}

Diagram scene(const std::string& name, const Params& p) {
  if (name == "hopf") {
    Scene3 s;
    s.components.push_back({"A", circle({0, 0, 0}, 1.0, Plane::kXY)});
    s.components.push_back({"B", circle({1, 0, 0}, 1.0, Plane::kXZ)});
    return project(s);
  }
  if (name == "unlink") {
    Scene3 s;
    s.components.push_back({"A", circle({0, 0, 0}, 1.0, Plane::kXY)});
    s.components.push_back({"B", circle({3, 0, 0}, 1.0, Plane::kXZ)});
    return project(s);
  }
  if (name == "torus-link") return project(torus_link(param(p, "k", 2)));
  if (name == "meridians-with-twist") {
    const int m = param(p, "m", 2);
    if (m < 1 || m > 8) fail(ErrorCode::kInvalidArgument, "meridians-with-twist needs 1 <= m <= 8");
    return project(meridians_with_twist(param(p, "k", 0), m));
  }
  if (name == "band-belt") {
    const int n = param(p, "n", 1);
    if (n < 0 || n > 8) fail(ErrorCode::kInvalidArgument, "band-belt needs 0 <= n <= 8");
    return project(band_belt(n));
  }
  if (name == "band-sum") return project(band_sum(param(p, "p", 1) & 1, param(p, "q", 1) & 1, param(p, "joined", 1) & 1));
  if (name == "clasp") {
    const int v = param(p, "variant", 0);
    if (v < 0 || v > 2) fail(ErrorCode::kInvalidArgument, "clasp variant is 0, 1 or 2");
    return project(clasp_scene(v, param(p, "after", 1) & 1));
  }
  fail(ErrorCode::kNotFound, "unknown scene '" + name + "'");
}

std::string scene_key(const std::string& name, const Params& p) {
  std::string k = name;
  for (const auto& [a, v] : p) k += "_" + a + "=" + std::to_string(v);
  return k;
}

std::string encode(const Diagram& d) {
  std::ostringstream out;
  out << "# sconc-diagram/1\n";
  for (const auto& c : d.components) {
    out << c.name << ":";
    for (const auto& v : c.visits) {
      const int s = d.signs.at(v.crossing);
      out << " (" << v.crossing << "," << (v.over ? "over" : "under") << "," << (s > 0 ? "+1" : "-1") << ")";
    }
    out << "\n";
  }
  return out.str();
}

Diagram decode(const std::string& text) {
  Diagram d;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) fail(ErrorCode::kParse, "diagram line without ':'");
    Component c{line.substr(0, colon), {}};
    std::size_t pos = colon + 1;
    while ((pos = line.find('(', pos)) != std::string::npos) {
      const auto close = line.find(')', pos);
      if (close == std::string::npos) fail(ErrorCode::kParse, "unterminated visit");
      std::string body = line.substr(pos + 1, close - pos - 1);
      std::replace(body.begin(), body.end(), ',', ' ');
      std::istringstream f(body);
      int id = 0, sign = 0;
      std::string ou;
      if (!(f >> id >> ou >> sign) || (ou != "over" && ou != "under"))
        fail(ErrorCode::kParse, "bad visit '" + line.substr(pos, close - pos + 1) + "'");
      auto [it, fresh] = d.signs.emplace(id, sign);
      if (!fresh && it->second != sign) fail(ErrorCode::kParse, "crossing " + std::to_string(id) + " has two signs");
      c.visits.push_back({id, ou == "over"});
      pos = close + 1;
    }
    d.components.push_back(std::move(c));
  }
  return d;
}

namespace {

struct Abstract {
  std::shared_ptr<const GroupModel> g;
  AmbientContext ctx;
};

Abstract z_context(DualSphere dual, bool schar) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::kAbelian;
  s.rank = 1;
  s.generators = {{1}};
  auto g = std::make_shared<const GroupModel>(GroupModel::build(s));
  AmbientContext ctx = AmbientContext::make(g);
  ctx.dual_sphere = dual;
  ctx.s_characteristic = schar;
  return {g, ctx};
}

void compare(CrosscheckReport& r, const std::string& label, int oracle, int rule) {
  ++r.cases;
  std::ostringstream m;
  m << label << ": oracle " << oracle << ", rule " << rule;
  if (oracle != rule) r.mismatches.push_back(m.str());
  r.log.push_back(m.str());
}

void twist_rule(CrosscheckReport& r) {
  for (int m : {2, 3, 4}) {
    for (int k = -2; k <= 4; ++k) {
      const Diagram d = scene("meridians-with-twist", {{"k", k}, {"m", m}});
      LinkState s;
      const Id a = s.add_pair({0}).first;
      std::vector<Id> cs;
      for (int i = 0; i < m; ++i) {
        cs.push_back(s.add_pair({0}).first);
        s.set_lk(cs.back(), a, true);
      }
      apply_twists(s, s.linked(a), k);
      for (int i = 0; i < m; ++i) {
        const std::string ci = "C" + std::to_string(i + 1);
        compare(r, "k=" + std::to_string(k) + " m=" + std::to_string(m) + " lk(A," + ci + ")", lk_diagram(d, "A", ci).bit, 1);
        for (int j = i + 1; j < m; ++j) {
          const std::string cj = "C" + std::to_string(j + 1);
          const Linking l = lk_diagram(d, ci, cj);
          if (l.value != k && l.value != -k) r.mismatches.push_back("integral lk(" + ci + "," + cj + ") != +-k");
          compare(r, "k=" + std::to_string(k) + " m=" + std::to_string(m) + " lk(" + ci + "," + cj + ")", l.bit,
                  s.lk(cs[i], cs[j]));
        }
      }
    }
  }
  // ambient_surgery is the k = 1 (unframed) and k = 0 (framed) instance.
  for (DualSphere dual : {DualSphere::kUnframed, DualSphere::kFramed}) {
    const int k = dual == DualSphere::kUnframed ? 1 : 0;
    for (int m : {2, 3}) {
      Abstract ab = z_context(dual, dual == DualSphere::kUnframed);
      LinkState s;
      const Id a = s.add_pair({0}).first;
      std::vector<Id> cs;
      for (int i = 0; i < m; ++i) {
        auto [c, cd] = s.add_pair({0});
        cs.push_back(c);
        s.set_lk(c, a, true);
        s.add_clasps(c, a);
        (void)cd;
      }
      MoveEngine eng(ab.ctx, s, false);
      eng.ambient_surgery(a);
      const Diagram d = scene("meridians-with-twist", {{"k", k}, {"m", m}});
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
          compare(r, std::string("ambient_surgery ") + (k ? "unframed" : "framed") + " m=" + std::to_string(m) + " lk(C" +
                         std::to_string(i + 1) + ",C" + std::to_string(j + 1) + ")",
                  lk_diagram(d, "C" + std::to_string(i + 1), "C" + std::to_string(j + 1)).bit,
                  eng.state().lk(cs[i], cs[j]));
    }
  }
}

void belt_linking(CrosscheckReport& r) {
  for (int n = 0; n <= 3; ++n) {
    const Diagram d = scene("band-belt", {{"n", n}});
    Abstract ab = z_context(DualSphere::kFramed, false);
    LinkState s;
    const Id a = s.add_pair({1}).first;
    MoveEngine eng(ab.ctx, s, false);
    SplitSpec sp;
    sp.pair = a;
    sp.nu = 0;
    sp.belts = n;
    const SplitResult res = eng.whitney_split(sp);
    std::vector<std::pair<std::string, Id>> names{{"A1", a}, {"A2", res.a2}};
    for (int j = 0; j < n; ++j) names.push_back({"B" + std::to_string(j + 1), res.belts[static_cast<std::size_t>(j)]});
    for (std::size_t i = 0; i < names.size(); ++i)
      for (std::size_t j = i + 1; j < names.size(); ++j)
        compare(r, "n=" + std::to_string(n) + " lk(" + names[i].first + "," + names[j].first + ")",
                lk_diagram(d, names[i].first, names[j].first).bit, eng.state().lk(names[i].second, names[j].second));
  }
}

void band_sum_rule(CrosscheckReport& r) {
  for (int p = 0; p < 2; ++p) {
    for (int q = 0; q < 2; ++q) {
      const Params pp{{"p", p}, {"q", q}};
      Params parts = pp, joined = pp;
      parts["joined"] = 0;
      joined["joined"] = 1;
      const Diagram dp = scene("band-sum", parts), dj = scene("band-sum", joined);
      const Linking la = lk_diagram(dp, "A", "X"), lb = lk_diagram(dp, "B", "X"), lab = lk_diagram(dj, "AB", "X");
      if (lab.value != la.value + lb.value) r.mismatches.push_back("integral band sum fails at p,q=" + std::to_string(p) + std::to_string(q));

      Abstract ab = z_context(DualSphere::kFramed, false);
      LinkState s;
      const Id a = s.add_pair({1}).first;
      const Id b = s.add_pair({1}).first;
      const Id x = s.add_pair({0}).first;
      if (la.bit) { s.set_lk(a, x, true); s.add_clasps(a, x); }
      if (lb.bit) { s.set_lk(b, x, true); s.add_clasps(b, x); }
      MoveEngine eng(ab.ctx, s, false);
      eng.whitney_merge(a, b);
      compare(r, "p=" + std::to_string(p) + " q=" + std::to_string(q) + " lk(A#B,X)", lab.bit, eng.state().lk(a, x));
    }
  }
}

void clasp_linking(CrosscheckReport& r) {
  for (int variant = 0; variant < 3; ++variant) {
    Abstract ab = z_context(DualSphere::kUnframed, true);
    LinkState s;
    auto [A, Ad] = s.add_pair({1});
    Id B = A, Bd = Ad;
    std::vector<std::pair<std::string, Id>> names{{"A", A}, {"Ad", Ad}};
    if (variant == 0) {
      std::tie(B, Bd) = s.add_pair({2});
      names.push_back({"B", B});
      names.push_back({"Bd", Bd});
      s.set_lk(A, B, true);
      s.add_clasps(A, B);
    } else if (variant == 1) {
      s.add_clasps(A, A);
    } else {
      B = Ad;
      s.set_lk(A, Ad, true);
      s.add_clasps(A, Ad);
    }
    const std::string tag = variant == 0 ? "two pairs" : variant == 1 ? "self" : "dual";
    const Diagram pre = scene("clasp", {{"variant", variant}, {"after", 0}});
    for (std::size_t i = 0; i < names.size(); ++i)
      for (std::size_t j = i + 1; j < names.size(); ++j)
        compare(r, tag + " before lk(" + names[i].first + "," + names[j].first + ")",
                lk_diagram(pre, names[i].first, names[j].first).bit, s.lk(names[i].second, names[j].second));

    MoveEngine eng(ab.ctx, s, false);
    const auto [E, Ed] = eng.clasp_finger(A, B);
    const Diagram post = scene("clasp", {{"variant", variant}, {"after", 1}});
    // The oracle does not know which new circle is active: accept the
    // assignment of {E, E'} to {M1, M2} that matches, and report it.
    std::string best;
    int best_bad = 1 << 20;
    for (int swap = 0; swap < 2; ++swap) {
      auto all = names;
      all.push_back({"M1", swap ? Ed : E});
      all.push_back({"M2", swap ? E : Ed});
      int bad = 0;
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
          bad += lk_diagram(post, all[i].first, all[j].first).bit != eng.state().lk(all[i].second, all[j].second);
      if (bad < best_bad) {
        best_bad = bad;
        best = swap ? "E'=M1, E=M2" : "E=M1, E'=M2";
      }
    }
    ++r.cases;
    const std::string line = tag + " after: " + best + ", " + std::to_string(best_bad) + " differing entries";
    r.log.push_back(line);
    if (best_bad) r.mismatches.push_back(line);
  }
}

}  // namespace

std::vector<std::string> rule_names() { return {"twist-rule", "belt-linking", "band-sum", "clasp-finger-linking"}; }

CrosscheckReport crosscheck(const std::string& rule) {
  CrosscheckReport r;
  r.rule = rule;
  if (rule == "twist-rule") twist_rule(r);
  else if (rule == "belt-linking") belt_linking(r);
  else if (rule == "band-sum") band_sum_rule(r);
  else if (rule == "clasp-finger-linking") clasp_linking(r);
  else fail(ErrorCode::kNotFound, "unknown crosscheck rule '" + rule + "'");
  return r;
}

std::vector<CrosscheckReport> crosscheck_all() {
  std::vector<CrosscheckReport> out;
  for (const auto& r : rule_names()) out.push_back(crosscheck(r));
  return out;
}

}  // namespace sconc::diag
