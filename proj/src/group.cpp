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

#include "group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <sstream>

#include "error.hpp"

namespace sconc {
namespace {

int64_t mod(int64_t a, int64_t n) {
  const int64_t r = a % n;
  return r < 0 ? r + n : r;
}

// Integer solution c of sum_j c_j * cols[j] == target, via column Hermite
// reduction with a tracked unimodular transform.
std::optional<std::vector<int64_t>> solve_lattice(
    std::vector<std::vector<int64_t>> cols, const std::vector<int64_t>& target) {
  const std::size_t m = cols.size();
  const std::size_t d = target.size();
  std::vector<std::vector<int64_t>> u(m, std::vector<int64_t>(m, 0));
  for (std::size_t j = 0; j < m; ++j) u[j][j] = 1;
  auto colop = [&](std::size_t dst, std::size_t src, int64_t k) {
    for (std::size_t i = 0; i < d; ++i) cols[dst][i] += k * cols[src][i];
    for (std::size_t i = 0; i < m; ++i) u[dst][i] += k * u[src][i];
  };
  auto swapc = [&](std::size_t a, std::size_t b) {
    std::swap(cols[a], cols[b]);
    std::swap(u[a], u[b]);
  };
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::size_t piv = 0;
  for (std::size_t i = 0; i < d && piv < m; ++i) {
    for (;;) {
      std::size_t best = m;
      for (std::size_t c = piv; c < m; ++c) {
        if (cols[c][i] != 0 &&
            (best == m || std::llabs(cols[c][i]) < std::llabs(cols[best][i]))) {
          best = c;
        }
      }
      if (best == m) break;
      swapc(piv, best);
      bool done = true;
      for (std::size_t c = piv + 1; c < m; ++c) {
        if (cols[c][i] != 0) {
          colop(c, piv, -(cols[c][i] / cols[piv][i]));
          if (cols[c][i] != 0) done = false;
        }
      }
      if (done) break;
    }
    if (cols[piv][i] != 0) {
      pivots.emplace_back(i, piv);
      ++piv;
    }
  }
  std::vector<int64_t> y(m, 0);
  std::vector<int64_t> resid = target;
  std::size_t pk = 0;
  for (std::size_t i = 0; i < d; ++i) {
    if (pk < pivots.size() && pivots[pk].first == i) {
      const std::size_t c = pivots[pk].second;
      if (resid[i] % cols[c][i] != 0) return std::nullopt;
      y[c] = resid[i] / cols[c][i];
      for (std::size_t r = 0; r < d; ++r) resid[r] -= y[c] * cols[c][r];
      ++pk;
    } else if (resid[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<int64_t> out(m, 0);
  for (std::size_t c = 0; c < m; ++c) {
    if (y[c] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) out[j] += y[c] * u[c][j];
  }
  return out;
}

}  // namespace

std::string element_str(const Element& e) {
  if (e.size() == 1) return std::to_string(e[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

GroupModel GroupModel::build(const GroupSpec& spec) {
  GroupModel g;
  g.spec_ = spec;
  if (spec.generators.empty()) fail(ErrorCode::kInvalidArgument, "group: empty generating set");
  if (spec.generators.size() > static_cast<std::size_t>(kMaxGenerators)) {
    fail(ErrorCode::kInvalidArgument, "group: more than 16 generators");
  }
  if (!spec.generator_names.empty() && spec.generator_names.size() != spec.generators.size()) {
    fail(ErrorCode::kInvalidArgument, "group: generator_names length mismatch");
  }
  if (spec.kind == GroupSpec::Kind::kFinite) {
    g.init_finite();
  } else {
    g.init_abelian();
  }
  return g;
}

void GroupModel::init_finite() {
  const auto& t = spec_.table;
  n_ = static_cast<int>(t.size());
  if (n_ < 1 || n_ > kMaxFiniteOrder) fail(ErrorCode::kInvalidArgument, "group: table order out of range 1..255");
  tab_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (int a = 0; a < n_; ++a) {
    if (static_cast<int>(t[a].size()) != n_) fail(ErrorCode::kInvalidArgument, "group: table is not square");
    for (int b = 0; b < n_; ++b) {
      if (t[a][b] < 0 || t[a][b] >= n_) fail(ErrorCode::kInvalidArgument, "group: table entry out of range");
      tab_[static_cast<std::size_t>(a) * n_ + b] = static_cast<uint8_t>(t[a][b]);
    }
  }
  for (int a = 0; a < n_; ++a) {
    if (m(0, a) != a || m(a, 0) != a) fail(ErrorCode::kInvalidArgument, "group: element 0 is not an identity");
  }
  inv_.assign(n_, 0);
  for (int a = 0; a < n_; ++a) {
    int found = -1;
    for (int b = 0; b < n_; ++b) {
      if (m(a, b) == 0 && m(b, a) == 0) { found = b; break; }
    }
    if (found < 0) fail(ErrorCode::kInvalidArgument, "group: element " + std::to_string(a) + " has no inverse");
    inv_[a] = static_cast<uint8_t>(found);
  }
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (m(m(a, b), c) != m(a, m(b, c))) {
          fail(ErrorCode::kInvalidArgument, "group: table is not associative at (" + std::to_string(a) + "," +
                                                std::to_string(b) + "," + std::to_string(c) + ")");
        }
  for (const Element& e : spec_.generators) {
    if (e.size() != 1 || e[0] < 0 || e[0] >= n_) fail(ErrorCode::kInvalidArgument, "group: bad generator");
  }
  std::vector<char> seen(n_, 0);
  std::deque<int> q{0};
  seen[0] = 1;
  while (!q.empty()) {
    const int x = q.front();
    q.pop_front();
    for (const Element& e : spec_.generators) {
      const int y = m(x, static_cast<int>(e[0]));
      if (!seen[y]) { seen[y] = 1; q.push_back(y); }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    fail(ErrorCode::kInvalidArgument, "group: generators do not generate the group");
  }

  for (int a = 1; a < n_; ++a) if (m(a, a) == 0) two_torsion_.push_back({a});

  // Subgroup generated by all squares and commutators; the quotient is an
  // elementary abelian 2-group.
  std::vector<char> in_n(n_, 0);
  std::vector<int> nlist;
  auto add_n = [&](int x) { if (!in_n[x]) { in_n[x] = 1; nlist.push_back(x); } };
  add_n(0);
  for (int a = 0; a < n_; ++a) {
    add_n(m(a, a));
    for (int b = 0; b < n_; ++b) add_n(m(m(a, b), m(inv_[a], inv_[b])));
  }
  for (std::size_t i = 0; i < nlist.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      add_n(m(nlist[i], nlist[j]));
      add_n(m(nlist[j], nlist[i]));
    }
  }
  std::vector<int> coset(n_, -1);
  std::vector<int> reps;
  for (int a = 0; a < n_; ++a) {
    if (coset[a] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int x : nlist) coset[m(a, x)] = id;
  }
  const std::size_t qn = reps.size();
  std::size_t dim = 0;
  while ((std::size_t{1} << dim) < qn) ++dim;
  if ((std::size_t{1} << dim) != qn) fail(ErrorCode::kInternal, "group: mod-2 abelianization is not a 2-group");
  h1_dim_ = dim;
  std::vector<std::optional<F2Vec>> qvec(qn);
  qvec[coset[0]] = F2Vec(dim);
  std::size_t next_bit = 0;
  auto extend = [&](int g) {
    if (qvec[coset[g]]) return;
    F2Vec e(dim);
    e.set(next_bit++, true);
    std::vector<std::pair<int, F2Vec>> known;
    for (std::size_t c = 0; c < qn; ++c) if (qvec[c]) known.emplace_back(reps[c], *qvec[c]);
    for (auto& [r, v] : known) qvec[coset[m(r, g)]] = v + e;
  };
  for (const Element& e : spec_.generators) extend(static_cast<int>(e[0]));
  for (std::size_t c = 0; c < qn; ++c) {
    if (!qvec[c]) fail(ErrorCode::kInternal, "group: abelianization basis incomplete");
  }
  eps_table_.resize(n_);
  for (int a = 0; a < n_; ++a) eps_table_[a] = *qvec[coset[a]];
}

void GroupModel::init_abelian() {
  if (spec_.rank < 0) fail(ErrorCode::kInvalidArgument, "group: negative rank");
  for (int64_t t : spec_.torsion) {
    if (t < 2) fail(ErrorCode::kInvalidArgument, "group: torsion coefficient < 2");
  }
  const std::size_t d = coord_count();
  if (d == 0) fail(ErrorCode::kInvalidArgument, "group: trivial abelian group needs a finite table");
  for (Element& e : spec_.generators) {
    if (e.size() != d) fail(ErrorCode::kInvalidArgument, "group: generator has wrong length");
    e = normalize(e);
  }
  std::vector<std::vector<int64_t>> cols = spec_.generators;
  for (std::size_t i = 0; i < spec_.torsion.size(); ++i) {
    std::vector<int64_t> c(d, 0);
    c[spec_.rank + i] = spec_.torsion[i];
    cols.push_back(c);
  }
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<int64_t> e(d, 0);
    e[i] = 1;
    if (!solve_lattice(cols, e)) fail(ErrorCode::kInvalidArgument, "group: generators do not generate the group");
  }
  std::vector<std::size_t> even;
  for (std::size_t i = 0; i < spec_.torsion.size(); ++i) {
    if (spec_.torsion[i] % 2 == 0) even.push_back(i);
  }
  if (even.size() > 20) fail(ErrorCode::kInvalidArgument, "group: too many even torsion factors");
  for (uint64_t mask = 1; mask < (uint64_t{1} << even.size()); ++mask) {
    Element e(d, 0);
    for (std::size_t k = 0; k < even.size(); ++k) {
      if ((mask >> k) & 1u) e[spec_.rank + even[k]] = spec_.torsion[even[k]] / 2;
    }
    two_torsion_.push_back(e);
  }
  std::sort(two_torsion_.begin(), two_torsion_.end());
  h1_dim_ = static_cast<std::size_t>(spec_.rank) + even.size();
}

int64_t GroupModel::order() const {
  if (is_finite()) return n_;
  if (spec_.rank > 0) return 0;
  int64_t o = 1;
  for (int64_t t : spec_.torsion) o *= t;
  return o;
}

std::size_t GroupModel::coord_count() const {
  if (is_finite()) return 1;
  return static_cast<std::size_t>(spec_.rank) + spec_.torsion.size();
}

Element GroupModel::identity() const { return Element(coord_count(), 0); }

bool GroupModel::valid(const Element& e) const {
  if (is_finite()) return e.size() == 1 && e[0] >= 0 && e[0] < n_;
  return e.size() == coord_count();
}

Element GroupModel::normalize(const Element& e) const {
  if (!valid(e)) fail(ErrorCode::kInvalidArgument, "element " + element_str(e) + " is not in the group");
  if (is_finite()) return e;
  Element r = e;
  for (std::size_t i = 0; i < spec_.torsion.size(); ++i) {
    r[spec_.rank + i] = mod(r[spec_.rank + i], spec_.torsion[i]);
  }
  return r;
}

Element GroupModel::mul(const Element& a, const Element& b) const {
  if (is_finite()) {
    if (!valid(a) || !valid(b)) fail(ErrorCode::kInvalidArgument, "mul: element not in the group");
    return {m(static_cast<int>(a[0]), static_cast<int>(b[0]))};
  }
  Element x = normalize(a);
  const Element y = normalize(b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return normalize(x);
}

Element GroupModel::inv(const Element& a) const {
  if (is_finite()) {
    if (!valid(a)) fail(ErrorCode::kInvalidArgument, "inv: element not in the group");
    return {inv_[a[0]]};
  }
  Element x = normalize(a);
  for (int64_t& v : x) v = -v;
  return normalize(x);
}

std::vector<Element> GroupModel::elements() const {
  if (!is_finite()) fail(ErrorCode::kInvalidArgument, "elements: group is not given by a table");
  std::vector<Element> out;
  for (int a = 0; a < n_; ++a) out.push_back({a});
  return out;
}

std::string GroupModel::generator_name(int i) const {
  if (!spec_.generator_names.empty()) return spec_.generator_names[i];
  return "g" + std::to_string(i);
}

std::string GroupModel::word_str(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += " ";
    s += generator_name(w[k].gen);
    if (w[k].sign < 0) s += "^-1";
  }
  return s;
}

Element GroupModel::eval(const Word& w) const {
  Element x = identity();
  for (const Letter& l : w) {
    const Element& g = spec_.generators.at(l.gen);
    x = mul(x, l.sign > 0 ? g : inv(g));
  }
  return x;
}

int GroupModel::torsion_index(const Element& t) const {
  const Element n = normalize(t);
  auto it = std::lower_bound(two_torsion_.begin(), two_torsion_.end(), n);
  if (it == two_torsion_.end() || *it != n) return -1;
  return static_cast<int>(it - two_torsion_.begin());
}

F2Vec GroupModel::eps(const Element& g) const {
  const Element x = normalize(g);
  if (is_finite()) return eps_table_[x[0]];
  F2Vec v(h1_dim_);
  std::size_t k = 0;
  for (int i = 0; i < spec_.rank; ++i) v.set(k++, x[i] & 1);
  for (std::size_t i = 0; i < spec_.torsion.size(); ++i) {
    if (spec_.torsion[i] % 2 == 0) v.set(k++, x[spec_.rank + i] & 1);
  }
  return v;
}

Word GroupModel::abelian_word(const Element& h) const {
  std::vector<std::vector<int64_t>> cols = spec_.generators;
  const std::size_t d = coord_count();
  for (std::size_t i = 0; i < spec_.torsion.size(); ++i) {
    std::vector<int64_t> c(d, 0);
    c[spec_.rank + i] = spec_.torsion[i];
    cols.push_back(c);
  }
  auto c = solve_lattice(cols, h);
  if (!c) fail(ErrorCode::kInternal, "balanced_word: element not expressible in the generators");
  Word w;
  for (std::size_t j = 0; j < spec_.generators.size(); ++j) {
    const int64_t k = (*c)[j];
    for (int64_t r = 0; r < std::llabs(k); ++r) w.push_back({static_cast<int>(j), k > 0 ? 1 : -1});
  }
  return w;
}

Word GroupModel::balanced_word(const Element& g) const {
  const Element x = normalize(g);
  if (!eps(x).is_zero()) {
    fail(ErrorCode::kPrecondition, "balanced_word: eps(" + element_str(x) + ") != 0");
  }
  if (!is_finite()) {
    // x = 2*h0 coordinatewise; the word is w0 w0.
    Element h0(x.size(), 0);
    for (int i = 0; i < spec_.rank; ++i) h0[i] = x[i] / 2;
    for (std::size_t i = 0; i < spec_.torsion.size(); ++i) {
      const int64_t n = spec_.torsion[i];
      const int64_t v = x[spec_.rank + i];
      if (n % 2 == 0) {
        h0[spec_.rank + i] = v / 2;
      } else {
        h0[spec_.rank + i] = mod(v * ((n + 1) / 2), n);
      }
    }
    Word w0 = abelian_word(h0);
    Word w = w0;
    w.insert(w.end(), w0.begin(), w0.end());
    return w;
  }
  const int ng = static_cast<int>(spec_.generators.size());
  const std::size_t states = static_cast<std::size_t>(n_) << ng;
  auto idx = [&](int e, uint32_t par) { return (static_cast<std::size_t>(par) * n_) + e; };
  std::vector<int64_t> parent(states, -1);
  std::vector<int8_t> via(states, 0);
  std::vector<char> seen(states, 0);
  std::deque<std::pair<int, uint32_t>> q;
  seen[idx(0, 0)] = 1;
  q.emplace_back(0, 0);
  const std::size_t goal = idx(static_cast<int>(x[0]), 0);
  while (!q.empty() && !seen[goal]) {
    auto [e, par] = q.front();
    q.pop_front();
    for (int k = 0; k < 2 * ng; ++k) {
      const int gi = k / 2;
      const int gen = static_cast<int>(spec_.generators[gi][0]);
      const int step = (k % 2 == 0) ? gen : inv_[gen];
      const int e2 = m(e, step);
      const uint32_t p2 = par ^ (1u << gi);
      const std::size_t s2 = idx(e2, p2);
      if (seen[s2]) continue;
      seen[s2] = 1;
      parent[s2] = static_cast<int64_t>(idx(e, par));
      via[s2] = static_cast<int8_t>(k);
      q.emplace_back(e2, p2);
    }
  }
  if (!seen[goal]) fail(ErrorCode::kInternal, "balanced_word: search exhausted");
  Word w;
  for (std::size_t s = goal; s != idx(0, 0); s = static_cast<std::size_t>(parent[s])) {
    w.push_back({via[s] / 2, via[s] % 2 == 0 ? 1 : -1});
  }
  std::reverse(w.begin(), w.end());
  return w;
}

}  // namespace sconc
