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

#include "catalog.hpp"

#include <array>
#include <functional>
#include <map>
#include <numeric>

#include "error.hpp"

namespace sconc {
namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

int powmod(int r, int e, int n) {
  int x = 1 % n;
  for (int k = 0; k < e; ++k) x = mod(x * r, n);
  return x;
}

// Table of a permutation group generated by gens on `deg` points.
GroupSpec perm_spec(int deg, const std::vector<std::vector<int>>& gens, std::vector<std::string> names) {
  std::vector<int> id(deg);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (const auto& g : gens) {
      std::vector<int> p(deg);
      for (int i = 0; i < deg; ++i) p[i] = g[elems[k][i]];
      if (!index.count(p)) {
        index[p] = static_cast<int>(elems.size());
        elems.push_back(p);
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  GroupSpec s;
  s.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // (a*b)(i) = a(b(i))
      std::vector<int> p(deg);
      for (int i = 0; i < deg; ++i) p[i] = elems[a][elems[b][i]];
      s.table[a][b] = index.at(p);
    }
  for (const auto& g : gens) s.generators.push_back({index.at(g)});
  s.generator_names = std::move(names);
  return s;
}

GroupSpec abelian(int rank, std::vector<int64_t> torsion) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::kAbelian;
  s.rank = rank;
  s.torsion = std::move(torsion);
  const std::size_t d = static_cast<std::size_t>(rank) + s.torsion.size();
  for (std::size_t i = 0; i < d; ++i) {
    Element e(d, 0);
    e[i] = 1;
    s.generators.push_back(e);
    s.generator_names.push_back("e" + std::to_string(i + 1));
  }
  return s;
}

const std::map<std::string, std::function<GroupSpec()>>& registry() {
  static const std::map<std::string, std::function<GroupSpec()>> r = [] {
    std::map<std::string, std::function<GroupSpec()>> m;
    m["Z"] = [] { return abelian(1, {}); };
    m["ZxZ"] = [] { return abelian(2, {}); };
    m["ZxZ/2"] = [] { return abelian(1, {2}); };
    m["Z/2+Z/4"] = [] { return abelian(0, {2, 4}); };
    for (int n = 1; n <= 16; ++n) {
      m["Z/" + std::to_string(n)] = [n] { return cyclic_spec(n); };
    }
    auto c = [](int n) { return cyclic_spec(n); };
    m["Z2xZ2"] = [c] { return product_spec(c(2), c(2)); };
    m["Z2xZ4"] = [c] { return product_spec(c(2), c(4)); };
    m["Z2xZ6"] = [c] { return product_spec(c(2), c(6)); };
    m["Z2xZ8"] = [c] { return product_spec(c(2), c(8)); };
    m["Z4xZ4"] = [c] { return product_spec(c(4), c(4)); };
    m["Z3xZ3"] = [c] { return product_spec(c(3), c(3)); };
    m["Z2^3"] = [c] { return product_spec(product_spec(c(2), c(2)), c(2)); };
    m["Z2^4"] = [c] { return product_spec(product_spec(product_spec(c(2), c(2)), c(2)), c(2)); };
    m["Z2xZ2xZ4"] = [c] { return product_spec(product_spec(c(2), c(2)), c(4)); };
    m["S3"] = [] { return metacyclic_spec(3, 2, -1, 0, {"r", "s"}); };
    for (int n = 4; n <= 8; ++n) {
      m["D" + std::to_string(n)] = [n] { return metacyclic_spec(n, 2, -1, 0, {"r", "s"}); };
    }
    m["Q8"] = [] { return metacyclic_spec(4, 2, -1, 2, {"i", "j"}); };
    m["Dic3"] = [] { return metacyclic_spec(6, 2, -1, 3, {"a", "x"}); };
    m["Q16"] = [] { return metacyclic_spec(8, 2, -1, 4, {"a", "x"}); };
    m["SD16"] = [] { return metacyclic_spec(8, 2, 3, 0, {"a", "x"}); };
    m["M16"] = [] { return metacyclic_spec(8, 2, 5, 0, {"a", "x"}); };
    m["Z4sZ4"] = [] { return metacyclic_spec(4, 4, -1, 0, {"a", "x"}); };
    m["Z3sZ4"] = [] { return metacyclic_spec(3, 4, -1, 0, {"a", "x"}); };
    m["A4"] = [] {
      return perm_spec(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}, {"t", "v"});
    };
    m["Z2xD4"] = [] { return product_spec(cyclic_spec(2), metacyclic_spec(4, 2, -1, 0, {"r", "s"})); };
    m["Z2xQ8"] = [] { return product_spec(cyclic_spec(2), metacyclic_spec(4, 2, -1, 2, {"i", "j"})); };
    m["Z2xS3"] = [] { return product_spec(cyclic_spec(2), metacyclic_spec(3, 2, -1, 0, {"r", "s"})); };
    return m;
  }();
  return r;
}

}  // namespace

GroupSpec metacyclic_spec(int n, int m, int r, int t, std::vector<std::string> names) {
  r = mod(r, n);
  if (powmod(r, m, n) != 1 % n || mod(r * t - t, n) != 0) {
    fail(ErrorCode::kInvalidArgument, "metacyclic_spec: inconsistent parameters");
  }
  const int order = n * m;
  GroupSpec s;
  s.table.assign(order, std::vector<int>(order));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < m; ++l) {
          // a^i x^j a^k x^l = a^(i + r^j k) x^(j+l)
          int e = i + powmod(r, j, n) * k;
          int f = j + l;
          if (f >= m) { f -= m; e += t; }
          s.table[i + n * j][k + n * l] = mod(e, n) + n * f;
        }
  s.generators = {{1 % order}, {m > 1 ? n : 0}};
  if (m == 1) s.generators.pop_back();
  if (!names.empty()) names.resize(s.generators.size());
  s.generator_names = std::move(names);
  return s;
}

GroupSpec cyclic_spec(int n) {
  GroupSpec s;
  s.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) s.table[a][b] = (a + b) % n;
  s.generators = {{n > 1 ? 1 : 0}};
  s.generator_names = {"a"};
  return s;
}

GroupSpec product_spec(const GroupSpec& g, const GroupSpec& h) {
  const int ng = static_cast<int>(g.table.size());
  const int nh = static_cast<int>(h.table.size());
  GroupSpec s;
  s.table.assign(ng * nh, std::vector<int>(ng * nh));
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < nh; ++b)
      for (int c = 0; c < ng; ++c)
        for (int d = 0; d < nh; ++d) s.table[a * nh + b][c * nh + d] = g.table[a][c] * nh + h.table[b][d];
  for (std::size_t k = 0; k < g.generators.size(); ++k) {
    s.generators.push_back({g.generators[k][0] * nh});
    s.generator_names.push_back(g.generator_names.empty() ? "x" + std::to_string(k) : g.generator_names[k] + "1");
  }
  for (std::size_t k = 0; k < h.generators.size(); ++k) {
    s.generators.push_back({h.generators[k][0]});
    s.generator_names.push_back(h.generator_names.empty() ? "y" + std::to_string(k) : h.generator_names[k] + "2");
  }
  return s;
}

bool has_named_group(const std::string& name) { return registry().count(name) > 0; }

GroupModel named_group(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) fail(ErrorCode::kNotFound, "unknown group '" + name + "'");
  return GroupModel::build(it->second());
}

std::vector<std::string> small_group_names() {
  std::vector<std::string> out;
  for (const auto& [name, f] : registry()) {
    const GroupSpec s = f();
    if (s.kind == GroupSpec::Kind::kFinite && s.table.size() <= 16) out.push_back(name);
  }
  return out;
}

}  // namespace sconc
