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

#include <cmath>
#include <map>

#include "catalog.hpp"
#include "error.hpp"
#include "group.hpp"

namespace sconc {
namespace {

GroupSpec cyclic_table(int n) {
  GroupSpec s;
  s.table.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s.table[i][j] = (i + j) % n;
  s.generators = {{1}};
  return s;
}

Element el(int i) { return {i}; }

TEST(Group, BuildsZ) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::kAbelian;
  s.rank = 1;
  s.generators = {{1}};
  const GroupModel g = GroupModel::build(s);
  EXPECT_FALSE(g.is_finite());
  EXPECT_EQ(g.order(), 0);
  EXPECT_EQ(g.mul({3}, {-5}), (Element{-2}));
  EXPECT_EQ(g.inv({4}), (Element{-4}));
  EXPECT_TRUE(g.two_torsion().empty());
}

TEST(Group, BuildsCyclicTable) {
  const GroupModel g = GroupModel::build(cyclic_table(4));
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.mul(el(3), el(2)), el(1));
  ASSERT_EQ(g.two_torsion().size(), 1u);
  EXPECT_EQ(g.two_torsion()[0], el(2));
}

TEST(Group, RejectsBadInput) {
  GroupSpec s = cyclic_table(4);
  s.table[1][1] = 3;  // breaks associativity
  EXPECT_THROW(GroupModel::build(s), Error);
  GroupSpec t = cyclic_table(4);
  t.generators = {{2}};  // generates a proper subgroup
  EXPECT_THROW(GroupModel::build(t), Error);
  GroupSpec u;
  u.kind = GroupSpec::Kind::kAbelian;
  u.torsion = {1};
  u.generators = {{0}};
  EXPECT_THROW(GroupModel::build(u), Error);
  GroupSpec v = cyclic_table(3);
  v.table[0][1] = 2;  // no identity
  EXPECT_THROW(GroupModel::build(v), Error);
}

TEST(Group, TwoTorsionExamples) {
  EXPECT_TRUE(named_group("Z").two_torsion().empty());
  const GroupModel q8 = named_group("Q8");
  ASSERT_EQ(q8.two_torsion().size(), 1u);
  const Element m1 = q8.two_torsion()[0];
  const Element i = q8.generators()[0];
  EXPECT_EQ(q8.mul(i, i), m1);
  EXPECT_EQ(named_group("Z2xZ2").two_torsion().size(), 3u);
  EXPECT_EQ(named_group("Z/2+Z/4").two_torsion().size(), 3u);
  EXPECT_EQ(named_group("ZxZ/2").two_torsion().size(), 1u);
}

TEST(Group, EpsExamples) {
  const GroupModel z = named_group("Z");
  EXPECT_EQ(z.eps({3}).bits(), (std::vector<int>{1}));
  const GroupModel z4 = named_group("Z/4");
  EXPECT_TRUE(z4.eps(el(2)).is_zero());
  const GroupModel q8 = named_group("Q8");
  EXPECT_EQ(q8.h1_dim(), 2u);
  EXPECT_TRUE(q8.eps(q8.two_torsion()[0]).is_zero());
  EXPECT_EQ(named_group("ZxZ").h1_dim(), 2u);
  EXPECT_EQ(named_group("Z/2+Z/4").h1_dim(), 2u);
  EXPECT_EQ(named_group("Z/3").h1_dim(), 0u);
}

TEST(Group, BalancedWordExamples) {
  EXPECT_TRUE(named_group("Z2xZ2").balanced_word(el(0)).empty());
  const GroupModel z4 = named_group("Z/4");
  EXPECT_EQ(z4.balanced_word(el(2)), (Word{{0, 1}, {0, 1}}));
  const GroupModel q8 = named_group("Q8");
  EXPECT_EQ(q8.balanced_word(q8.two_torsion()[0]), (Word{{0, 1}, {0, 1}}));
  const GroupModel z = named_group("Z");
  EXPECT_EQ(z.eval(z.balanced_word({6})), (Element{6}));
  EXPECT_THROW(z.balanced_word({1}), Error);
}

// Number of homomorphisms G -> Z/2, found by assigning bits to generators,
// propagating along the Cayley graph and checking every product.
int count_homs_to_z2(const GroupModel& g) {
  const auto els = g.elements();
  const auto& gens = g.generators();
  int count = 0;
  for (uint32_t m = 0; m < (1u << gens.size()); ++m) {
    std::map<Element, int> f{{g.identity(), 0}};
    std::vector<Element> queue{g.identity()};
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const Element y = g.mul(queue[q], gens[k]);
        if (!f.count(y)) {
          f[y] = f[queue[q]] ^ static_cast<int>((m >> k) & 1);
          queue.push_back(y);
        }
      }
    bool hom = f.size() == els.size();
    for (std::size_t k = 0; k < gens.size(); ++k)
      if (f[gens[k]] != static_cast<int>((m >> k) & 1)) hom = false;
    for (const auto& a : els)
      for (const auto& b : els)
        if (hom && f[g.mul(a, b)] != (f[a] ^ f[b])) hom = false;
    count += hom;
  }
  return count;
}

class SmallGroup : public ::testing::TestWithParam<std::string> {};

TEST_P(SmallGroup, TableAxioms) {
  const GroupModel g = named_group(GetParam());
  const auto els = g.elements();
  ASSERT_EQ(static_cast<int64_t>(els.size()), g.order());
  for (const auto& a : els) {
    EXPECT_EQ(g.mul(a, g.identity()), a);
    EXPECT_EQ(g.mul(a, g.inv(a)), g.identity());
    for (const auto& b : els)
      for (const auto& c : els) ASSERT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
  }
}

TEST_P(SmallGroup, H1MatchesHomCount) {
  const GroupModel g = named_group(GetParam());
  const int homs = count_homs_to_z2(g);
  EXPECT_EQ(std::size_t{1} << g.h1_dim(), static_cast<std::size_t>(homs));
}

TEST_P(SmallGroup, EpsIsHomomorphism) {
  const GroupModel g = named_group(GetParam());
  const auto els = g.elements();
  EXPECT_TRUE(g.eps(g.identity()).is_zero());
  for (const auto& a : els) {
    EXPECT_EQ(g.eps(a), g.eps(g.inv(a)));
    for (const auto& b : els) ASSERT_EQ(g.eps(g.mul(a, b)), g.eps(a) + g.eps(b));
  }
}

TEST_P(SmallGroup, TwoTorsionIsExactlyTheInvolutions) {
  const GroupModel g = named_group(GetParam());
  std::vector<Element> inv;
  for (const auto& a : g.elements())
    if (a != g.identity() && g.mul(a, a) == g.identity()) inv.push_back(a);
  EXPECT_EQ(g.two_torsion(), inv);
  for (std::size_t i = 0; i < inv.size(); ++i) EXPECT_EQ(g.torsion_index(inv[i]), static_cast<int>(i));
}

TEST_P(SmallGroup, BalancedWordsForKernel) {
  const GroupModel g = named_group(GetParam());
  for (const auto& x : g.elements()) {
    if (!g.eps(x).is_zero()) {
      EXPECT_THROW(g.balanced_word(x), Error);
      continue;
    }
    const Word w = g.balanced_word(x);
    EXPECT_EQ(g.eval(w), x);
    std::vector<int> parity(g.generators().size(), 0);
    for (const auto& l : w) parity[static_cast<std::size_t>(l.gen)] ^= 1;
    for (int p : parity) EXPECT_EQ(p, 0);
  }
}

INSTANTIATE_TEST_SUITE_P(Catalog, SmallGroup, ::testing::ValuesIn(small_group_names()),
                         [](const auto& info) {
                           std::string n;
                           for (char c : info.param) n += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
                           return n;
                         });

TEST(AbelianGroup, BalancedWordsAndEps) {
  for (const char* name : {"Z", "ZxZ", "ZxZ/2", "Z/2+Z/4"}) {
    const GroupModel g = named_group(name);
    for (int64_t a = -4; a <= 4; ++a)
      for (int64_t b = -4; b <= 4; ++b) {
        Element x(g.coord_count(), 0);
        x[0] = a;
        if (x.size() > 1) x[1] = b;
        x = g.normalize(x);
        EXPECT_EQ(g.eps(x), g.eps(g.inv(x)));
        if (!g.eps(x).is_zero()) continue;
        const Word w = g.balanced_word(x);
        EXPECT_TRUE(g.equal(g.eval(w), x)) << name << " " << element_str(x);
        std::map<int, int> parity;
        for (const auto& l : w) parity[l.gen] ^= 1;
        for (const auto& [k, p] : parity) EXPECT_EQ(p, 0);
      }
  }
}

}  // namespace
}  // namespace sconc
