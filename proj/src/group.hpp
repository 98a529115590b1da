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

#ifndef SCONC_GROUP_HPP_
#define SCONC_GROUP_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "f2.hpp"

namespace sconc {

// Finite elements are {index}; abelian elements are coordinate vectors
// over Z^r + Z/n_1 + ... + Z/n_k.
using Element = std::vector<int64_t>;

struct Letter {
  int gen = 0;
  int sign = 1;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

struct GroupSpec {
  enum class Kind { kFinite, kAbelian };
  Kind kind = Kind::kFinite;
  std::vector<std::vector<int>> table;  // finite: n x n, identity 0
  int rank = 0;                         // abelian: free rank
  std::vector<int64_t> torsion;         // abelian: n_i >= 2
  std::vector<Element> generators;
  std::vector<std::string> generator_names;  // optional
};

class GroupModel {
 public:
  static constexpr int kMaxFiniteOrder = 255;
  static constexpr int kMaxGenerators = 16;

  static GroupModel build(const GroupSpec& spec);

  const GroupSpec& spec() const { return spec_; }
  bool is_finite() const { return spec_.kind == GroupSpec::Kind::kFinite; }
  // Number of elements; 0 when infinite.
  int64_t order() const;
  std::size_t coord_count() const;

  Element identity() const;
  bool valid(const Element& e) const;
  // Throws kInvalidArgument for a malformed element.
  Element normalize(const Element& e) const;
  Element mul(const Element& a, const Element& b) const;
  Element inv(const Element& a) const;
  bool is_identity(const Element& e) const { return normalize(e) == identity(); }
  bool equal(const Element& a, const Element& b) const {
    return normalize(a) == normalize(b);
  }
  // Every element; finite groups only.
  std::vector<Element> elements() const;

  const std::vector<Element>& generators() const { return spec_.generators; }
  std::string generator_name(int i) const;
  std::string word_str(const Word& w) const;
  Element eval(const Word& w) const;

  const std::vector<Element>& two_torsion() const { return two_torsion_; }
  // Position of t in two_torsion(), or -1.
  int torsion_index(const Element& t) const;

  std::size_t h1_dim() const { return h1_dim_; }
  F2Vec eps(const Element& g) const;

  // Word w with eval(w) == g and, for every generator, the counts of the
  // generator and its inverse agreeing mod 2.
  Word balanced_word(const Element& g) const;

 private:
  GroupSpec spec_;
  int n_ = 0;
  std::vector<uint8_t> tab_;
  std::vector<uint8_t> inv_;
  std::vector<Element> two_torsion_;
  std::size_t h1_dim_ = 0;
  std::vector<F2Vec> eps_table_;  // finite case, indexed by element

  int m(int a, int b) const { return tab_[static_cast<std::size_t>(a) * n_ + b]; }
  void init_finite();
  void init_abelian();
  Word abelian_word(const Element& h) const;
};

std::string element_str(const Element& e);

}  // namespace sconc

#endif  // SCONC_GROUP_HPP_
