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

#ifndef SCONC_F2_HPP_
#define SCONC_F2_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace sconc {

// Dense bit vector over GF(2).
class F2Vec {
 public:
  F2Vec() = default;
  explicit F2Vec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool v) {
    const uint64_t m = uint64_t{1} << (i % 64);
    if (v) w_[i / 64] |= m; else w_[i / 64] &= ~m;
  }
  void flip(std::size_t i) { w_[i / 64] ^= uint64_t{1} << (i % 64); }

  bool is_zero() const {
    for (uint64_t x : w_) if (x) return false;
    return true;
  }
  std::size_t popcount() const {
    std::size_t c = 0;
    for (uint64_t x : w_) c += static_cast<std::size_t>(__builtin_popcountll(x));
    return c;
  }
  // Index of the lowest set bit, or size() when zero.
  std::size_t lowest() const;

  F2Vec& operator+=(const F2Vec& o);
  friend F2Vec operator+(F2Vec a, const F2Vec& b) { return a += b; }
  friend bool operator==(const F2Vec& a, const F2Vec& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }
  friend bool operator<(const F2Vec& a, const F2Vec& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.w_ < b.w_;
  }

  // "0101..." with index 0 first.
  std::string str() const;
  static F2Vec from_bits(const std::vector<int>& bits);
  std::vector<int> bits() const;

 private:
  std::size_t n_ = 0;
  std::vector<uint64_t> w_;
};

// Subspace of GF(2)^n kept in reduced row echelon form.
class F2Subspace {
 public:
  F2Subspace() = default;
  explicit F2Subspace(std::size_t dim) : dim_(dim) {}
  F2Subspace(std::size_t dim, const std::vector<F2Vec>& gens);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<F2Vec>& generators() const { return gens_; }
  const std::vector<F2Vec>& basis() const { return basis_; }

  // Returns false if v was already in the span.
  bool add(const F2Vec& v);
  bool contains(const F2Vec& v) const;

  struct Reduced {
    F2Vec rep;
    bool is_zero = false;
  };
  // Canonical coset representative: every pivot column of the basis is
  // cleared from v.
  Reduced reduce(const F2Vec& v) const;

 private:
  std::size_t dim_ = 0;
  std::vector<F2Vec> gens_;
  std::vector<F2Vec> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace sconc

#endif  // SCONC_F2_HPP_
