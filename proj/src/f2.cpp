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

#include "f2.hpp"

#include <stdexcept>

namespace sconc {

std::size_t F2Vec::lowest() const {
  for (std::size_t k = 0; k < w_.size(); ++k) {
    if (w_[k]) return k * 64 + static_cast<std::size_t>(__builtin_ctzll(w_[k]));
  }
  return n_;
}

F2Vec& F2Vec::operator+=(const F2Vec& o) {
  if (o.n_ != n_) throw std::invalid_argument("F2Vec: dimension mismatch");
  for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
  return *this;
}

std::string F2Vec::str() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i) if (get(i)) s[i] = '1';
  return s;
}

F2Vec F2Vec::from_bits(const std::vector<int>& bits) {
  F2Vec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) v.set(i, bits[i] & 1);
  return v;
}

std::vector<int> F2Vec::bits() const {
  std::vector<int> b(n_);
  for (std::size_t i = 0; i < n_; ++i) b[i] = get(i) ? 1 : 0;
  return b;
}

F2Subspace::F2Subspace(std::size_t dim, const std::vector<F2Vec>& gens)
    : dim_(dim) {
  for (const F2Vec& g : gens) add(g);
}

bool F2Subspace::add(const F2Vec& v) {
  if (v.size() != dim_) throw std::invalid_argument("F2Subspace: dimension mismatch");
  gens_.push_back(v);
  F2Vec r = reduce(v).rep;
  if (r.is_zero()) return false;
  const std::size_t p = r.lowest();
  // Keep the basis fully reduced so representatives are canonical.
  for (F2Vec& b : basis_) if (b.get(p)) b += r;
  std::size_t at = 0;
  while (at < pivots_.size() && pivots_[at] < p) ++at;
  basis_.insert(basis_.begin() + static_cast<std::ptrdiff_t>(at), r);
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(at), p);
  return true;
}

bool F2Subspace::contains(const F2Vec& v) const { return reduce(v).is_zero; }

F2Subspace::Reduced F2Subspace::reduce(const F2Vec& v) const {
  if (v.size() != dim_) throw std::invalid_argument("F2Subspace: dimension mismatch");
  Reduced out{v, false};
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (out.rep.get(pivots_[k])) out.rep += basis_[k];
  }
  out.is_zero = out.rep.is_zero();
  return out;
}

}  // namespace sconc
