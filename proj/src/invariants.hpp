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

#ifndef SCONC_INVARIANTS_HPP_
#define SCONC_INVARIANTS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "serialize.hpp"
#include "state.hpp"

namespace sconc {

F2Vec mu(const LinkState& s, const AmbientContext& ctx);
F2Subspace::Reduced fq(const LinkState& s, const AmbientContext& ctx);
F2Vec delta(const LinkState& s, const AmbientContext& ctx);
F2Subspace::Reduced km(const LinkState& s, const AmbientContext& ctx);

struct RelativeClass {
  F2Vec value;
  std::string tag;
};
RelativeClass km_rel_alpha(const LinkState& s, const AmbientContext& ctx);

struct InvariantReport {
  F2Vec mu;
  std::optional<F2Subspace::Reduced> fq;  // absent when not applicable
  F2Vec delta;
  F2Subspace::Reduced km;
  std::string tag;
  std::vector<std::string> notes;
};
InvariantReport invariant_report(const LinkState& s, const AmbientContext& ctx);
Json report_to_json(const InvariantReport& r);

struct Normalized {
  AmbientContext ctx;
  std::vector<std::string> notes;
};
Normalized normalize_dual(const AmbientContext& ctx);

// Upper bound on the number of concordance classes; nullopt when the
// bound does not apply to this context.
std::optional<uint64_t> concordance_bound(const AmbientContext& ctx);

}  // namespace sconc

#endif  // SCONC_INVARIANTS_HPP_
