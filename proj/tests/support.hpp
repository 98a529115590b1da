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

#ifndef SCONC_TESTS_SUPPORT_HPP_
#define SCONC_TESTS_SUPPORT_HPP_

#include <memory>
#include <string>

#include "catalog.hpp"
#include "state.hpp"

namespace sconc::testing {

inline std::shared_ptr<const GroupModel> grp(const std::string& name) {
  return std::make_shared<const GroupModel>(named_group(name));
}

inline AmbientContext context(const std::string& group, bool s_char = false,
                              DualSphere dual = DualSphere::kFramed) {
  AmbientContext ctx = AmbientContext::make(grp(group));
  ctx.s_characteristic = s_char;
  ctx.dual_sphere = dual;
  ctx.mu_pi3_zero = true;
  return ctx;
}

// lk = 1 realized by one clasp.
inline void link(LinkState& s, Id a, Id b) {
  s.set_lk(a, b, true);
  s.add_clasps(a, b);
}

// Split Hopf pair labeled g; returns the active id.
inline Id hopf(LinkState& s, const Element& g) {
  const auto [a, ad] = s.add_pair(g);
  link(s, a, ad);
  return a;
}

inline std::string source_dir() { return SCONC_SOURCE_DIR; }

}  // namespace sconc::testing

#endif  // SCONC_TESTS_SUPPORT_HPP_
