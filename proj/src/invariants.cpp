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

#include "invariants.hpp"

#include "error.hpp"

namespace sconc {

F2Vec mu(const LinkState& s, const AmbientContext& ctx) {
  const GroupModel& g = ctx.g();
  F2Vec v(g.two_torsion().size());
  for (Id c : type_ii_circles(s)) {
    const Element& lab = s.circle(c).label;
    if (g.is_identity(lab)) continue;
    const int i = g.torsion_index(lab);
    if (i < 0) fail(ErrorCode::kPrecondition, "type II circle " + std::to_string(c) + " has a label of order other than 1 or 2");
    v.flip(static_cast<std::size_t>(i));
  }
  return v;
}

F2Subspace::Reduced fq(const LinkState& s, const AmbientContext& ctx) {
  if (!ctx.based && ctx.dual_sphere == DualSphere::kNone)
    fail(ErrorCode::kApplicability, "fq needs a based context or a dual sphere");
  return ctx.mu_pi3.reduce(mu(s, ctx));
}

F2Vec delta(const LinkState& s, const AmbientContext& ctx) {
  const GroupModel& g = ctx.g();
  F2Vec d(g.h1_dim());
  for (const auto& [a, ad] : type_i_pairs(s))
    if (s.lk_total(a)) d += g.eps(s.circle(a).label);
  const auto t2 = type_ii_circles(s);
  for (std::size_t i = 0; i < t2.size(); ++i) {
    const Element& lab = s.circle(t2[i]).label;
    for (std::size_t j = i + 1; j < t2.size(); ++j) {
      if (!g.equal(lab, s.circle(t2[j]).label)) continue;
      if (s.tw_value(t2[i], t2[j])) d += g.eps(lab);
    }
  }
  return d;
}

F2Subspace::Reduced km(const LinkState& s, const AmbientContext& ctx) { return ctx.delta_self.reduce(delta(s, ctx)); }

RelativeClass km_rel_alpha(const LinkState& s, const AmbientContext& ctx) { return {delta(s, ctx), s.homology_tag()}; }

InvariantReport invariant_report(const LinkState& s, const AmbientContext& ctx) {
  InvariantReport r;
  r.mu = mu(s, ctx);
  if (ctx.based || ctx.dual_sphere != DualSphere::kNone) r.fq = ctx.mu_pi3.reduce(r.mu);
  else r.notes.push_back("fq not applicable: context is neither based nor has a dual sphere");
  r.delta = delta(s, ctx);
  r.km = ctx.delta_self.reduce(r.delta);
  r.tag = s.homology_tag();
  if (!r.mu.is_zero()) r.notes.push_back("mu is nonzero: delta and km are outside their defining hypotheses");
  if (ctx.mu_pi3.rank() == 0 && !ctx.mu_pi3_zero)
    r.notes.push_back("mu(pi3 X) declared as 0; valid e.g. when pi3 X = 0 or pi1 X has no 2-torsion");
  if (ctx.delta_self.rank() == 0)
    r.notes.push_back("Delta(Self) declared as 0; valid e.g. when H3(X; Z[pi1 X]) = 0");
  return r;
}

Json report_to_json(const InvariantReport& r) {
  Json j{{"mu", r.mu.bits()},
         {"delta", r.delta.bits()},
         {"km", {{"rep", r.km.rep.bits()}, {"is_zero", r.km.is_zero}}},
         {"km_rel_alpha", {{"value", r.delta.bits()}, {"tag", r.tag}}},
         {"notes", r.notes}};
  if (r.fq) j["fq"] = {{"rep", r.fq->rep.bits()}, {"is_zero", r.fq->is_zero}};
  else j["fq"] = nullptr;
  return j;
}

Normalized normalize_dual(const AmbientContext& ctx) {
  if (ctx.dual_sphere == DualSphere::kNone) fail(ErrorCode::kApplicability, "normalize_dual: no dual sphere");
  Normalized n{ctx, {}};
  if (!ctx.s_characteristic) {
    if (ctx.dual_sphere != DualSphere::kFramed) n.notes.push_back("dual sphere upgraded to framed");
    n.ctx.dual_sphere = DualSphere::kFramed;
  } else {
    if (ctx.dual_sphere == DualSphere::kFramed)
      n.notes.push_back("warning: an s-characteristic context cannot have a framed dual; using unframed");
    n.ctx.dual_sphere = DualSphere::kUnframed;
  }
  return n;
}

std::optional<uint64_t> concordance_bound(const AmbientContext& ctx) {
  if (ctx.dual_sphere == DualSphere::kNone) return std::nullopt;
  const std::size_t t = ctx.g().two_torsion().size();
  if (t >= 63) fail(ErrorCode::kInternal, "2-torsion basis too large for a 64-bit bound");
  const uint64_t base = uint64_t{1} << t;
  if (!ctx.s_characteristic) return base;
  if (!ctx.mu_pi3_zero) return std::nullopt;
  const std::size_t h = ctx.g().h1_dim();
  if (t + h >= 63) fail(ErrorCode::kInternal, "bound exceeds 64 bits");
  return base << h;
}

}  // namespace sconc
