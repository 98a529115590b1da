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

#include "sconc/sconc.h"

#include <cstring>
#include <exception>
#include <string>

#include "diagoracle.hpp"
#include "error.hpp"
#include "invariants.hpp"
#include "moves.hpp"
#include "serialize.hpp"
#include "simplify.hpp"
#include "state.hpp"
#include "sweep.hpp"

struct sconc_scenario {
  sconc::Scenario sc;
};

namespace {

using sconc::Json;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void put(char** out, const std::string& s) {
  if (out) *out = dup(s);
}

sconc_status to_status(sconc::ErrorCode c) { return static_cast<sconc_status>(static_cast<int>(c)); }

// Runs body, mapping exceptions to a status and an error document in *out.
template <class F>
sconc_status guarded(char** out, F&& body) {
  if (out) *out = nullptr;
  sconc_status st = SCONC_OK;
  std::string msg;
  try {
    body();
    return SCONC_OK;
  } catch (const sconc::Error& e) {
    st = to_status(e.code());
    msg = e.what();
  } catch (const Json::exception& e) {
    st = SCONC_E_PARSE;
    msg = e.what();
  } catch (const std::bad_alloc&) {
    st = SCONC_E_INTERNAL;
    msg = "out of memory";
  } catch (const std::exception& e) {
    st = SCONC_E_INTERNAL;
    msg = e.what();
  }
  put(out, Json{{"error", {{"code", static_cast<int>(st)}, {"status", sconc_status_name(st)}, {"message", msg}}}}.dump());
  return st;
}

const sconc::Scenario& need(const sconc_scenario* s) {
  if (!s) sconc::fail(sconc::ErrorCode::kInvalidArgument, "null scenario handle");
  return s->sc;
}

const sconc::GroupModel& group(const sconc::Scenario& sc) { return sc.ctx.g(); }

Json violations_json(const sconc::ValidationReport& r) {
  Json out = Json::array();
  for (const auto& v : r) out.push_back({{"rule", v.rule}, {"ids", v.ids}, {"detail", v.detail}});
  return out;
}

}  // namespace

extern "C" {

const char* sconc_version(void) { return "0.1.0"; }

const char* sconc_status_name(sconc_status status) {
  switch (status) {
    case SCONC_OK: return "ok";
    case SCONC_E_INVALID_ARGUMENT: return "invalid-argument";
    case SCONC_E_PRECONDITION: return "precondition";
    case SCONC_E_PARSE: return "parse";
    case SCONC_E_APPLICABILITY: return "applicability";
    case SCONC_E_NOT_FOUND: return "not-found";
    case SCONC_E_INTERNAL: return "internal";
  }
  return "unknown";
}

void sconc_string_free(char* s) { std::free(s); }

sconc_status sconc_scenario_load(const char* path, sconc_scenario** scenario, char** out) {
  return guarded(out, [&] {
    if (!path || !scenario) sconc::fail(sconc::ErrorCode::kInvalidArgument, "null argument");
    *scenario = nullptr;
    auto* h = new sconc_scenario{sconc::load_scenario(path)};
    *scenario = h;
    put(out, Json{{"hash", sconc::state_hash(group(h->sc), h->sc.state)}}.dump());
  });
}

sconc_status sconc_scenario_parse(const char* json, sconc_scenario** scenario, char** out) {
  return guarded(out, [&] {
    if (!json || !scenario) sconc::fail(sconc::ErrorCode::kInvalidArgument, "null argument");
    *scenario = nullptr;
    Json j;
    try {
      j = Json::parse(json);
    } catch (const Json::exception& e) {
      sconc::fail(sconc::ErrorCode::kParse, e.what());
    }
    auto* h = new sconc_scenario{sconc::scenario_from_json(j)};
    *scenario = h;
    put(out, Json{{"hash", sconc::state_hash(group(h->sc), h->sc.state)}}.dump());
  });
}

void sconc_scenario_free(sconc_scenario* scenario) { delete scenario; }

sconc_status sconc_scenario_dump(const sconc_scenario* scenario, char** out) {
  return guarded(out, [&] {
    const auto& sc = need(scenario);
    Json j = sconc::scenario_to_json(sc);
    j["hash"] = sconc::state_hash(group(sc), sc.state);
    put(out, j.dump());
  });
}

sconc_status sconc_validate(const sconc_scenario* scenario, char** out) {
  return guarded(out, [&] {
    const auto& sc = need(scenario);
    const auto r = sconc::validate(sc.state, sc.ctx);
    put(out, Json{{"valid", r.empty()},
                  {"violations", violations_json(r)},
                  {"circles", sc.state.circles().size()},
                  {"hash", sconc::state_hash(group(sc), sc.state)}}
                 .dump());
  });
}

sconc_status sconc_invariants(const sconc_scenario* scenario, char** out) {
  return guarded(out, [&] {
    const auto& sc = need(scenario);
    Json j = sconc::report_to_json(sconc::invariant_report(sc.state, sc.ctx));
    j["hash"] = sconc::state_hash(group(sc), sc.state);
    put(out, j.dump());
  });
}

sconc_status sconc_apply(const sconc_scenario* scenario, const char* script_json, char** out) {
  return guarded(out, [&] {
    const auto& sc = need(scenario);
    const std::string initial = sconc::state_hash(group(sc), sc.state);
    Json script = sc.script;
    if (script_json) {
      Json j;
      try {
        j = Json::parse(script_json);
      } catch (const Json::exception& e) {
        sconc::fail(sconc::ErrorCode::kParse, e.what());
      }
      if (j.is_object()) {
        if (j.contains("schema") && j.at("schema") != sconc::kTraceSchema)
          sconc::fail(sconc::ErrorCode::kParse, "unsupported trace schema " + j.at("schema").dump());
        if (!j.contains("steps")) sconc::fail(sconc::ErrorCode::kParse, "trace has no 'steps'");
        if (j.contains("initial") && j.at("initial") != initial)
          sconc::fail(sconc::ErrorCode::kPrecondition, "trace was recorded from a different initial state");
        script = j.at("steps");
      } else {
        script = j;
      }
    }
    const auto r = sconc::apply_script(sc.state, sc.ctx, script);
    const std::string final_hash = sconc::state_hash(group(sc), r.state);
    put(out, Json{{"trace", sconc::trace_to_json(r.trace, initial, final_hash)},
                  {"final_state", sconc::state_to_json(group(sc), r.state)},
                  {"final_hash", final_hash}}
                 .dump());
  });
}

sconc_status sconc_simplify(const sconc_scenario* scenario, char** out) {
  return guarded(out, [&] {
    const auto& sc = need(scenario);
    const auto& g = group(sc);
    const auto delta_in = sconc::delta(sc.state, sc.ctx);
    const auto r = sconc::simplify_to_hopf(sc.state, sc.ctx);
    const std::string initial = sconc::state_hash(g, sc.state), final_hash = sconc::state_hash(g, r.state);
    put(out, Json{{"hopf", r.hopf},
                  {"label", sconc::element_to_json(g, r.label)},
                  {"label_eps", g.eps(r.label).bits()},
                  {"delta", delta_in.bits()},
                  {"steps", r.trace.size()},
                  {"final_state", sconc::state_to_json(g, r.state)},
                  {"final_hash", final_hash},
                  {"trace", sconc::trace_to_json(r.trace, initial, final_hash)}}
                 .dump());
  });
}

sconc_status sconc_decide(const sconc_scenario* scenario, char** out) {
  return guarded(out, [&] {
    const auto& sc = need(scenario);
    const auto v = sconc::decide(sc.state, sc.ctx);
    Json j = sconc::verdict_to_json(v, group(sc));
    j["final_hash"] = v.final_hash;
    j["obstructed"] = v.outcome == sconc::Outcome::kObstructedFq || v.outcome == sconc::Outcome::kObstructedKm;
    put(out, j.dump());
  });
}

sconc_status sconc_bound(const sconc_scenario* scenario, char** out) {
  return guarded(out, [&] {
    const auto& sc = need(scenario);
    const auto b = sconc::concordance_bound(sc.ctx);
    Json j{{"two_torsion", sc.ctx.g().two_torsion().size()},
           {"h1_dim", sc.ctx.g().h1_dim()},
           {"s_characteristic", sc.ctx.s_characteristic}};
    if (b) {
      j["bound"] = *b;
    } else {
      j["bound"] = nullptr;
      j["reason"] = sc.ctx.dual_sphere == sconc::DualSphere::kNone
                        ? "no dual sphere"
                        : "s-characteristic without the assertion mu(pi3 X) = 0";
    }
    put(out, j.dump());
  });
}

sconc_status sconc_sweep(uint64_t seed, int count, int threads, char** out) {
  return guarded(out, [&] {
    if (count < 0) sconc::fail(sconc::ErrorCode::kInvalidArgument, "count must be non-negative");
    const auto r = sconc::run_sweep(seed, count, threads < 1 ? 1 : threads);
    Json j = r.to_json();
    j["seed"] = seed;
    j["count"] = count;
    put(out, j.dump());
  });
}

sconc_status sconc_crosscheck(const char* rule, char** out) {
  return guarded(out, [&] {
    std::vector<sconc::diag::CrosscheckReport> rs;
    if (rule) rs.push_back(sconc::diag::crosscheck(rule));
    else rs = sconc::diag::crosscheck_all();
    Json arr = Json::array();
    std::size_t cases = 0, mism = 0;
    for (const auto& r : rs) {
      cases += r.cases;
      mism += r.mismatches.size();
      arr.push_back({{"rule", r.rule}, {"cases", r.cases}, {"mismatches", r.mismatches}, {"log", r.log}});
    }
    put(out, Json{{"rules", arr}, {"cases", cases}, {"mismatches", mism}}.dump());
  });
}

sconc_status sconc_scene(const char* name, const char* params_json, char** out) {
  return guarded(out, [&] {
    if (!name) sconc::fail(sconc::ErrorCode::kInvalidArgument, "null scene name");
    sconc::diag::Params p;
    if (params_json) {
      Json j;
      try {
        j = Json::parse(params_json);
        p = j.get<sconc::diag::Params>();
      } catch (const Json::exception& e) {
        sconc::fail(sconc::ErrorCode::kParse, std::string("scene parameters: ") + e.what());
      }
    }
    put(out, sconc::diag::encode(sconc::diag::scene(name, p)));
  });
}

}  // extern "C"
