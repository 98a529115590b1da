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

// sconc command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "sconc/sconc.h"

namespace {

using Json = nlohmann::json;

enum class Format { kHuman, kMachine };

struct Options {
  Format format = Format::kHuman;
  std::string scenario;
  std::string script;
  std::string trace_out;
  std::string rule;
  std::string scene;
  std::vector<std::string> params;
  uint64_t seed = 1;
  int count = 1000;
  int threads = 1;
};

// Owns a string returned by the library.
struct Out {
  char* p = nullptr;
  ~Out() { sconc_string_free(p); }
  Json json() const { return p ? Json::parse(p) : Json(); }
};

struct Handle {
  sconc_scenario* h = nullptr;
  ~Handle() { sconc_scenario_free(h); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string bits(const Json& v) {
  std::string s;
  for (const auto& b : v) s += b.get<int>() ? '1' : '0';
  return s.empty() ? "()" : s;
}

void emit(const Options& o, const std::string& human, const Json& machine) {
  if (o.format == Format::kHuman) std::cout << human << "machine: ";
  std::cout << machine.dump() << "\n";
}

int report_error(const Options& o, const Json& err) {
  const auto& e = err.at("error");
  std::cerr << "error (" << e.at("status").get<std::string>() << "): " << e.at("message").get<std::string>() << "\n";
  std::cout << err.dump() << "\n";
  (void)o;
  return 1;
}

void write_trace(const Options& o, const Json& trace) {
  if (o.trace_out.empty()) return;
  std::ofstream f(o.trace_out);
  if (!f) throw std::runtime_error("cannot write " + o.trace_out);
  f << trace.dump(2) << "\n";
}

// Loads the scenario, reporting failures; returns 0 on success.
int load(const Options& o, Handle& h) {
  Out out;
  if (sconc_scenario_load(o.scenario.c_str(), &h.h, &out.p) != SCONC_OK) return report_error(o, out.json());
  return 0;
}

int cmd_validate(const Options& o) {
  Handle h;
  if (int rc = load(o, h)) return rc;
  Out out;
  if (sconc_validate(h.h, &out.p) != SCONC_OK) return report_error(o, out.json());
  const Json j = out.json();
  std::ostringstream s;
  s << o.scenario << ": " << j["circles"] << " circles, " << (j["valid"].get<bool>() ? "valid" : "INVALID") << "\n";
  for (const auto& v : j["violations"]) s << "  [" << v["rule"].get<std::string>() << "] " << v["detail"].get<std::string>() << "\n";
  s << "hash " << j["hash"].get<std::string>() << "\n";
  emit(o, s.str(), j);
  return j["valid"].get<bool>() ? 0 : 1;
}

int cmd_invariants(const Options& o) {
  Handle h;
  if (int rc = load(o, h)) return rc;
  Out out;
  if (sconc_invariants(h.h, &out.p) != SCONC_OK) return report_error(o, out.json());
  const Json j = out.json();
  std::ostringstream s;
  s << "mu     " << bits(j["mu"]) << "\n";
  if (j["fq"].is_null()) s << "fq     not applicable\n";
  else s << "fq     " << bits(j["fq"]["rep"]) << (j["fq"]["is_zero"].get<bool>() ? "  (zero)" : "") << "\n";
  s << "delta  " << bits(j["delta"]) << "\n";
  s << "km     " << bits(j["km"]["rep"]) << (j["km"]["is_zero"].get<bool>() ? "  (zero)" : "") << "\n";
  s << "km(a)  " << bits(j["km_rel_alpha"]["value"]) << "  tag '" << j["km_rel_alpha"]["tag"].get<std::string>() << "'\n";
  for (const auto& n : j["notes"]) s << "note: " << n.get<std::string>() << "\n";
  emit(o, s.str(), j);
  return 0;
}

int cmd_apply(const Options& o) {
  Handle h;
  if (int rc = load(o, h)) return rc;
  Out out;
  std::string script;
  if (!o.script.empty()) script = read_file(o.script);
  if (sconc_apply(h.h, o.script.empty() ? nullptr : script.c_str(), &out.p) != SCONC_OK)
    return report_error(o, out.json());
  const Json j = out.json();
  write_trace(o, j["trace"]);
  std::ostringstream s;
  for (const auto& st : j["trace"]["steps"]) s << "  " << st["move"].get<std::string>() << " " << st["params"].dump() << "\n";
  s << j["trace"]["steps"].size() << " steps, final hash " << j["final_hash"].get<std::string>() << "\n";
  emit(o, s.str(), j);
  return 0;
}

int cmd_simplify(const Options& o) {
  Handle h;
  if (int rc = load(o, h)) return rc;
  Out out;
  if (sconc_simplify(h.h, &out.p) != SCONC_OK) return report_error(o, out.json());
  const Json j = out.json();
  write_trace(o, j["trace"]);
  std::ostringstream s;
  s << "hopf pair " << j["hopf"] << " labeled " << j["label"].dump() << ", eps " << bits(j["label_eps"]) << ", delta "
    << bits(j["delta"]) << "\n"
    << j["steps"] << " steps, final hash " << j["final_hash"].get<std::string>() << "\n";
  emit(o, s.str(), j);
  return 0;
}

int cmd_decide(const Options& o) {
  Handle h;
  if (int rc = load(o, h)) return rc;
  Out out;
  if (sconc_decide(h.h, &out.p) != SCONC_OK) return report_error(o, out.json());
  const Json j = out.json();
  write_trace(o, j["trace"]);
  std::ostringstream s;
  s << "verdict " << j["verdict"].get<std::string>() << ", class " << bits(j["class"]) << "\n";
  if (!j["reason"].get<std::string>().empty()) s << "reason: " << j["reason"].get<std::string>() << "\n";
  for (const auto& n : j["notes"]) s << "note: " << n.get<std::string>() << "\n";
  s << j["trace"]["steps"].size() << " steps, " << j["final_state"]["circles"].size() << " circles left, final hash "
    << j["final_hash"].get<std::string>() << "\n";
  emit(o, s.str(), j);
  return j["obstructed"].get<bool>() ? 2 : 0;
}

int cmd_bound(const Options& o) {
  Handle h;
  if (int rc = load(o, h)) return rc;
  Out out;
  if (sconc_bound(h.h, &out.p) != SCONC_OK) return report_error(o, out.json());
  const Json j = out.json();
  std::ostringstream s;
  if (j["bound"].is_null()) s << "bound not applicable: " << j["reason"].get<std::string>() << "\n";
  else s << "at most " << j["bound"] << " concordance classes (|T| = " << j["two_torsion"] << ", dim H1 = " << j["h1_dim"] << ")\n";
  emit(o, s.str(), j);
  return 0;
}

int cmd_sweep(const Options& o) {
  Out out;
  if (sconc_sweep(o.seed, o.count, o.threads, &out.p) != SCONC_OK) return report_error(o, out.json());
  const Json j = out.json();
  std::ostringstream s;
  s << "seed " << o.seed << ": " << j["states"] << " states, " << j["moves"] << " moves, " << j["violations"]
    << " violations\n";
  for (const auto& [k, v] : j["per_move"].items()) s << "  " << k << " " << v << "\n";
  for (const auto& m : j["messages"]) s << "  ! " << m.get<std::string>() << "\n";
  emit(o, s.str(), j);
  return j["violations"].get<uint64_t>() == 0 ? 0 : 1;
}

int cmd_crosscheck(const Options& o) {
  Out out;
  if (sconc_crosscheck(o.rule.empty() ? nullptr : o.rule.c_str(), &out.p) != SCONC_OK) return report_error(o, out.json());
  const Json j = out.json();
  std::ostringstream s;
  for (const auto& r : j["rules"]) {
    s << r["rule"].get<std::string>() << ": " << r["cases"] << " cases, " << r["mismatches"].size() << " mismatches\n";
    for (const auto& m : r["mismatches"]) s << "  ! " << m.get<std::string>() << "\n";
  }
  emit(o, s.str(), j);
  return j["mismatches"].get<std::size_t>() == 0 ? 0 : 1;
}

int cmd_scene(const Options& o) {
  Json p = Json::object();
  for (const auto& kv : o.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--param", "expected key=value, got " + kv);
    p[kv.substr(0, eq)] = std::stoi(kv.substr(eq + 1));
  }
  const std::string ps = p.dump();
  Out out;
  if (sconc_scene(o.scene.c_str(), ps.c_str(), &out.p) != SCONC_OK) return report_error(o, out.json());
  std::cout << out.p;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sconc: singular concordance calculus"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  std::string format = "human";
  app.add_option("--format", format, "human (text plus machine block) or machine (JSON only)")
      ->check(CLI::IsMember({"human", "machine"}));
  app.set_version_flag("--version", sconc_version());

  auto scenario_cmd = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("scenario", o.scenario, "scenario file")->required()->check(CLI::ExistingFile);
    return c;
  };
  scenario_cmd("validate", "check structural invariants of a scenario state");
  scenario_cmd("invariants", "compute mu, fq, delta and km");
  auto* apply = scenario_cmd("apply", "run a move script or replay a trace");
  apply->add_option("script", o.script, "script or trace file; defaults to the scenario's own script")
      ->check(CLI::ExistingFile);
  apply->add_option("--trace-out", o.trace_out, "write the trace here");
  auto* simplify = scenario_cmd("simplify", "reduce to a single Hopf pair");
  simplify->add_option("--trace-out", o.trace_out, "write the trace here");
  auto* decide = scenario_cmd("decide", "decide concordance (exit 0 concordant, 2 obstructed)");
  decide->add_option("--trace-out", o.trace_out, "write the trace here");
  scenario_cmd("bound", "upper bound on concordance classes");
  auto* sweep = app.add_subcommand("sweep", "randomized move-invariance sweep");
  sweep->add_option("--seed", o.seed, "generator seed");
  sweep->add_option("--count", o.count, "number of random states")->check(CLI::NonNegativeNumber);
  sweep->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  auto* cross = app.add_subcommand("crosscheck", "compare move rules with the diagram oracle");
  cross->add_option("--rule", o.rule, "single rule (default: all)");
  auto* scene = app.add_subcommand("scene", "print a scene diagram in the text codec");
  scene->add_option("name", o.scene, "scene name")->required();
  scene->add_option("--param", o.params, "integer parameter key=value (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  o.format = format == "machine" ? Format::kMachine : Format::kHuman;

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "validate") return cmd_validate(o);
    if (cmd == "invariants") return cmd_invariants(o);
    if (cmd == "apply") return cmd_apply(o);
    if (cmd == "simplify") return cmd_simplify(o);
    if (cmd == "decide") return cmd_decide(o);
    if (cmd == "bound") return cmd_bound(o);
    if (cmd == "sweep") return cmd_sweep(o);
    if (cmd == "crosscheck") return cmd_crosscheck(o);
    if (cmd == "scene") return cmd_scene(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cout << Json{{"error", {{"code", 1}, {"status", "cli"}, {"message", e.what()}}}}.dump() << "\n";
    return 1;
  }
  return 1;
}
