/*
 * Copyright 2026 The halfspin Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <set>

#include "checks.hpp"
#include "halfspin/ideal.hpp"
#include "json.hpp"

#ifndef HALFSPIN_VERSION
#define HALFSPIN_VERSION "unknown"
#endif

namespace halfspin::suites {

namespace {

constexpr int kLevelCap = 12;

using CheckFn = Outcome (*)(int, const CheckContext&);

struct CheckEntry {
  const char* suite;
  const char* name;
  const char* anchor;
  int min_n;
  int max_n;
  bool dense;
  CheckFn run;
};

Outcome diagram_pi(int n, const CheckContext& ctx) {
  return check_cartan_diagram_pi(n, ctx.samples, ctx.seed, CartanContext::standard(n));
}

Outcome diagram_tau(int n, const CheckContext& ctx) {
  return check_cartan_diagram_tau(n, ctx.samples, ctx.seed, CartanContext::standard(n));
}

// Sorted by (suite, name).
const std::vector<CheckEntry>& registry() {
  static const std::vector<CheckEntry> entries = [] {
    std::vector<CheckEntry> s = {
        {"cartan", "contraction-diagram", "cartan/contraction-square", 1, 6, true, diagram_pi},
        {"cartan", "lower-factorization", "cartan/lower-factorization", 4, 6, true, cartan_lower_factorization},
        {"cartan", "multiplication-diagram", "cartan/multiplication-square", 2, 6, true, diagram_tau},
        {"cartan", "pluecker-scaling", "cartan/pluecker-scaling", 1, 6, true, cartan_pluecker},
        {"clifford", "unit-orbit-rank", "clifford/unit-orbit", 1, 6, true, clifford_unit_orbit},
        {"clifford", "vector-square", "clifford/vector-square", 1, 6, true, clifford_vector_square},
        {"cone", "coordinate-lines", "cone/spin-line", 1, 6, true, cone_coordinate_lines},
        {"cone", "orbit-samples-pure", "cone/orbit-sampling", 1, 6, true, cone_orbit_samples},
        {"cone", "random-lines", "cone/spin-line", 1, 6, true, cone_random_lines},
        {"lowering", "solving-elements", "lowering/solving-element", 4, 6, false, lowering_solving_elements},
        {"lowering", "traces", "lowering/degree-lowering", 4, 8, false, lowering_traces},
        {"membership", "level-four-quadric", "membership/level-four-quadric", 4, 4, true, ideal_level_four_quadric},
        {"membership", "oracle-agreement", "membership/pullback-family", 4, 6, true, ideal_membership_agreement},
        {"membership", "span-equality", "membership/degree-two-span", 4, 5, true, ideal_span_equality},
        {"spinrep", "brackets", "spinrep/bracket", 1, 6, true, spinrep_brackets},
        {"spinrep", "gl-twist", "spinrep/gl-twist", 1, 6, true, spinrep_twist},
        {"spinrep", "highest-weights", "spinrep/highest-weights", 2, 6, true, spinrep_highest_weights},
        {"transfer", "beta-gram", "transfer/beta-gram", 1, 6, true, transfer_beta_gram},
        {"transfer", "contraction-inclusion", "transfer/contraction-inclusion", 1, 6, true, transfer_pi_tau},
        {"transfer", "dual-contraction", "transfer/dual-contraction", 2, 6, true, transfer_psidual},
        {"transfer", "equivariance", "transfer/equivariance", 2, 6, true, transfer_equivariance},
    };
    std::sort(s.begin(), s.end(), [](const CheckEntry& a, const CheckEntry& b) {
      return std::string(a.suite) + '\0' + a.name < std::string(b.suite) + '\0' + b.name;
    });
    return s;
  }();
  return entries;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string range_reason(const CheckEntry& entry, int n) {
  if (entry.dense && n > kDenseLevelLimit)
    return "dense operators are refused above n = " + std::to_string(kDenseLevelLimit);
  return "applies to " + std::to_string(entry.min_n) + " <= n <= " + std::to_string(entry.max_n);
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "unknown";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::set<std::string> s;
    for (const auto& entry : registry()) s.insert(entry.suite);
    return std::vector<std::string>(s.begin(), s.end());
  }();
  return names;
}

const std::vector<std::string>& known_anchors() {
  static const std::vector<std::string> anchors = [] {
    std::set<std::string> s;
    for (const auto& entry : registry()) s.insert(entry.anchor);
    return std::vector<std::string>(s.begin(), s.end());
  }();
  return anchors;
}

void validate(const SuiteConfig& c) {
  const auto& names = suite_names();
  if (c.suite != "all" && std::find(names.begin(), names.end(), c.suite) == names.end())
    throw ConfigError("unknown suite '" + c.suite + "'");
  if (c.n_min < 1) throw ConfigError("n-min must be at least 1");
  if (c.n_min > c.n_max) throw ConfigError("n-min exceeds n-max");
  if (c.n_max > kLevelCap) throw ConfigError("n-max above " + std::to_string(kLevelCap) + " does not fit the bit masks");
  if (c.samples < 1) throw ConfigError("samples must be at least 1");
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [&](const CheckResult& r) { return r.status == s; }));
}

Report run_suite(const SuiteConfig& config) {
  validate(config);
  Report report{HALFSPIN_VERSION, config, {}};
  for (const auto& suite : suite_names()) {
    if (config.suite != "all" && config.suite != suite) continue;
    for (int n = config.n_min; n <= config.n_max; ++n)
      for (const auto& entry : registry()) {
        if (entry.suite != suite) continue;
        CheckResult r{suite, n, entry.name, entry.anchor, Status::Skipped, {}, 0};
        const bool dense_refused = entry.dense && n > kDenseLevelLimit;
        if (n < entry.min_n || n > entry.max_n || dense_refused) {
          r.witness = range_reason(entry, n);
        } else {
          const std::string key = std::string(entry.suite) + "." + entry.name;
          const CheckContext ctx{config.samples, mix_seed(mix_seed(config.seed, fnv1a(key)), static_cast<std::uint64_t>(n))};
          const auto start = std::chrono::steady_clock::now();
          Outcome o;
          try {
            o = entry.run(n, ctx);
          } catch (const std::exception& e) {
            o = fail(std::string("exception: ") + e.what());
          }
          r.status = o.status;
          r.witness = std::move(o.witness);
          if (config.timings)
            r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        }
        const bool failed = r.status == Status::Fail;
        report.checks.push_back(std::move(r));
        if (failed && config.fail_fast) return report;
      }
  }
  return report;
}

std::string render_report(const Report& report) {
  using nlohmann::ordered_json;
  const SuiteConfig& c = report.config;
  ordered_json doc;
  doc["toolVersion"] = report.tool_version;
  doc["config"] = {{"suite", c.suite},     {"nMin", c.n_min},         {"nMax", c.n_max},
                   {"seed", c.seed},       {"samples", c.samples},    {"failFast", c.fail_fast},
                   {"timings", c.timings}};
  doc["summary"] = {{"pass", report.count(Status::Pass)},
                    {"fail", report.count(Status::Fail)},
                    {"skipped", report.count(Status::Skipped)}};
  ordered_json checks = ordered_json::array();
  for (const auto& r : report.checks)
    checks.push_back({{"suite", r.suite},
                      {"n", r.n},
                      {"name", r.name},
                      {"anchor", r.anchor},
                      {"status", to_string(r.status)},
                      {"witness", r.witness},
                      {"runtimeMillis", r.runtime_ms}});
  doc["checks"] = std::move(checks);
  return doc.dump(2) + "\n";
}

void emit_report(const Report& report, const std::string& path) {
  const std::string text = render_report(report);
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out.flush()) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace halfspin::suites
