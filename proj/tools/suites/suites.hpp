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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "halfspin/cartan.hpp"

namespace halfspin::suites {

// Suites that build dense 2^n operators refuse larger levels.
inline constexpr int kDenseLevelLimit = 6;

enum class Status { Pass, Fail, Skipped };
std::string to_string(Status s);

struct SuiteConfig {
  std::string suite = "all";
  int n_min = 1;
  int n_max = 4;
  std::uint64_t seed = 1;
  int samples = 20;
  std::string output_path;  // empty: standard output
  bool fail_fast = false;
  bool timings = false;  // off by default so reports are byte-stable
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws ConfigError for an unknown suite, an empty or non-positive level range, or samples < 1.
void validate(const SuiteConfig& config);

struct CheckResult {
  std::string suite;
  int n = 0;
  std::string name;
  std::string anchor;
  Status status = Status::Skipped;
  std::string witness;  // offending input on failure, reason when skipped
  std::int64_t runtime_ms = 0;
};

struct Report {
  std::string tool_version;
  SuiteConfig config;
  std::vector<CheckResult> checks;

  std::size_t count(Status s) const;
  bool passed() const { return count(Status::Fail) == 0; }
};

// Suite names accepted by --suite, without "all".
const std::vector<std::string>& suite_names();

// Every anchor a check may carry.
const std::vector<std::string>& known_anchors();

// Runs the selected suite over n_min..n_max. Checks are ordered by (suite, n, name).
Report run_suite(const SuiteConfig& config);

// Canonical JSON document with a fixed key order.
std::string render_report(const Report& report);

// Writes render_report to path, or to standard output when path is empty or "-".
void emit_report(const Report& report, const std::string& path);

// Outcome of one check body.
struct Outcome {
  Status status = Status::Pass;
  std::string witness;
};

// Individual checks, exposed so callers can run them with a modified sign context. n is the
// upper level: the contraction square starts at level n, the multiplication square at n − 1.
Outcome check_cartan_diagram_pi(int n, int samples, std::uint64_t seed, const CartanContext& ctx);
Outcome check_cartan_diagram_tau(int n, int samples, std::uint64_t seed, const CartanContext& ctx);

}  // namespace halfspin::suites
