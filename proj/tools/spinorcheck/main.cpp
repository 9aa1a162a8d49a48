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

#include <bit>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "halfspin/grassmann.hpp"
#include "halfspin/ideal.hpp"
#include "json.hpp"
#include "suites.hpp"

namespace {

using halfspin::Parity;
using halfspin::Rational;
using halfspin::SpinVector;
using nlohmann::ordered_json;

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

Parity parse_parity(const std::string& s) {
  if (s == "even") return Parity::Even;
  if (s == "odd") return Parity::Odd;
  throw halfspin::suites::ConfigError("parity must be 'even' or 'odd'");
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw halfspin::suites::ConfigError("not a rational number: '" + text + "'");
  if (sgn(r.get_den()) == 0) throw halfspin::suites::ConfigError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

ordered_json coordinates(const SpinVector& x) {
  ordered_json out = ordered_json::object();
  for (const auto& [m, c] : x.terms()) out[halfspin::subset_name(m)] = c.get_str();
  return out;
}

void write_document(const ordered_json& doc, const std::string& path) {
  const std::string text = doc.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text).flush()) throw std::runtime_error("cannot write " + path);
}

void check_level(int n) {
  if (n < 1 || n > halfspin::suites::kDenseLevelLimit)
    throw halfspin::suites::ConfigError("n must lie in 1.." + std::to_string(halfspin::suites::kDenseLevelLimit));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites for spin representations and pure spinors"};
  app.set_version_flag("--version", std::string(HALFSPIN_VERSION));

  halfspin::suites::SuiteConfig config;
  std::string suites_help = "all";
  for (const auto& s : halfspin::suites::suite_names()) suites_help += "|" + s;
  app.add_option("--suite", config.suite, suites_help)->capture_default_str();
  app.add_option("--n-min", config.n_min, "Smallest level")->capture_default_str();
  app.add_option("--n-max", config.n_max, "Largest level")->capture_default_str();
  app.add_option("--seed", config.seed, "Base seed")->capture_default_str();
  app.add_option("--samples", config.samples, "Random samples per check")->capture_default_str();
  app.add_option("--out", config.output_path, "Report path (default: standard output)");
  app.add_flag("--fail-fast", config.fail_fast, "Stop at the first failing check");
  app.add_flag("--timings", config.timings, "Record runtimeMillis (reports are then not byte-stable)");

  int level = 4;
  std::uint64_t seed = 1;
  std::string parity = "even", out_path;
  int count = 1, degree = 2;
  std::string coords;

  auto* sample = app.add_subcommand("sample", "Print seeded points of the pure spinor cone");
  sample->add_option("--n", level, "Level")->required();
  sample->add_option("--parity", parity, "even|odd")->capture_default_str();
  sample->add_option("--count", count, "Number of points")->capture_default_str();
  sample->add_option("--seed", seed, "Seed")->capture_default_str();
  sample->add_option("--out", out_path, "Output path");

  auto* quadric = app.add_subcommand("quadric", "Print a basis of the forms vanishing on the cone");
  quadric->add_option("--n", level, "Level")->required();
  quadric->add_option("--degree", degree, "Degree")->capture_default_str();
  quadric->add_option("--parity", parity, "even|odd")->capture_default_str();
  quadric->add_option("--seed", seed, "Seed")->capture_default_str();
  quadric->add_option("--out", out_path, "Output path");

  auto* pure = app.add_subcommand("pure", "Decide purity of a spinor given by dense coordinates");
  pure->add_option("--coords", coords, "Comma separated rationals indexed by subset mask (length 2^n)")->required();
  pure->add_option("--out", out_path, "Output path");

  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (sample->parsed()) {
      check_level(level);
      if (count < 1) throw halfspin::suites::ConfigError("count must be at least 1");
      const Parity p = parse_parity(parity);
      ordered_json doc;
      doc["n"] = level;
      doc["parity"] = parity;
      doc["seed"] = seed;
      doc["points"] = ordered_json::array();
      for (const auto& x : halfspin::cone_samples(level, p, static_cast<std::size_t>(count), seed))
        doc["points"].push_back(coordinates(x));
      write_document(doc, out_path);
      return 0;
    }
    if (quadric->parsed()) {
      check_level(level);
      if (degree < 1) throw halfspin::suites::ConfigError("degree must be at least 1");
      const auto found = halfspin::discover_vanishing_forms(level, parse_parity(parity), degree, seed);
      ordered_json doc;
      doc["n"] = level;
      doc["degree"] = degree;
      doc["parity"] = parity;
      doc["seed"] = seed;
      doc["pointsPerSeed"] = found.points_per_seed;
      doc["dimension"] = found.forms.size();
      doc["forms"] = ordered_json::array();
      for (const auto& f : found.forms) doc["forms"].push_back(f.to_string());
      write_document(doc, out_path);
      return 0;
    }
    if (pure->parsed()) {
      std::vector<Rational> values;
      std::stringstream ss(coords);
      for (std::string item; std::getline(ss, item, ',');) values.push_back(parse_rational(item));
      if (values.size() < 2 || !std::has_single_bit(values.size()))
        throw halfspin::suites::ConfigError("expected 2^n coordinates, got " + std::to_string(values.size()));
      const int n = std::countr_zero(values.size());
      check_level(n);
      const SpinVector x = SpinVector::from_dense(n, values);
      const auto result = halfspin::is_pure(x);
      ordered_json doc;
      doc["n"] = n;
      doc["verdict"] = halfspin::to_string(result.verdict);
      doc["annihilatorDim"] = result.annihilator_dim;
      doc["vector"] = coordinates(x);
      write_document(doc, out_path);
      return 0;
    }

    const auto report = halfspin::suites::run_suite(config);
    halfspin::suites::emit_report(report, config.output_path);
    return report.passed() ? 0 : kExitFail;
  } catch (const halfspin::suites::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
