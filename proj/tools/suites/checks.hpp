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
#include <random>
#include <string>

#include "halfspin/clifford.hpp"
#include "halfspin/spin_rep.hpp"
#include "suites.hpp"

namespace halfspin::suites {

struct CheckContext {
  int samples = 1;
  std::uint64_t seed = 0;
};

inline Outcome pass() { return {}; }
inline Outcome fail(std::string witness) { return {Status::Fail, std::move(witness)}; }
inline Outcome skip(std::string reason) { return {Status::Skipped, std::move(reason)}; }

// Small exact random inputs.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Rational rational();  // a/b with |a| ≤ 4, 1 ≤ b ≤ 3
  Rational nonzero_rational();
  int uniform(int lo, int hi);
  std::uint64_t next() { return rng_(); }

  // Every coordinate of the requested parity drawn independently.
  SpinVector spin(int n, Parity parity);
  VectorInV vector(int n);

 private:
  std::mt19937_64 rng_;
};

Outcome clifford_unit_orbit(int n, const CheckContext& ctx);
Outcome clifford_vector_square(int n, const CheckContext& ctx);

Outcome spinrep_highest_weights(int n, const CheckContext& ctx);
Outcome spinrep_brackets(int n, const CheckContext& ctx);
Outcome spinrep_twist(int n, const CheckContext& ctx);

Outcome transfer_pi_tau(int n, const CheckContext& ctx);
Outcome transfer_equivariance(int n, const CheckContext& ctx);
Outcome transfer_beta_gram(int n, const CheckContext& ctx);
Outcome transfer_psidual(int n, const CheckContext& ctx);

Outcome cone_coordinate_lines(int n, const CheckContext& ctx);
Outcome cone_random_lines(int n, const CheckContext& ctx);
Outcome cone_orbit_samples(int n, const CheckContext& ctx);

Outcome cartan_pluecker(int n, const CheckContext& ctx);
Outcome cartan_lower_factorization(int n, const CheckContext& ctx);

Outcome ideal_level_four_quadric(int n, const CheckContext& ctx);
Outcome ideal_membership_agreement(int n, const CheckContext& ctx);
Outcome ideal_span_equality(int n, const CheckContext& ctx);

Outcome lowering_traces(int n, const CheckContext& ctx);
Outcome lowering_solving_elements(int n, const CheckContext& ctx);

}  // namespace halfspin::suites
