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

#include <gmpxx.h>

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace halfspin {

// Exact scalars. mpq_class keeps values canonical after every arithmetic op.
using Rational = mpq_class;
using Integer = mpz_class;

// Subsets of {1..n} (or of the 2n symbols of V) packed into a machine word.
using Mask = std::uint32_t;

inline constexpr int kMaxLevel = 14;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

// 2^k for any integer k.
inline Rational power_of_two(int k) {
  Rational r(1);
  if (k >= 0) {
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(k));
  } else {
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(-k));
  }
  return r;
}

inline int popcount(Mask m) { return std::popcount(m); }

// Bit for the 1-based index i.
inline constexpr Mask bit(int i) { return Mask{1} << (i - 1); }

inline bool contains(Mask m, int i) { return (m & bit(i)) != 0; }

// Number of elements of m strictly greater than the 1-based index i.
inline int count_above(Mask m, int i) {
  return std::popcount(static_cast<Mask>(m & ~((Mask{1} << i) - 1)));
}

// Number of elements of m strictly smaller than the 1-based index i.
inline int count_below(Mask m, int i) {
  return std::popcount(static_cast<Mask>(m & (bit(i) - 1)));
}

inline int parity_sign(int k) { return (k & 1) ? -1 : 1; }

inline Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Ascending 1-based indices of a mask.
inline std::vector<int> indices_of(Mask m) {
  std::vector<int> out;
  while (m != 0) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

inline void require_level(int n) {
  if (n < 0 || n > kMaxLevel) {
    throw std::invalid_argument("level " + std::to_string(n) + " outside 0.." +
                                std::to_string(kMaxLevel));
  }
}

}  // namespace halfspin
