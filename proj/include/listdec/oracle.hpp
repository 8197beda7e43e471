// Copyright 2026 The listdec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "listdec/codes.hpp"
#include "listdec/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace listdec {

enum class CenterMode { exhaustive, sampled };

std::string to_string(CenterMode mode);

constexpr std::uint64_t kCenterBudget = std::uint64_t{1} << 24;

struct OracleOptions {
  CenterMode mode = CenterMode::exhaustive;
  std::uint64_t budget = 0;  // number of centers in sampled mode
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct ListOracleResult {
  std::size_t max_count = 0;
  Word witness_center;
  CenterMode mode = CenterMode::exhaustive;
  std::uint64_t centers_examined = 0;
};

/// Number of codewords (by message index) at relative distance strictly less than rho.
std::size_t count_within(const LinearCode& code, std::span<const Symbol> center, const Rational& rho);

/// Largest number of codewords within relative distance < rho of a single center.
///
/// Exhaustive mode scans all q^n centers and is exact; ties go to the
/// lexicographically least center. Sampled mode scans `budget` centers taken as
/// the codewords themselves, then alternately codewords with floor(rho n)
/// coordinates re-randomized and uniform centers; its answer is a lower bound.
ListOracleResult list_size_at_radius(const LinearCode& code, const Rational& rho,
                                     const OracleOptions& options = {});

struct ListDecodabilityVerdict {
  bool ok = true;
  std::size_t max_count = 0;
  std::optional<Word> counterexample;
};

/// Exhaustive check that every ball of relative radius < rho holds at most ell codewords.
ListDecodabilityVerdict verify_list_decodable(const LinearCode& code, const Rational& rho,
                                              std::size_t ell, unsigned threads = 1);

/// Rational cutoff for a real radius, rounded down at 1e-9 granularity after
/// subtracting 1e-9, so a cutoff never exceeds the radius it stands for.
Rational radius_cutoff(double radius);

}  // namespace listdec
