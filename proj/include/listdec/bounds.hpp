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

#include <cstdint>
#include <string>

namespace listdec {

enum class BoundKind { avg_johnson, simplified, deletion, rip_to_ld };

std::string to_string(BoundKind kind);

/// A (radius, list_size) list-decodability guarantee and the result it came from.
struct ListDecodingBound {
  double radius = 0.0;
  std::uint64_t list_size = 1;
  BoundKind provenance = BoundKind::avg_johnson;
};

/// J_q(x) = ((q-1)/q) (1 - sqrt(1 - q x / (q-1))) for x in [0, 1 - 1/q].
double johnson_radius(unsigned q, double x);

/// Radius J_q(delta (1 - 1/L)), list size L - 1, for codes whose every L-subset
/// has average pairwise distance at least delta. Requires delta (1 - 1/L) <= 1 - 1/q,
/// which every realizable average distance satisfies.
ListDecodingBound avg_johnson_bound(unsigned q, double delta, std::uint64_t L);

/// Radius (1 - 1/q)(1 - sqrt(eps + 1/L)), list size L - 1.
ListDecodingBound simplified_johnson(unsigned q, double eps, std::uint64_t L);

/// Radius J_q(eta - eta/L), list size A L - 1, when every codeword has at most A
/// codewords (itself included) at distance below eta.
ListDecodingBound deletion_bound(unsigned q, double eta, std::uint64_t A, std::uint64_t L);

/// Radius (1 - 1/q)(1 - sqrt(1.5/(L-1))), list size L - 1, for codes whose
/// normalized simplex matrix has RIP-2 of order L with constant 1/2.
ListDecodingBound rip_to_ld_radius(unsigned q, std::uint64_t L);

/// Average-distance floor (1 - 1/q)(1 - 1/(2(L-1))) implied by RIP-2 of order L, constant 1/2.
double rip_distance_floor(unsigned q, std::uint64_t L);

/// eps^2 / (log2(1/gamma) log2^3(q/eps) log2(q)), each logarithm clamped below at 1.
/// The leading constant is fixed to 1; this is a rate shape, not a certified rate.
double main_rate_bound(unsigned q, double eps, double gamma);

}  // namespace listdec
