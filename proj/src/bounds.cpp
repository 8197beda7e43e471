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

#include "listdec/bounds.hpp"

#include "listdec/error.hpp"

#include <algorithm>
#include <cmath>

namespace listdec {
namespace {

constexpr double kSlack = 1e-12;

double alphabet_limit(unsigned q) { return 1.0 - 1.0 / q; }

void check_q(unsigned q) { require(q >= 2, "alphabet size q must be >= 2"); }

}  // namespace

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::avg_johnson: return "avg_johnson";
    case BoundKind::simplified: return "simplified";
    case BoundKind::deletion: return "deletion";
    case BoundKind::rip_to_ld: return "rip_to_ld";
  }
  return "unknown";
}

double johnson_radius(unsigned q, double x) {
  check_q(q);
  const double limit = alphabet_limit(q);
  require(std::isfinite(x) && x >= -kSlack && x <= limit + kSlack,
          "Johnson radius argument outside [0, 1 - 1/q]");
  x = std::clamp(x, 0.0, limit);
  const double inside = std::max(0.0, 1.0 - q * x / (q - 1.0));
  return limit * (1.0 - std::sqrt(inside));
}

ListDecodingBound avg_johnson_bound(unsigned q, double delta, std::uint64_t L) {
  check_q(q);
  require(L >= 2, "list parameter L must be >= 2");
  require(std::isfinite(delta) && delta >= 0.0 && delta <= 1.0, "average distance outside [0, 1]");
  const double shrunk = delta * (1.0 - 1.0 / static_cast<double>(L));
  require(shrunk <= alphabet_limit(q) + kSlack, "delta (1 - 1/L) exceeds 1 - 1/q");
  return {johnson_radius(q, shrunk), L - 1, BoundKind::avg_johnson};
}

ListDecodingBound simplified_johnson(unsigned q, double eps, std::uint64_t L) {
  check_q(q);
  require(L >= 2, "list parameter L must be >= 2");
  require(std::isfinite(eps) && eps >= 0.0 && eps <= 1.0, "epsilon outside [0, 1]");
  const double inside = eps + 1.0 / static_cast<double>(L);
  require(inside <= 1.0 + kSlack, "eps + 1/L exceeds 1");
  return {alphabet_limit(q) * (1.0 - std::sqrt(std::min(inside, 1.0))), L - 1,
          BoundKind::simplified};
}

ListDecodingBound deletion_bound(unsigned q, double eta, std::uint64_t A, std::uint64_t L) {
  check_q(q);
  require(std::isfinite(eta) && eta > 0.0 && eta <= alphabet_limit(q) + kSlack,
          "eta outside (0, 1 - 1/q]");
  require(A >= 1, "neighbourhood count A must be >= 1");
  require(L >= 2, "list parameter L must be >= 2");
  const double x = eta - eta / static_cast<double>(L);
  return {johnson_radius(q, x), A * L - 1, BoundKind::deletion};
}

ListDecodingBound rip_to_ld_radius(unsigned q, std::uint64_t L) {
  check_q(q);
  require(L >= 3, "RIP-to-list-decoding needs L >= 3");
  const double radius = alphabet_limit(q) * (1.0 - std::sqrt(1.5 / static_cast<double>(L - 1)));
  return {radius, L - 1, BoundKind::rip_to_ld};
}

double rip_distance_floor(unsigned q, std::uint64_t L) {
  check_q(q);
  require(L >= 2, "list parameter L must be >= 2");
  return alphabet_limit(q) * (1.0 - 1.0 / (2.0 * static_cast<double>(L - 1)));
}

double main_rate_bound(unsigned q, double eps, double gamma) {
  check_q(q);
  require(std::isfinite(eps) && eps > 0.0 && eps < 1.0, "epsilon outside (0, 1)");
  require(std::isfinite(gamma) && gamma > 0.0 && gamma < 1.0, "gamma outside (0, 1)");
  const double l_gamma = std::max(1.0, std::log2(1.0 / gamma));
  const double l_q_eps = std::max(1.0, std::log2(q / eps));
  const double l_q = std::max(1.0, std::log2(static_cast<double>(q)));
  return eps * eps / (l_gamma * l_q_eps * l_q_eps * l_q_eps * l_q);
}

}  // namespace listdec
