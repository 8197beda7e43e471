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

#include "listdec/simplex.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace listdec {

/// Real k-sparse vector of unit Euclidean norm in R^N.
class SparseUnitVector {
 public:
  SparseUnitVector(std::size_t dimension, std::size_t k, std::vector<std::size_t> support,
                   std::vector<double> values);

  std::size_t dimension() const { return dimension_; }
  std::size_t k() const { return k_; }
  const std::vector<std::size_t>& support() const { return support_; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double> dense() const;

 private:
  std::size_t dimension_;
  std::size_t k_;
  std::vector<std::size_t> support_;
  std::vector<double> values_;
};

/// Uniformly random support of size k with Gaussian values, normalized.
SparseUnitVector random_sparse_unit(std::size_t dimension, std::size_t k, std::uint64_t seed);

/// (sum_t (sum_alpha |<M_{t,alpha}, v>|^2)^s)^(1/2s), with rows of M grouped by t
/// through its group_size.
double xprime_norm(const ComplexMatrix& m, unsigned s, std::span<const double> v);

/// Maurey's empirical approximation Z = (sqrt(k)/m) sum_i Z_i of x. Each Z_i is 0
/// with probability 1 - ||x'||_1 (x' = x/sqrt(k)), otherwise sgn(x'_j) e_j with j
/// drawn proportionally to |x'_j|. Returned dense, length N.
std::vector<double> maurey_sample(const SparseUnitVector& x, std::size_t m, std::uint64_t seed);

struct CoveringPoint {
  std::size_t m = 0;
  double mean_error = 0.0;
  double std_error = 0.0;
  double envelope = 0.0;  // c |T|^(1/2s) sqrt(4 q k s / m)
};

struct CoveringCurve {
  std::vector<CoveringPoint> points;
  double envelope_constant = 0.0;  // c, fitted at the largest m
  double slope = 0.0;              // least-squares slope of log(mean_error) on log(m)
};

/// Monte Carlo mean of ||Z - x||_{X'} for each m; draw r at the i-th sample count
/// is seeded with derive_seed(seed, i, r).
CoveringCurve covering_error_curve(const SparseUnitVector& x, const ComplexMatrix& m, unsigned s,
                                   std::span<const std::size_t> m_values, std::size_t trials,
                                   std::uint64_t seed, unsigned threads = 1);

/// Least-squares slope of log(y) against log(x); NaN if any y is not positive.
double loglog_slope(std::span<const double> x, std::span<const double> y);

using ExactRational = boost::multiprecision::cpp_rational;

struct ChaosMoment {
  ExactRational exact;
  double value = 0.0;
};

constexpr std::size_t kChaosMaxDimension = 14;
constexpr unsigned kChaosMaxMoment = 4;

/// E (sum_{i,j} a_ij eps_i eps_j)^s over independent signs, by enumerating all 2^m
/// sign patterns in exact arithmetic. `a` is m x m row-major; every double is a
/// dyadic rational, so nothing is rounded until `value`.
ChaosMoment chaos_moment_exact(std::span<const double> a, std::size_t m, unsigned s);

/// (4 K m s)^s, exactly.
ExactRational chaos_moment_bound(double K, std::size_t m, unsigned s);

/// |E| <= (4 K m s)^s, compared exactly.
bool chaos_moment_within_bound(const ChaosMoment& moment, double K, std::size_t m, unsigned s);

/// Whether a (a/(1+a))^(1/(1+mu)) <= delta^((2+mu)/(1+mu)) / 4.
bool delta_sqr_check(double a, double mu, double delta);

}  // namespace listdec
