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

#include "listdec/gf.hpp"
#include "listdec/simplex.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace listdec {

constexpr std::uint64_t kLinBudget = std::uint64_t{1} << 13;
constexpr std::uint64_t kSupportBudget = 10'000'000;

/// q^ktilde x q^ktilde matrix of inner products <x, y> over GF(q)^ktilde, rows and
/// columns in message-index order.
LabelMatrix lin_matrix(const FieldPtr& field, std::size_t ktilde);

/// A multiset of Lin rows drawn uniformly with replacement.
struct SampledRows {
  std::vector<std::uint32_t> rows;
  std::uint64_t seed = 0;
};

SampledRows sample_T(const FieldPtr& field, std::size_t ktilde, std::size_t size, std::uint64_t seed);

/// Simplex encoding of the Lin rows listed in T: (q-1)|T| x q^ktilde, rows grouped
/// per t in T, column x equal to phi((<t, x>)_{t in T}).
ComplexMatrix phi_lin_sub(const FieldPtr& field, std::size_t ktilde, std::span<const std::uint32_t> T);

/// Normalized real Gram matrix, queried entry by entry.
class GramSource {
 public:
  virtual ~GramSource() = default;
  virtual std::size_t size() const = 0;
  virtual double entry(std::size_t i, std::size_t j) const = 0;
};

/// Gram of an explicit matrix, M^dagger M / normalizer^2. Throws InputError when an
/// entry has imaginary part above 1e-9: real test vectors then no longer suffice.
/// Matrices with at most 1024 columns are tabulated (and fully checked) up front.
class DenseGram final : public GramSource {
 public:
  DenseGram(const ComplexMatrix& m, double normalizer);
  std::size_t size() const override { return m_->cols(); }
  double entry(std::size_t i, std::size_t j) const override;

 private:
  double compute(std::size_t i, std::size_t j) const;

  const ComplexMatrix* m_;
  double scale_;
  std::vector<double> table_;
};

/// Gram of phi(Lin_T) / sqrt((q-1)|T|) without forming the matrix. Entry (x, y)
/// depends only on x - y: it is sum_{t in T} (q [<t, x-y> = 0] - 1) / ((q-1)|T|).
class LinGram final : public GramSource {
 public:
  LinGram(const FieldPtr& field, std::size_t ktilde, std::span<const std::uint32_t> T);
  std::size_t size() const override { return profile_.size(); }
  double entry(std::size_t i, std::size_t j) const override { return profile_[difference(i, j)]; }

 private:
  std::size_t difference(std::size_t i, std::size_t j) const;

  FieldPtr field_;
  std::size_t ktilde_;
  std::vector<double> profile_;  // normalized Gram entry at difference index z
};

enum class RipMethod { exact, sampled, full_support_bound };

std::string to_string(RipMethod method);

struct RipReport {
  std::size_t k = 0;
  double delta = 0.0;
  std::vector<std::size_t> witness_support;
  RipMethod method = RipMethod::exact;
  std::uint64_t supports_examined = 0;
};

/// max(lambda_max - 1, 1 - lambda_min) of the Gram submatrix on `support`.
double support_delta(const GramSource& gram, std::span<const std::size_t> support);

/// Exact RIP-2 constant of order k: maximum of support_delta over all k-supports,
/// witness the lexicographically least maximizer. Supports whose Gershgorin bound
/// cannot beat the running maximum are skipped without an eigen-solve.
/// Throws BudgetError when C(N, k) > 10^7.
RipReport rip_constant_exact(const GramSource& gram, std::size_t k);
RipReport rip_constant_exact(const ComplexMatrix& m, std::size_t k, double normalizer);

/// Lower bound on the RIP-2 constant: `trials` random supports, each climbed by
/// best-improvement single-column swaps until no swap raises its delta.
RipReport rip_constant_sampled(const GramSource& gram, std::size_t k, std::size_t trials,
                               std::uint64_t seed);
RipReport rip_constant_sampled(const ComplexMatrix& m, std::size_t k, double normalizer,
                               std::size_t trials, std::uint64_t seed);

/// Delta of the full support. By eigenvalue interlacing it bounds the RIP-2 constant
/// of every order k <= N from above.
RipReport rip_full_support_bound(const GramSource& gram);

enum class RipMode { automatic, exact, sampled };

struct RowSearchOptions {
  double success_threshold = 0.9;
  RipMode mode = RipMode::automatic;  // automatic: exact when C(N, k) fits the budget
  std::size_t sampled_trials = 8;     // random starts per sampled RIP estimate
  unsigned threads = 1;
};

struct RowProbe {
  std::size_t rows = 0;
  double success_prob = 0.0;
};

struct RowSearchResult {
  std::size_t m_star = 0;
  std::vector<RowProbe> probes;  // in the order evaluated
  RipMethod method = RipMethod::exact;
};

/// Least |T| at which phi(Lin_T)/sqrt((q-1)|T|) has RIP-2 constant <= delta_target in
/// at least success_threshold of `confidence_trials` independent draws of T.
/// The search doubles |T| from 1 and then bisects; trial r at size m uses the seed
/// derive_seed(seed, m, r). Throws BudgetError when |T| = 16 q^ktilde still fails.
RowSearchResult min_rows_for_rip(const FieldPtr& field, std::size_t ktilde, std::size_t k,
                                 double delta_target, std::size_t confidence_trials,
                                 std::uint64_t seed, const RowSearchOptions& options = {});

}  // namespace listdec
