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

#include "listdec/rip.hpp"

#include "listdec/codes.hpp"
#include "listdec/error.hpp"
#include "listdec/jacobi.hpp"
#include "listdec/parallel.hpp"
#include "listdec/random.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

namespace listdec {
namespace {

constexpr double kRealTolerance = 1e-9;
constexpr double kTieSlack = 1e-12;
constexpr std::size_t kTabulateLimit = 1024;

std::size_t message_count(const Field& f, std::size_t ktilde) {
  const std::uint64_t N = checked_power(f.q(), ktilde, kLinBudget);
  require_budget(N <= kLinBudget, "q^ktilde exceeds the Lin budget 2^13");
  return static_cast<std::size_t>(N);
}

// Values <t, z> for every message index z, built digit by digit.
std::vector<Symbol> linear_form_values(const Field& f, std::size_t ktilde, std::uint32_t t) {
  const Word digits = message_vector(f.q(), ktilde, t);
  std::vector<Symbol> tab{0};
  for (std::size_t l = 0; l < ktilde; ++l) {
    std::vector<Symbol> next(tab.size() * f.q());
    for (std::size_t hi = 0; hi < tab.size(); ++hi) {
      for (unsigned d = 0; d < f.q(); ++d) {
        next[hi * f.q() + d] = f.add(tab[hi], f.mul(digits[l], static_cast<Symbol>(d)));
      }
    }
    tab = std::move(next);
  }
  return tab;
}

void check_rows(const Field& f, std::size_t N, std::span<const std::uint32_t> T) {
  require(!T.empty(), "row multiset T must be non-empty");
  for (auto t : T) require(t < N, "row index out of range for GF(" + std::to_string(f.q()) + ")^ktilde");
}

template <typename Entry>
double delta_of(Entry&& G, std::span<const std::size_t> support, std::vector<double>& scratch) {
  const std::size_t k = support.size();
  scratch.resize(k * k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      const double v = G(support[a], support[b]);
      scratch[a * k + b] = v;
      scratch[b * k + a] = v;
    }
  }
  const EigenRange r = jacobi_eigen_range(scratch, k);
  return std::max(r.max - 1.0, 1.0 - r.min);
}

template <typename Entry>
RipReport exact_search(std::size_t N, std::size_t k, Entry&& G) {
  RipReport report;
  report.k = k;
  report.method = RipMethod::exact;
  std::vector<double> diag_dev(N);
  for (std::size_t i = 0; i < N; ++i) diag_dev[i] = std::abs(G(i, i) - 1.0);

  std::vector<std::size_t> idx(k);
  std::vector<std::vector<double>> sums(k, std::vector<double>(k, 0.0));
  std::vector<double> contrib(k);
  std::vector<double> scratch;
  double best = -1.0;
  std::size_t depth = 0;
  idx[0] = 0;
  while (true) {
    if (idx[depth] > N - (k - depth)) {
      if (depth == 0) break;
      --depth;
      ++idx[depth];
      continue;
    }
    const std::size_t j = idx[depth];
    double total = 0.0;
    for (std::size_t a = 0; a < depth; ++a) {
      contrib[a] = std::abs(G(idx[a], j));
      total += contrib[a];
    }
    if (depth + 1 == k) {
      ++report.supports_examined;
      double bound = diag_dev[j] + total;
      for (std::size_t a = 0; a < depth; ++a) {
        bound = std::max(bound, diag_dev[idx[a]] + sums[depth][a] + contrib[a]);
      }
      if (best < 0.0 || bound > best + kTieSlack) {
        const double d = delta_of(G, idx, scratch);
        if (best < 0.0 || d > best + kTieSlack) {
          best = d;
          report.witness_support = idx;
        }
      }
      ++idx[depth];
    } else {
      for (std::size_t a = 0; a < depth; ++a) sums[depth + 1][a] = sums[depth][a] + contrib[a];
      sums[depth + 1][depth] = total;
      idx[depth + 1] = j + 1;
      ++depth;
    }
  }
  report.delta = std::max(0.0, best);
  return report;
}

template <typename Fn>
decltype(auto) with_accessor(const GramSource& gram, Fn&& fn) {
  const std::size_t N = gram.size();
  if (N <= kTabulateLimit) {
    std::vector<double> table(N * N);
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = i; j < N; ++j) {
        const double v = gram.entry(i, j);
        table[i * N + j] = v;
        table[j * N + i] = v;
      }
    }
    return fn([&table, N](std::size_t i, std::size_t j) { return table[i * N + j]; });
  }
  return fn([&gram](std::size_t i, std::size_t j) { return gram.entry(i, j); });
}

void check_order(std::size_t N, std::size_t k) {
  require(k >= 1, "RIP order k must be >= 1");
  require(k <= N, "RIP order k exceeds the number of columns");
}

}  // namespace

std::string to_string(RipMethod method) {
  switch (method) {
    case RipMethod::exact: return "exact";
    case RipMethod::sampled: return "sampled";
    case RipMethod::full_support_bound: return "full_support_bound";
  }
  return "unknown";
}

LabelMatrix lin_matrix(const FieldPtr& field, std::size_t ktilde) {
  require(field != nullptr, "lin_matrix without a field");
  require(ktilde >= 1, "ktilde must be >= 1");
  const std::size_t N = message_count(*field, ktilde);
  LabelMatrix m{field->q(), N, N, std::vector<Symbol>(N * N)};
  for (std::size_t t = 0; t < N; ++t) {
    const auto vals = linear_form_values(*field, ktilde, static_cast<std::uint32_t>(t));
    std::copy(vals.begin(), vals.end(), m.entries.begin() + static_cast<std::ptrdiff_t>(t * N));
  }
  return m;
}

SampledRows sample_T(const FieldPtr& field, std::size_t ktilde, std::size_t size, std::uint64_t seed) {
  require(field != nullptr, "sample_T without a field");
  require(size >= 1, "|T| must be >= 1");
  const std::size_t N = message_count(*field, ktilde);
  Rng rng(seed);
  SampledRows out;
  out.seed = seed;
  out.rows.resize(size);
  for (auto& r : out.rows) r = static_cast<std::uint32_t>(rng.uniform_below(N));
  return out;
}

ComplexMatrix phi_lin_sub(const FieldPtr& field, std::size_t ktilde, std::span<const std::uint32_t> T) {
  require(field != nullptr, "phi_lin_sub without a field");
  const std::size_t N = message_count(*field, ktilde);
  check_rows(*field, N, T);
  LabelMatrix m{field->q(), T.size(), N, std::vector<Symbol>(T.size() * N)};
  for (std::size_t r = 0; r < T.size(); ++r) {
    const auto vals = linear_form_values(*field, ktilde, T[r]);
    std::copy(vals.begin(), vals.end(), m.entries.begin() + static_cast<std::ptrdiff_t>(r * N));
  }
  return phi_matrix(m);
}

DenseGram::DenseGram(const ComplexMatrix& m, double normalizer) : m_(&m) {
  require(std::isfinite(normalizer) && normalizer > 0.0, "column normalizer must be positive");
  scale_ = normalizer * normalizer;
  const std::size_t N = m.cols();
  if (N <= kTabulateLimit) {
    table_.resize(N * N);
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = i; j < N; ++j) {
        const double v = compute(i, j);
        table_[i * N + j] = v;
        table_[j * N + i] = v;
      }
    }
  }
}

double DenseGram::compute(std::size_t i, std::size_t j) const {
  const Complex g = inner(m_->column(j), m_->column(i)) / scale_;
  if (std::abs(g.imag()) > kRealTolerance) {
    throw InputError("Gram matrix is not real at (" + std::to_string(i) + ", " + std::to_string(j) +
                     "); real test vectors do not determine the RIP constant");
  }
  return g.real();
}

double DenseGram::entry(std::size_t i, std::size_t j) const {
  if (!table_.empty()) return table_[i * m_->cols() + j];
  return compute(i, j);
}

LinGram::LinGram(const FieldPtr& field, std::size_t ktilde, std::span<const std::uint32_t> T)
    : field_(field), ktilde_(ktilde) {
  require(field != nullptr, "LinGram without a field");
  const std::size_t N = message_count(*field, ktilde);
  check_rows(*field, N, T);
  const unsigned q = field->q();
  std::vector<std::uint32_t> zeros(N, 0);
  if (q == 2) {
    for (auto t : T) {
      for (std::size_t z = 0; z < N; ++z) zeros[z] += (std::popcount(t & z) & 1) == 0;
    }
  } else {
    // Repeated rows share one table of linear-form values.
    std::map<std::uint32_t, std::uint32_t> multiplicity;
    for (auto t : T) ++multiplicity[t];
    for (const auto& [t, mult] : multiplicity) {
      const auto vals = linear_form_values(*field, ktilde, t);
      for (std::size_t z = 0; z < N; ++z) zeros[z] += vals[z] == 0 ? mult : 0;
    }
  }
  const double rows = static_cast<double>(T.size());
  profile_.resize(N);
  for (std::size_t z = 0; z < N; ++z) {
    profile_[z] = (q * static_cast<double>(zeros[z]) - rows) / ((q - 1) * rows);
  }
}

std::size_t LinGram::difference(std::size_t i, std::size_t j) const {
  if (field_->p() == 2) return i ^ j;
  const unsigned q = field_->q();
  std::size_t z = 0;
  std::size_t place = 1;
  for (std::size_t l = 0; l < ktilde_; ++l) {
    z += field_->sub(static_cast<Symbol>(i % q), static_cast<Symbol>(j % q)) * place;
    i /= q;
    j /= q;
    place *= q;
  }
  return z;
}

double support_delta(const GramSource& gram, std::span<const std::size_t> support) {
  require(!support.empty(), "empty support");
  for (auto s : support) require(s < gram.size(), "support index out of range");
  std::vector<double> scratch;
  return delta_of([&gram](std::size_t i, std::size_t j) { return gram.entry(i, j); }, support, scratch);
}

RipReport rip_constant_exact(const GramSource& gram, std::size_t k) {
  const std::size_t N = gram.size();
  check_order(N, k);
  require_budget(binomial(N, k) <= kSupportBudget, "C(N, k) exceeds the exact support budget 10^7");
  return with_accessor(gram, [&](auto&& G) { return exact_search(N, k, G); });
}

RipReport rip_constant_exact(const ComplexMatrix& m, std::size_t k, double normalizer) {
  check_order(m.cols(), k);
  require_budget(binomial(m.cols(), k) <= kSupportBudget, "C(N, k) exceeds the exact support budget 10^7");
  const DenseGram gram(m, normalizer);
  return rip_constant_exact(gram, k);
}

RipReport rip_constant_sampled(const GramSource& gram, std::size_t k, std::size_t trials,
                               std::uint64_t seed) {
  const std::size_t N = gram.size();
  check_order(N, k);
  require(trials >= 1, "sampled RIP needs at least one trial");

  return with_accessor(gram, [&](auto&& G) {
    RipReport report;
    report.k = k;
    report.method = RipMethod::sampled;
    double best = -1.0;
    std::vector<char> in_support(N, 0);
    std::vector<std::size_t> support(k);
    std::vector<std::size_t> candidate(k);
    std::vector<double> scratch;
    for (std::size_t trial = 0; trial < trials; ++trial) {
      Rng rng(derive_seed(seed, trial));
      std::fill(in_support.begin(), in_support.end(), 0);
      for (std::size_t a = 0; a < k; ++a) {
        std::size_t c;
        do {
          c = static_cast<std::size_t>(rng.uniform_below(N));
        } while (in_support[c]);
        in_support[c] = 1;
        support[a] = c;
      }
      std::sort(support.begin(), support.end());
      double current = delta_of(G, support, scratch);
      ++report.supports_examined;
      while (true) {
        double move_value = current;
        std::size_t move_pos = k;
        std::size_t move_col = 0;
        for (std::size_t c = 0; c < N; ++c) {
          if (in_support[c]) continue;
          for (std::size_t pos = 0; pos < k; ++pos) {
            candidate = support;
            candidate[pos] = c;
            const double d = delta_of(G, candidate, scratch);
            ++report.supports_examined;
            if (d > move_value + kTieSlack) {
              move_value = d;
              move_pos = pos;
              move_col = c;
            }
          }
        }
        if (move_pos == k) break;
        in_support[support[move_pos]] = 0;
        in_support[move_col] = 1;
        support[move_pos] = move_col;
        current = move_value;
      }
      std::sort(support.begin(), support.end());
      if (best < 0.0 || current > best + kTieSlack) {
        best = current;
        report.witness_support = support;
      } else if (current >= best - kTieSlack && support < report.witness_support) {
        report.witness_support = support;
      }
    }
    report.delta = std::max(0.0, best);
    return report;
  });
}

RipReport rip_constant_sampled(const ComplexMatrix& m, std::size_t k, double normalizer,
                               std::size_t trials, std::uint64_t seed) {
  const DenseGram gram(m, normalizer);
  return rip_constant_sampled(gram, k, trials, seed);
}

RipReport rip_full_support_bound(const GramSource& gram) {
  const std::size_t N = gram.size();
  require(N >= 1, "empty Gram matrix");
  std::vector<std::size_t> all(N);
  for (std::size_t i = 0; i < N; ++i) all[i] = i;
  RipReport report;
  report.k = N;
  report.method = RipMethod::full_support_bound;
  report.delta = std::max(0.0, support_delta(gram, all));
  report.witness_support = std::move(all);
  report.supports_examined = 1;
  return report;
}

RowSearchResult min_rows_for_rip(const FieldPtr& field, std::size_t ktilde, std::size_t k,
                                 double delta_target, std::size_t confidence_trials,
                                 std::uint64_t seed, const RowSearchOptions& options) {
  require(field != nullptr, "min_rows_for_rip without a field");
  const std::size_t N = message_count(*field, ktilde);
  check_order(N, k);
  require(std::isfinite(delta_target) && delta_target >= 0.0, "delta_target must be >= 0");
  require(confidence_trials >= 1, "confidence_trials must be >= 1");
  require(options.success_threshold > 0.0 && options.success_threshold <= 1.0,
          "success threshold must lie in (0, 1]");

  const bool exact_fits = binomial(N, k) <= kSupportBudget;
  RipMethod method;
  switch (options.mode) {
    case RipMode::exact:
      require_budget(exact_fits, "C(N, k) exceeds the exact support budget 10^7");
      method = RipMethod::exact;
      break;
    case RipMode::sampled: method = RipMethod::sampled; break;
    default: method = exact_fits ? RipMethod::exact : RipMethod::sampled;
  }

  RowSearchResult result;
  result.method = method;
  std::map<std::size_t, double> cache;
  auto probe = [&](std::size_t rows) {
    if (auto it = cache.find(rows); it != cache.end()) return it->second >= options.success_threshold;
    std::vector<char> success(confidence_trials, 0);
    parallel_for(confidence_trials, options.threads, [&](std::size_t r) {
      const std::uint64_t trial_seed = derive_seed(seed, rows, r);
      const SampledRows T = sample_T(field, ktilde, rows, trial_seed);
      const LinGram gram(field, ktilde, T.rows);
      const RipReport rep = method == RipMethod::exact
                                ? rip_constant_exact(gram, k)
                                : rip_constant_sampled(gram, k, options.sampled_trials,
                                                       derive_seed(trial_seed, 1));
      success[r] = rep.delta <= delta_target;
    });
    std::size_t hits = 0;
    for (char s : success) hits += s;
    const double prob = static_cast<double>(hits) / static_cast<double>(confidence_trials);
    cache.emplace(rows, prob);
    result.probes.push_back({rows, prob});
    return prob >= options.success_threshold;
  };

  const std::size_t cap = 16 * N;
  std::size_t lo = 0;  // largest size known to fail
  std::size_t hi = 1;
  while (!probe(hi)) {
    lo = hi;
    if (hi >= cap) throw BudgetError("row search exhausted at |T| = 16 q^ktilde without success");
    hi = std::min(cap, hi * 2);
  }
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (probe(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  result.m_star = hi;
  return result;
}

}  // namespace listdec
