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

#include "listdec/chaining.hpp"

#include "listdec/error.hpp"
#include "listdec/parallel.hpp"
#include "listdec/random.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace listdec {
namespace {

using boost::multiprecision::cpp_int;

ExactRational exact_from_double(double x) {
  require(std::isfinite(x), "non-finite coefficient");
  if (x == 0.0) return ExactRational(0);
  int exponent = 0;
  const double mant = std::frexp(x, &exponent);
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
  cpp_int num = scaled;
  const int shift = exponent - 53;
  if (shift >= 0) return ExactRational(num << shift);
  return ExactRational(num, cpp_int(1) << -shift);
}

}  // namespace

SparseUnitVector::SparseUnitVector(std::size_t dimension, std::size_t k, std::vector<std::size_t> support,
                                   std::vector<double> values)
    : dimension_(dimension), k_(k), support_(std::move(support)), values_(std::move(values)) {
  require(k_ >= 1, "sparsity k must be >= 1");
  require(support_.size() == values_.size(), "support and value counts differ");
  require(support_.size() <= k_, "support larger than the sparsity bound");
  double norm2 = 0.0;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    require(support_[i] < dimension_, "support index out of range");
    require(std::isfinite(values_[i]), "non-finite entry");
    norm2 += values_[i] * values_[i];
  }
  std::vector<std::size_t> sorted = support_;
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), "repeated support index");
  require(std::abs(std::sqrt(norm2) - 1.0) <= 1e-12, "vector is not of unit norm");
}

std::vector<double> SparseUnitVector::dense() const {
  std::vector<double> v(dimension_, 0.0);
  for (std::size_t i = 0; i < support_.size(); ++i) v[support_[i]] = values_[i];
  return v;
}

SparseUnitVector random_sparse_unit(std::size_t dimension, std::size_t k, std::uint64_t seed) {
  require(k >= 1 && k <= dimension, "sparsity must lie in [1, N]");
  Rng rng(seed);
  std::vector<std::size_t> perm(dimension);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) std::swap(perm[i], perm[i + rng.uniform_below(dimension - i)]);
  std::vector<std::size_t> support(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(support.begin(), support.end());
  std::vector<double> values(k);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (auto& v : values) {
      v = rng.normal();
      norm2 += v * v;
    }
  } while (norm2 == 0.0);
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& v : values) v *= inv;
  return SparseUnitVector(dimension, k, std::move(support), std::move(values));
}

double xprime_norm(const ComplexMatrix& m, unsigned s, std::span<const double> v) {
  require(s >= 1, "X' exponent s must be >= 1");
  require(m.group_size() > 0, "X' norm needs row grouping metadata");
  require(v.size() == m.cols(), "vector dimension differs from the column count");
  std::vector<std::size_t> nz;
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c] != 0.0) nz.push_back(c);
  }
  if (nz.empty()) return 0.0;
  const std::size_t g = m.group_size();
  double total = 0.0;
  for (std::size_t t = 0; t < m.groups(); ++t) {
    double group = 0.0;
    for (std::size_t alpha = 0; alpha < g; ++alpha) {
      const std::size_t r = t * g + alpha;
      Complex acc(0.0, 0.0);
      for (std::size_t c : nz) acc += m(r, c) * v[c];
      group += std::norm(acc);
    }
    total += std::pow(group, static_cast<double>(s));
  }
  return std::pow(total, 1.0 / (2.0 * s));
}

std::vector<double> maurey_sample(const SparseUnitVector& x, std::size_t m, std::uint64_t seed) {
  require(m >= 1, "sample count m must be >= 1");
  const double root_k = std::sqrt(static_cast<double>(x.k()));
  const auto& vals = x.values();
  std::vector<double> cumulative(vals.size());
  double l1 = 0.0;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    l1 += std::abs(vals[i]) / root_k;
    cumulative[i] = l1;
  }
  Rng rng(seed);
  std::vector<double> z(x.dimension(), 0.0);
  const double weight = root_k / static_cast<double>(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double u = rng.uniform01();
    if (u >= l1) continue;  // Z_i = 0
    const std::size_t j = static_cast<std::size_t>(
        std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
    const std::size_t pick = std::min(j, vals.size() - 1);
    z[x.support()[pick]] += vals[pick] > 0 ? weight : -weight;
  }
  return z;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  require(x.size() == y.size() && x.size() >= 2, "slope fit needs at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0) || !(y[i] > 0)) return std::nan("");
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(x.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

CoveringCurve covering_error_curve(const SparseUnitVector& x, const ComplexMatrix& m, unsigned s,
                                   std::span<const std::size_t> m_values, std::size_t trials,
                                   std::uint64_t seed, unsigned threads) {
  require(!m_values.empty(), "no sample counts given");
  require(trials >= 1, "trials must be >= 1");
  require(m.group_size() > 0, "X' norm needs row grouping metadata");
  require(x.dimension() == m.cols(), "vector dimension differs from the column count");
  const double q = static_cast<double>(m.group_size() + 1);
  const double rows = static_cast<double>(m.groups());
  const double k = static_cast<double>(x.k());
  const auto xd = x.dense();

  CoveringCurve curve;
  for (std::size_t i = 0; i < m_values.size(); ++i) {
    const std::size_t mv = m_values[i];
    require(mv >= 1, "sample count m must be >= 1");
    std::vector<double> errors(trials);
    parallel_for(trials, threads, [&](std::size_t r) {
      auto z = maurey_sample(x, mv, derive_seed(seed, i, r));
      for (std::size_t i = 0; i < z.size(); ++i) z[i] -= xd[i];
      errors[r] = xprime_norm(m, s, z);
    });
    const double mean = std::accumulate(errors.begin(), errors.end(), 0.0) / static_cast<double>(trials);
    double var = 0.0;
    for (double e : errors) var += (e - mean) * (e - mean);
    var = trials > 1 ? var / static_cast<double>(trials - 1) : 0.0;
    CoveringPoint p;
    p.m = mv;
    p.mean_error = mean;
    p.std_error = std::sqrt(var / static_cast<double>(trials));
    p.envelope = std::pow(rows, 1.0 / (2.0 * s)) * std::sqrt(4.0 * q * k * s / static_cast<double>(mv));
    curve.points.push_back(p);
  }
  const auto largest = std::max_element(curve.points.begin(), curve.points.end(),
                                        [](const auto& a, const auto& b) { return a.m < b.m; });
  curve.envelope_constant = largest->mean_error / largest->envelope;
  std::vector<double> xs, ys;
  for (auto& p : curve.points) {
    p.envelope *= curve.envelope_constant;
    xs.push_back(static_cast<double>(p.m));
    ys.push_back(p.mean_error);
  }
  curve.slope = curve.points.size() >= 2 ? loglog_slope(xs, ys) : std::nan("");
  return curve;
}

ChaosMoment chaos_moment_exact(std::span<const double> a, std::size_t m, unsigned s) {
  require(m >= 1 && m <= kChaosMaxDimension, "chaos dimension m must lie in [1, 14]");
  require(s >= 1 && s <= kChaosMaxMoment, "chaos moment s must lie in [1, 4]");
  require(a.size() == m * m, "coefficient grid is not m x m");

  // Write every coefficient as A_ij 2^e_min with integer A_ij.
  int e_min = 0;
  bool any = false;
  std::vector<std::int64_t> mant(a.size(), 0);
  std::vector<int> expo(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    require(std::isfinite(a[i]), "non-finite coefficient");
    if (a[i] == 0.0) continue;
    int e = 0;
    const double f = std::frexp(a[i], &e);
    mant[i] = static_cast<std::int64_t>(std::ldexp(f, 53));
    expo[i] = e - 53;
    e_min = any ? std::min(e_min, expo[i]) : expo[i];
    any = true;
  }
  if (!any) return {ExactRational(0), 0.0};

  std::vector<cpp_int> coeff(a.size());
  std::size_t max_bits = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (mant[i] == 0) continue;
    coeff[i] = cpp_int(mant[i]) << (expo[i] - e_min);
    max_bits = std::max<std::size_t>(max_bits, msb(abs(coeff[i])) + 1);
  }

  cpp_int total = 0;
  const std::size_t patterns = std::size_t{1} << m;
  // 2 log2(m) + 1 extra bits bound the sum of m^2 terms.
  if (max_bits + 2 * std::bit_width(m) + 1 < 126) {
    std::vector<__int128> small(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      small[i] = static_cast<__int128>(coeff[i]);
    }
    for (std::size_t pat = 0; pat < patterns; ++pat) {
      __int128 quad = 0;
      for (std::size_t i = 0; i < m; ++i) {
        const bool si = (pat >> i) & 1;
        for (std::size_t j = 0; j < m; ++j) {
          const bool sj = (pat >> j) & 1;
          quad += (si == sj) ? small[i * m + j] : -small[i * m + j];
        }
      }
      total += pow(cpp_int(quad), s);
    }
  } else {
    for (std::size_t pat = 0; pat < patterns; ++pat) {
      cpp_int quad = 0;
      for (std::size_t i = 0; i < m; ++i) {
        const bool si = (pat >> i) & 1;
        for (std::size_t j = 0; j < m; ++j) {
          const bool sj = (pat >> j) & 1;
          if (si == sj) {
            quad += coeff[i * m + j];
          } else {
            quad -= coeff[i * m + j];
          }
        }
      }
      total += pow(quad, s);
    }
  }

  // E = total / 2^m * 2^(e_min s)
  const long long shift = static_cast<long long>(e_min) * s - static_cast<long long>(m);
  ExactRational exact = shift >= 0 ? ExactRational(total << shift)
                                   : ExactRational(total, cpp_int(1) << static_cast<unsigned>(-shift));
  return {exact, exact.convert_to<double>()};
}

ExactRational chaos_moment_bound(double K, std::size_t m, unsigned s) {
  require(std::isfinite(K) && K >= 0.0, "coefficient bound K must be >= 0");
  const ExactRational base = exact_from_double(K) * ExactRational(4 * static_cast<long long>(m) * s);
  ExactRational out(1);
  for (unsigned i = 0; i < s; ++i) out *= base;
  return out;
}

bool chaos_moment_within_bound(const ChaosMoment& moment, double K, std::size_t m, unsigned s) {
  return abs(moment.exact) <= chaos_moment_bound(K, m, s);
}

bool delta_sqr_check(double a, double mu, double delta) {
  require(std::isfinite(a) && a > 0.0, "a must be positive");
  require(std::isfinite(mu) && mu >= 0.0 && mu <= 1.0, "mu must lie in [0, 1]");
  require(std::isfinite(delta) && delta > 0.0 && delta <= 1.0, "delta must lie in (0, 1]");
  const double lhs = a * std::pow(a / (1.0 + a), 1.0 / (1.0 + mu));
  const double rhs = std::pow(delta, (2.0 + mu) / (1.0 + mu)) / 4.0;
  return lhs <= rhs;
}

}  // namespace listdec
