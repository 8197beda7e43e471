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

#include "listdec/jacobi.hpp"

#include "listdec/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace listdec {
namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a[i * n + j] * a[i * n + j];
  }
  return std::sqrt(s);
}

template <bool WithVectors>
int rotate_until_diagonal(std::vector<double>& a, std::vector<double>& v, std::size_t n,
                          double tolerance, int max_sweeps) {
  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    if (off_diagonal_norm(a, n) < tolerance) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t r = p + 1; r < n; ++r) {
        const double apr = a[p * n + r];
        if (apr == 0.0) continue;
        const double app = a[p * n + p];
        const double arr = a[r * n + r];
        const double theta = (arr - app) / (2.0 * apr);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akr = a[k * n + r];
          a[k * n + p] = c * akp - s * akr;
          a[k * n + r] = s * akp + c * akr;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double ark = a[r * n + k];
          a[p * n + k] = c * apk - s * ark;
          a[r * n + k] = s * apk + c * ark;
        }
        a[p * n + r] = 0.0;
        a[r * n + p] = 0.0;
        if constexpr (WithVectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const double vkp = v[k * n + p];
            const double vkr = v[k * n + r];
            v[k * n + p] = c * vkp - s * vkr;
            v[k * n + r] = s * vkp + c * vkr;
          }
        }
      }
    }
  }
  return sweep;
}

}  // namespace

SymmetricEigen jacobi_eigen(std::vector<double> a, std::size_t n, double tolerance, int max_sweeps) {
  require(a.size() == n * n, "Jacobi input is not n x n");
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  SymmetricEigen out;
  out.sweeps = rotate_until_diagonal<true>(a, v, n, tolerance, max_sweeps);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a[x * n + x] < a[y * n + y]; });
  out.values.resize(n);
  out.vectors.resize(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = a[order[j] * n + order[j]];
    for (std::size_t k = 0; k < n; ++k) out.vectors[k * n + j] = v[k * n + order[j]];
  }
  return out;
}

EigenRange jacobi_eigen_range(std::vector<double>& a, std::size_t n, double tolerance, int max_sweeps) {
  std::vector<double> unused;
  rotate_until_diagonal<false>(a, unused, n, tolerance, max_sweeps);
  EigenRange r{a[0], a[0]};
  for (std::size_t i = 1; i < n; ++i) {
    r.min = std::min(r.min, a[i * n + i]);
    r.max = std::max(r.max, a[i * n + i]);
  }
  return r;
}

}  // namespace listdec
