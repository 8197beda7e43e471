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

#include <cstddef>
#include <vector>

namespace listdec {

struct SymmetricEigen {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // column j (row-major n x n) is the eigenvector of values[j]
  int sweeps = 0;
};

/// Cyclic Jacobi rotations on a real symmetric n x n matrix (row-major), until the
/// off-diagonal Frobenius norm drops below `tolerance` or `max_sweeps` is reached.
SymmetricEigen jacobi_eigen(std::vector<double> a, std::size_t n, double tolerance = 1e-12,
                            int max_sweeps = 50);

/// Eigenvalue extremes only; skips eigenvector accumulation.
struct EigenRange {
  double min = 0.0;
  double max = 0.0;
};
EigenRange jacobi_eigen_range(std::vector<double>& a, std::size_t n, double tolerance = 1e-12,
                              int max_sweeps = 50);

}  // namespace listdec
