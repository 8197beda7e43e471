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

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace listdec {

using Complex = std::complex<double>;

constexpr std::uint64_t kMatrixEntryBudget = std::uint64_t{1} << 26;

/// Dense complex matrix, stored column-major (columns are the encoded codewords).
///
/// `group_size` records that consecutive runs of that many rows belong to one
/// coordinate of the underlying q-ary word (group_size = q - 1 for simplex
/// encodings); 0 means the rows carry no grouping.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols, std::size_t group_size = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t group_size() const { return group_size_; }
  std::size_t groups() const { return group_size_ ? rows_ / group_size_ : 0; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[c * rows_ + r]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[c * rows_ + r]; }

  std::span<const Complex> column(std::size_t c) const { return {data_.data() + c * rows_, rows_}; }
  std::span<Complex> column(std::size_t c) { return {data_.data() + c * rows_, rows_}; }

  double max_abs_diff(const ComplexMatrix& other) const;
  bool all_finite() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t group_size_ = 0;
  std::vector<Complex> data_;
};

/// Row-major matrix of field labels.
struct LabelMatrix {
  unsigned q = 2;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Symbol> entries;

  Symbol at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

/// Powers omega^j of omega = exp(2 pi i / q), each taken from the closed form.
class RootsOfUnity {
 public:
  explicit RootsOfUnity(unsigned q);
  unsigned q() const { return q_; }
  // omega^(x * alpha) with the exponent reduced mod q as an integer.
  const Complex& power(std::uint64_t exponent) const { return table_[exponent % q_]; }

 private:
  unsigned q_;
  std::vector<Complex> table_;
};

/// Simplex encoding of a symbol: component alpha in {1..q-1} is omega^(x alpha).
std::vector<Complex> phi_symbol(unsigned x, unsigned q);

/// <phi(x), phi(y)>, which is q-1 when x = y and -1 otherwise; snapped to that integer.
double simplex_inner(unsigned x, unsigned y, unsigned q);

/// sum_i a_i conj(b_i).
Complex inner(std::span<const Complex> a, std::span<const Complex> b);
double squared_norm(std::span<const Complex> a);

/// Coordinate-wise encoding of a word into C^{n(q-1)}.
std::vector<Complex> phi_vector(std::span<const Symbol> v, unsigned q);

/// Entry-wise encoding: an r x c label matrix becomes r(q-1) x c, grouped by q-1.
ComplexMatrix phi_matrix(const LabelMatrix& m);

/// (q-1)n x |C| matrix whose column i is phi(codeword i).
ComplexMatrix phi_code(const LinearCode& code);

/// Average pairwise distance through ||sum phi(c_i)||^2:
/// (L^2 (q-1) n - ||sum phi(c_i)||^2) / (q L (L-1) n).
double avg_dist_via_norm(std::span<const Word> words, unsigned q);

/// Interchange format: header "rows cols", then rows*cols row-major "re im" pairs.
ComplexMatrix read_complex_matrix(std::istream& in);
void write_complex_matrix(std::ostream& out, const ComplexMatrix& m);

}  // namespace listdec
