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

#include "listdec/simplex.hpp"

#include "listdec/error.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <numbers>
#include <ostream>

namespace listdec {
namespace {

constexpr double kSnapTolerance = 1e-9;

void check_entry_budget(std::size_t rows, std::size_t cols) {
  require_budget(rows == 0 || cols <= kMatrixEntryBudget / rows,
                 "complex matrix exceeds the 2^26 entry budget");
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::size_t group_size)
    : rows_(rows), cols_(cols), group_size_(group_size) {
  check_entry_budget(rows, cols);
  require(group_size == 0 || rows % group_size == 0, "row count not a multiple of the group size");
  data_.assign(rows * cols, Complex(0.0, 0.0));
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  require(rows_ == other.rows_ && cols_ == other.cols_, "matrix shapes differ");
  double worst = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
  return worst;
}

bool ComplexMatrix::all_finite() const {
  for (const auto& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

RootsOfUnity::RootsOfUnity(unsigned q) : q_(q) {
  require(q >= 2, "alphabet size must be >= 2");
  table_.resize(q);
  for (unsigned j = 0; j < q; ++j) {
    const double angle = 2.0 * std::numbers::pi * j / q;
    table_[j] = Complex(std::cos(angle), std::sin(angle));
  }
  // Exact values where the closed form is exact.
  table_[0] = Complex(1.0, 0.0);
  if (q % 2 == 0) table_[q / 2] = Complex(-1.0, 0.0);
  if (q % 4 == 0) {
    table_[q / 4] = Complex(0.0, 1.0);
    table_[3 * q / 4] = Complex(0.0, -1.0);
  }
}

std::vector<Complex> phi_symbol(unsigned x, unsigned q) {
  require(q >= 2, "alphabet size must be >= 2");
  require(x < q, "symbol out of range");
  const RootsOfUnity omega(q);
  std::vector<Complex> v(q - 1);
  for (unsigned alpha = 1; alpha < q; ++alpha) v[alpha - 1] = omega.power(std::uint64_t{x} * alpha);
  return v;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  require(a.size() == b.size(), "inner product of vectors with different lengths");
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * std::conj(b[i]);
  return acc;
}

double squared_norm(std::span<const Complex> a) {
  double acc = 0.0;
  for (const auto& z : a) acc += std::norm(z);
  return acc;
}

double simplex_inner(unsigned x, unsigned y, unsigned q) {
  const auto px = phi_symbol(x, q);
  const auto py = phi_symbol(y, q);
  const Complex ip = inner(px, py);
  const double nearest = std::round(ip.real());
  if (std::abs(ip.real() - nearest) <= kSnapTolerance && std::abs(ip.imag()) <= kSnapTolerance) {
    return nearest;
  }
  return ip.real();
}

std::vector<Complex> phi_vector(std::span<const Symbol> v, unsigned q) {
  const RootsOfUnity omega(q);
  std::vector<Complex> out(v.size() * (q - 1));
  for (std::size_t i = 0; i < v.size(); ++i) {
    require(v[i] < q, "symbol out of range");
    for (unsigned alpha = 1; alpha < q; ++alpha) {
      out[i * (q - 1) + alpha - 1] = omega.power(std::uint64_t{v[i]} * alpha);
    }
  }
  return out;
}

ComplexMatrix phi_matrix(const LabelMatrix& m) {
  require(m.entries.size() == m.rows * m.cols, "label matrix entry count mismatch");
  const unsigned q = m.q;
  const RootsOfUnity omega(q);
  check_entry_budget(m.rows * (q - 1), m.cols);
  ComplexMatrix out(m.rows * (q - 1), m.cols, q - 1);
  for (std::size_t c = 0; c < m.cols; ++c) {
    for (std::size_t r = 0; r < m.rows; ++r) {
      const Symbol x = m.at(r, c);
      require(x < q, "symbol out of range");
      for (unsigned alpha = 1; alpha < q; ++alpha) {
        out(r * (q - 1) + alpha - 1, c) = omega.power(std::uint64_t{x} * alpha);
      }
    }
  }
  return out;
}

ComplexMatrix phi_code(const LinearCode& code) {
  LabelMatrix m{code.q(), code.length(), code.size(), {}};
  m.entries.resize(m.rows * m.cols);
  for (std::size_t c = 0; c < code.size(); ++c) {
    auto w = code.codeword(c);
    for (std::size_t r = 0; r < code.length(); ++r) m.entries[r * m.cols + c] = w[r];
  }
  return phi_matrix(m);
}

double avg_dist_via_norm(std::span<const Word> words, unsigned q) {
  require(words.size() >= 2, "average distance needs at least two words");
  const std::size_t n = words[0].size();
  require(n >= 1, "average distance of empty words");
  std::vector<Complex> sum(n * (q - 1), Complex(0.0, 0.0));
  for (const auto& w : words) {
    require(w.size() == n, "words of different lengths");
    const auto enc = phi_vector(w, q);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += enc[i];
  }
  const double L = static_cast<double>(words.size());
  const double dn = static_cast<double>(n);
  return (L * L * (q - 1) * dn - squared_norm(sum)) / (q * L * (L - 1) * dn);
}

ComplexMatrix read_complex_matrix(std::istream& in) {
  long long rows = 0, cols = 0;
  require(static_cast<bool>(in >> rows >> cols), "matrix header must be 'rows cols'");
  require(rows >= 1 && cols >= 1, "matrix dimensions must be positive");
  ComplexMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (long long r = 0; r < rows; ++r) {
    for (long long c = 0; c < cols; ++c) {
      double re, im;
      require(static_cast<bool>(in >> re >> im), "matrix data truncated");
      m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = Complex(re, im);
    }
  }
  require(m.all_finite(), "matrix contains non-finite entries");
  return m;
}

void write_complex_matrix(std::ostream& out, const ComplexMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n' << std::setprecision(17);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out << (c ? " " : "") << m(r, c).real() << ' ' << m(r, c).imag();
    }
    out << '\n';
  }
}

}  // namespace listdec
