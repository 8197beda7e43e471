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
#include "listdec/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace listdec {

using Word = std::vector<Symbol>;

constexpr std::uint64_t kMessageBudget = std::uint64_t{1} << 24;
constexpr std::uint64_t kSubsetBudget = 10'000'000;

/// q^exponent, or a value above `cap` when it would exceed it.
std::uint64_t checked_power(std::uint64_t q, std::uint64_t exponent, std::uint64_t cap);

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Message vectors x in GF(q)^k are indexed by reading x as a base-q numeral with
/// x_0 as the most significant digit.
Word message_vector(unsigned q, std::size_t length, std::uint64_t index);
std::uint64_t message_index(unsigned q, std::span<const Symbol> x);

/// A ktilde x n generator matrix over GF(q), stored row-major.
class GeneratorMatrix {
 public:
  GeneratorMatrix(FieldPtr field, std::size_t ktilde, std::size_t n, std::vector<Symbol> entries);

  const FieldPtr& field() const { return field_; }
  std::size_t ktilde() const { return ktilde_; }
  std::size_t n() const { return n_; }
  Symbol at(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }
  std::span<const Symbol> row(std::size_t r) const { return {entries_.data() + r * n_, n_}; }
  Word column(std::size_t c) const;
  const std::vector<Symbol>& entries() const { return entries_; }

  // Columns read as message indices in GF(q)^ktilde; this is the row multiset T of Lin.
  std::vector<std::uint32_t> column_indices() const;

 private:
  FieldPtr field_;
  std::size_t ktilde_;
  std::size_t n_;
  std::vector<Symbol> entries_;
};

/// Entries i.i.d. uniform over GF(q) drawn from a stream seeded with `seed`.
GeneratorMatrix random_generator(FieldPtr field, std::size_t ktilde, std::size_t n,
                                 std::uint64_t seed);

/// Text form: "q ktilde n" followed by ktilde rows of n labels.
GeneratorMatrix parse_generator(std::istream& in);
void write_generator(std::ostream& out, const GeneratorMatrix& g);

/// All q^ktilde codewords x G, listed by message index. Rank-deficient generators
/// produce repeated codewords; they are kept so that codeword i always belongs to
/// message i.
class LinearCode {
 public:
  explicit LinearCode(GeneratorMatrix gen);

  const GeneratorMatrix& generator() const { return gen_; }
  unsigned q() const { return gen_.field()->q(); }
  std::size_t length() const { return gen_.n(); }
  std::size_t size() const { return words_.size() / gen_.n(); }
  std::span<const Symbol> codeword(std::size_t i) const {
    return {words_.data() + i * gen_.n(), gen_.n()};
  }
  // Flat size() x length() table of all codewords.
  std::span<const Symbol> words() const { return words_; }

  bool has_duplicate_codewords() const;

 private:
  GeneratorMatrix gen_;
  std::vector<Symbol> words_;
};

LinearCode enumerate_codewords(const GeneratorMatrix& g);

std::size_t hamming_distance(std::span<const Symbol> x, std::span<const Symbol> y);
Rational relative_distance(std::span<const Symbol> x, std::span<const Symbol> y);

/// Sum_{i<j} delta(w_i, w_j) / C(L, 2) for L >= 2 words of equal length.
Rational avg_pairwise_distance(std::span<const Word> words);
Rational avg_pairwise_distance(const LinearCode& code, std::span<const std::size_t> indices);

struct SubsetMinimum {
  Rational value;
  std::vector<std::size_t> witness;  // message indices, increasing
};

/// Minimum of the average pairwise distance over all L-subsets of codeword indices.
/// Ties go to the lexicographically least index tuple. Throws BudgetError when
/// C(|C|, L) exceeds kSubsetBudget.
SubsetMinimum min_avg_distance_over_subsets(const LinearCode& code, std::size_t L);

/// Minimum relative distance over distinct index pairs (0 if any codeword repeats).
Rational min_distance(const LinearCode& code);

}  // namespace listdec
