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

#include "listdec/codes.hpp"

#include "listdec/error.hpp"
#include "listdec/random.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <unordered_set>

namespace listdec {

std::uint64_t checked_power(std::uint64_t q, std::uint64_t exponent, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (v > cap / q) return cap + 1;
    v *= q;
  }
  return v;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

Word message_vector(unsigned q, std::size_t length, std::uint64_t index) {
  Word x(length);
  for (std::size_t i = length; i-- > 0;) {
    x[i] = static_cast<Symbol>(index % q);
    index /= q;
  }
  return x;
}

std::uint64_t message_index(unsigned q, std::span<const Symbol> x) {
  std::uint64_t index = 0;
  for (Symbol s : x) index = index * q + s;
  return index;
}

GeneratorMatrix::GeneratorMatrix(FieldPtr field, std::size_t ktilde, std::size_t n,
                                 std::vector<Symbol> entries)
    : field_(std::move(field)), ktilde_(ktilde), n_(n), entries_(std::move(entries)) {
  require(field_ != nullptr, "generator matrix without a field");
  require(ktilde >= 1 && n >= 1, "generator matrix dimensions must be positive");
  require(entries_.size() == ktilde * n, "generator matrix entry count mismatch");
  for (Symbol s : entries_) {
    require(s < field_->q(), "generator entry out of range for " + field_->name());
  }
}

Word GeneratorMatrix::column(std::size_t c) const {
  Word col(ktilde_);
  for (std::size_t r = 0; r < ktilde_; ++r) col[r] = at(r, c);
  return col;
}

std::vector<std::uint32_t> GeneratorMatrix::column_indices() const {
  std::vector<std::uint32_t> t(n_);
  for (std::size_t c = 0; c < n_; ++c) {
    t[c] = static_cast<std::uint32_t>(message_index(field_->q(), column(c)));
  }
  return t;
}

GeneratorMatrix random_generator(FieldPtr field, std::size_t ktilde, std::size_t n,
                                 std::uint64_t seed) {
  require(field != nullptr, "random_generator without a field");
  require(ktilde >= 1 && n >= 1, "generator matrix dimensions must be positive");
  require_budget(checked_power(field->q(), ktilde, kMessageBudget) <= kMessageBudget,
                 "q^ktilde exceeds the enumeration budget 2^24");
  Rng rng(seed);
  std::vector<Symbol> entries(ktilde * n);
  for (auto& e : entries) e = static_cast<Symbol>(rng.uniform_below(field->q()));
  return GeneratorMatrix(std::move(field), ktilde, n, std::move(entries));
}

GeneratorMatrix parse_generator(std::istream& in) {
  long long q = 0, ktilde = 0, n = 0;
  require(static_cast<bool>(in >> q >> ktilde >> n), "generator header must be 'q ktilde n'");
  require(q >= 2 && q <= 256 && ktilde >= 1 && n >= 1, "generator header out of range");
  FieldPtr field = field_of_order(static_cast<unsigned>(q));
  std::vector<Symbol> entries;
  entries.reserve(static_cast<std::size_t>(ktilde * n));
  for (long long i = 0; i < ktilde * n; ++i) {
    long long v;
    require(static_cast<bool>(in >> v), "generator matrix truncated");
    require(v >= 0 && v < q, "generator entry out of range");
    entries.push_back(static_cast<Symbol>(v));
  }
  return GeneratorMatrix(std::move(field), static_cast<std::size_t>(ktilde),
                         static_cast<std::size_t>(n), std::move(entries));
}

void write_generator(std::ostream& out, const GeneratorMatrix& g) {
  out << g.field()->q() << ' ' << g.ktilde() << ' ' << g.n() << '\n';
  for (std::size_t r = 0; r < g.ktilde(); ++r) {
    for (std::size_t c = 0; c < g.n(); ++c) {
      out << (c ? " " : "") << static_cast<unsigned>(g.at(r, c));
    }
    out << '\n';
  }
}

LinearCode::LinearCode(GeneratorMatrix gen) : gen_(std::move(gen)) {
  const Field& f = *gen_.field();
  const std::uint64_t count = checked_power(f.q(), gen_.ktilde(), kMessageBudget);
  require_budget(count <= kMessageBudget, "q^ktilde exceeds the enumeration budget 2^24");
  const std::size_t n = gen_.n();
  words_.assign(count * n, 0);
  // Walk the messages in index order with an odometer.
  const std::size_t k = gen_.ktilde();
  std::vector<Symbol> msg(k, 0);
  for (std::uint64_t i = 1; i < count; ++i) {
    std::size_t j = k;
    while (j-- > 0) {
      msg[j] = static_cast<Symbol>((msg[j] + 1) % f.q());
      if (msg[j] != 0) break;
    }
    Symbol* out = words_.data() + i * n;
    for (std::size_t c = 0; c < n; ++c) {
      Symbol acc = 0;
      for (std::size_t r = 0; r < k; ++r) acc = f.add(acc, f.mul(msg[r], gen_.at(r, c)));
      out[c] = acc;
    }
  }
}

bool LinearCode::has_duplicate_codewords() const {
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < size(); ++i) {
    auto w = codeword(i);
    if (!seen.emplace(reinterpret_cast<const char*>(w.data()), w.size()).second) return true;
  }
  return false;
}

LinearCode enumerate_codewords(const GeneratorMatrix& g) {
  return LinearCode(g);
}

std::size_t hamming_distance(std::span<const Symbol> x, std::span<const Symbol> y) {
  require(x.size() == y.size(), "distance between words of different lengths");
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
  return d;
}

Rational relative_distance(std::span<const Symbol> x, std::span<const Symbol> y) {
  require(!x.empty(), "distance between empty words");
  const std::size_t d = hamming_distance(x, y);
  return Rational(static_cast<std::int64_t>(d), static_cast<std::int64_t>(x.size()));
}

namespace {

Rational average_from_total(std::uint64_t total_disagreements, std::size_t L, std::size_t n) {
  const std::uint64_t pairs = static_cast<std::uint64_t>(L) * (L - 1) / 2;
  return Rational(static_cast<std::int64_t>(total_disagreements),
                  static_cast<std::int64_t>(pairs * n));
}

}  // namespace

Rational avg_pairwise_distance(std::span<const Word> words) {
  require(words.size() >= 2, "average pairwise distance needs at least two words");
  const std::size_t n = words[0].size();
  require(n >= 1, "average pairwise distance of empty words");
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) total += hamming_distance(words[i], words[j]);
  }
  return average_from_total(total, words.size(), n);
}

Rational avg_pairwise_distance(const LinearCode& code, std::span<const std::size_t> indices) {
  require(indices.size() >= 2, "average pairwise distance needs at least two words");
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    require(indices[i] < code.size(), "codeword index out of range");
    for (std::size_t j = i + 1; j < indices.size(); ++j) {
      total += hamming_distance(code.codeword(indices[i]), code.codeword(indices[j]));
    }
  }
  return average_from_total(total, indices.size(), code.length());
}

SubsetMinimum min_avg_distance_over_subsets(const LinearCode& code, std::size_t L) {
  const std::size_t N = code.size();
  require(L >= 2, "subset size L must be >= 2");
  require(L <= N, "subset size L exceeds the number of codewords");
  require_budget(binomial(N, L) <= kSubsetBudget,
                 "C(|C|, L) exceeds the exhaustive subset budget 10^7");

  // Pairwise disagreement table; N is bounded through the subset budget.
  std::vector<std::uint32_t> dist(N * N, 0);
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = i + 1; j < N; ++j) {
      const auto d = static_cast<std::uint32_t>(hamming_distance(code.codeword(i), code.codeword(j)));
      dist[i * N + j] = d;
      dist[j * N + i] = d;
    }
  }

  // Lexicographic enumeration with running partial sums; strict improvement keeps
  // the first (least) minimizing tuple.
  std::vector<std::size_t> idx(L);
  std::vector<std::uint64_t> partial(L + 1, 0);
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::size_t> witness;
  std::size_t depth = 0;
  idx[0] = 0;
  while (true) {
    if (idx[depth] > N - (L - depth)) {
      if (depth == 0) break;
      --depth;
      ++idx[depth];
      continue;
    }
    std::uint64_t add = 0;
    for (std::size_t a = 0; a < depth; ++a) add += dist[idx[a] * N + idx[depth]];
    partial[depth + 1] = partial[depth] + add;
    if (depth + 1 == L) {
      if (partial[L] < best) {
        best = partial[L];
        witness.assign(idx.begin(), idx.end());
      }
      ++idx[depth];
    } else {
      idx[depth + 1] = idx[depth] + 1;
      ++depth;
    }
  }
  return {average_from_total(best, L, code.length()), witness};
}

Rational min_distance(const LinearCode& code) {
  const std::size_t N = code.size();
  require(N >= 2, "minimum distance needs at least two codewords");
  std::size_t best = code.length();
  for (std::size_t i = 0; i < N && best > 0; ++i) {
    for (std::size_t j = i + 1; j < N; ++j) {
      best = std::min(best, hamming_distance(code.codeword(i), code.codeword(j)));
      if (best == 0) break;
    }
  }
  return Rational(static_cast<std::int64_t>(best), static_cast<std::int64_t>(code.length()));
}

}  // namespace listdec
