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
#include "oracles.hpp"

#include <doctest.h>

#include <sstream>

using namespace listdec;

namespace {

LinearCode code_of(unsigned q, std::size_t kt, std::size_t n, std::vector<Symbol> entries) {
  return LinearCode(GeneratorMatrix(field_of_order(q), kt, n, std::move(entries)));
}

std::vector<Word> words_of(const LinearCode& c) {
  std::vector<Word> out;
  for (std::size_t i = 0; i < c.size(); ++i) out.emplace_back(c.codeword(i).begin(), c.codeword(i).end());
  return out;
}

// Minimum over L-subsets by recursion, with the lexicographically least tuple.
void subsets(const LinearCode& c, std::size_t L, std::size_t start, std::vector<std::size_t>& cur, Rational& best,
             std::vector<std::size_t>& witness, bool& any) {
  if (cur.size() == L) {
    std::size_t sum = 0;
    for (std::size_t i = 0; i < L; ++i)
      for (std::size_t j = i + 1; j < L; ++j) sum += hamming_distance(c.codeword(cur[i]), c.codeword(cur[j]));
    const Rational v(static_cast<std::int64_t>(sum),
                     static_cast<std::int64_t>(c.length() * L * (L - 1) / 2));
    if (!any || v < best) {
      best = v;
      witness = cur;
      any = true;
    }
    return;
  }
  for (std::size_t i = start; i < c.size(); ++i) {
    cur.push_back(i);
    subsets(c, L, i + 1, cur, best, witness, any);
    cur.pop_back();
  }
}

}  // namespace

TEST_SUITE("codes") {
  TEST_CASE("random_generator is deterministic and in range") {
    auto f3 = field_of_order(3);
    const auto a = random_generator(f3, 2, 4, 99), b = random_generator(f3, 2, 4, 99);
    CHECK(a.entries() == b.entries());
    for (auto e : a.entries()) CHECK(e < 3);
    CHECK(random_generator(field_of_order(2), 1, 2, 5).entries() == random_generator(field_of_order(2), 1, 2, 5).entries());
    CHECK_THROWS_AS(random_generator(field_of_order(2), 25, 4, 1), BudgetError);
    CHECK_THROWS_AS(random_generator(f3, 0, 4, 1), InputError);
  }

  TEST_CASE("generator entries are uniform") {
    auto f5 = field_of_order(5);
    std::vector<int> counts(5, 0);
    for (std::uint64_t s = 0; s < 10000; ++s) ++counts[random_generator(f5, 1, 1, s).at(0, 0)];
    double chi = 0.0;
    for (int c : counts) chi += (c - 2000.0) * (c - 2000.0) / 2000.0;
    CHECK(chi < 18.5);  // 4 dof, p ~ 0.001
  }

  TEST_CASE("enumerate_codewords examples") {
    auto c = enumerate_codewords(GeneratorMatrix(field_of_order(2), 1, 2, {1, 1}));
    CHECK(words_of(c) == std::vector<Word>{{0, 0}, {1, 1}});
    auto id = code_of(2, 2, 2, {1, 0, 0, 1});
    CHECK(words_of(id) == std::vector<Word>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    auto t = code_of(3, 1, 2, {1, 2});
    CHECK(words_of(t) == std::vector<Word>{{0, 0}, {1, 2}, {2, 1}});
  }

  TEST_CASE("codewords match direct x G and are linear") {
    for (std::uint64_t s = 0; s < 40; ++s) {
      const unsigned q = std::vector<unsigned>{2, 3, 4, 5, 8, 9}[s % 6];
      auto f = field_of_order(q);
      const auto g = random_generator(f, 1 + s % 3, 2 + s % 5, s);
      const LinearCode code(g);
      std::vector<std::vector<unsigned>> rows(g.ktilde(), std::vector<unsigned>(g.n()));
      for (std::size_t r = 0; r < g.ktilde(); ++r)
        for (std::size_t c = 0; c < g.n(); ++c) rows[r][c] = g.at(r, c);
      REQUIRE(code.size() == checked_power(q, g.ktilde(), kMessageBudget));
      for (std::uint64_t i = 0; i < code.size(); ++i) {
        const Word msg = message_vector(q, g.ktilde(), i);
        CHECK(message_index(q, msg) == i);
        const auto expect = oracle::encode(std::vector<unsigned>(msg.begin(), msg.end()), rows, f->p(), f->m(), f->modulus());
        for (std::size_t c = 0; c < g.n(); ++c) REQUIRE(code.codeword(i)[c] == expect[c]);
      }
      for (std::uint64_t i = 0; i < code.size(); ++i) {
        for (std::uint64_t j = 0; j < code.size(); ++j) {
          Word a = message_vector(q, g.ktilde(), i), b = message_vector(q, g.ktilde(), j), sum(a.size());
          for (std::size_t t = 0; t < a.size(); ++t) sum[t] = f->add(a[t], b[t]);
          const auto k = message_index(q, sum);
          for (std::size_t c = 0; c < g.n(); ++c)
            REQUIRE(f->add(code.codeword(i)[c], code.codeword(j)[c]) == code.codeword(k)[c]);
        }
      }
    }
  }

  TEST_CASE("message indexing is big-endian") {
    CHECK(message_vector(3, 2, 5) == Word{1, 2});
    CHECK(message_index(2, Word{1, 0, 1}) == 5);
  }

  TEST_CASE("relative and average distances") {
    CHECK(relative_distance(Word{0, 0, 0}, Word{1, 1, 1}) == Rational(1));
    CHECK(relative_distance(Word{0, 1}, Word{0, 1}) == Rational(0));
    CHECK(relative_distance(Word{0, 0, 1}, Word{0, 1, 1}) == Rational(1, 3));
    CHECK_THROWS_AS(relative_distance(Word{0}, Word{0, 1}), InputError);
    CHECK(avg_pairwise_distance(std::vector<Word>{{0}, {1}}) == Rational(1));
    CHECK(avg_pairwise_distance(std::vector<Word>{{0, 0, 0}, {1, 1, 0}, {0, 1, 1}}) == Rational(2, 3));
    CHECK(avg_pairwise_distance(std::vector<Word>{{0, 0, 0}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}}) == Rational(2, 3));
    CHECK(avg_pairwise_distance(std::vector<Word>{{0, 0, 0}, {1, 1, 1}}) == Rational(1));
    CHECK_THROWS_AS(avg_pairwise_distance(std::vector<Word>{{0}}), InputError);
  }

  TEST_CASE("min_avg_distance_over_subsets examples") {
    auto rep = code_of(2, 1, 2, {1, 1});
    auto r = min_avg_distance_over_subsets(rep, 2);
    CHECK(r.value == Rational(1));
    CHECK(r.witness == std::vector<std::size_t>{0, 1});
    auto id = code_of(2, 2, 2, {1, 0, 0, 1});
    r = min_avg_distance_over_subsets(id, 2);
    CHECK(r.value == Rational(1, 2));
    CHECK(r.witness == std::vector<std::size_t>{0, 1});
    auto dup = code_of(2, 2, 2, {1, 1, 0, 0});
    CHECK(min_avg_distance_over_subsets(dup, 2).value == Rational(0));
    CHECK(dup.has_duplicate_codewords());
    CHECK_FALSE(id.has_duplicate_codewords());
    CHECK_THROWS_AS(min_avg_distance_over_subsets(id, 1), InputError);
  }

  TEST_CASE("min_distance examples") {
    CHECK(min_distance(code_of(2, 1, 3, {1, 1, 1})) == Rational(1));
    CHECK(min_distance(code_of(2, 2, 2, {1, 0, 0, 1})) == Rational(1, 2));
    CHECK(min_distance(code_of(2, 2, 2, {1, 1, 1, 1})) == Rational(0));
  }

  TEST_CASE("subset minimum matches recursive enumeration") {
    for (std::uint64_t s = 0; s < 60; ++s) {
      const unsigned q = s % 2 ? 3 : 2;
      const LinearCode code(random_generator(field_of_order(q), 1 + s % 3, 2 + s % 6, derive_seed(17, s)));
      for (std::size_t L = 2; L <= 4 && L <= code.size(); ++L) {
        std::vector<std::size_t> cur, witness;
        Rational best;
        bool any = false;
        subsets(code, L, 0, cur, best, witness, any);
        const auto got = min_avg_distance_over_subsets(code, L);
        REQUIRE(got.value == best);
        REQUIRE(got.witness == witness);
        CHECK(avg_pairwise_distance(code, got.witness) == got.value);
      }
      CHECK(min_avg_distance_over_subsets(code, 2).value == min_distance(code));
    }
  }

  TEST_CASE("random subsets never beat the subset minimum") {
    Rng rng(5);
    for (int t = 0; t < 200; ++t) {
      const LinearCode code(random_generator(field_of_order(3), 2, 5, rng.next()));
      const std::size_t L = 2 + rng.uniform_below(3);
      const auto best = min_avg_distance_over_subsets(code, L).value;
      std::vector<std::size_t> idx(code.size());
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
      for (std::size_t i = 0; i < L; ++i) std::swap(idx[i], idx[i + rng.uniform_below(idx.size() - i)]);
      idx.resize(L);
      CHECK(avg_pairwise_distance(code, idx) >= best);
    }
  }

  TEST_CASE("few close neighbours force a large average distance") {
    // If every codeword has fewer than A codewords (itself included) below eta,
    // then every L-subset averages at least eta (L - A) / (L - 1).
    for (std::uint64_t s = 0; s < 80; ++s) {
      const LinearCode code(random_generator(field_of_order(2), 3, 6 + s % 4, derive_seed(23, s)));
      const std::size_t n = code.length();
      for (std::size_t eta_num = 1; eta_num <= n; ++eta_num) {
        const Rational eta(static_cast<std::int64_t>(eta_num), static_cast<std::int64_t>(n));
        std::size_t A = 0;
        for (std::size_t i = 0; i < code.size(); ++i) {
          std::size_t close = 0;
          for (std::size_t j = 0; j < code.size(); ++j)
            close += relative_distance(code.codeword(i), code.codeword(j)) < eta;
          A = std::max(A, close);
        }
        for (std::size_t L = 2; L <= 4; ++L) {
          if (A >= L) continue;
          const auto got = min_avg_distance_over_subsets(code, L).value;
          CHECK(got >= eta * Rational(static_cast<std::int64_t>(L - A), static_cast<std::int64_t>(L - 1)));
        }
      }
    }
  }

  TEST_CASE("generator text format round-trips") {
    const auto g = random_generator(field_of_order(4), 2, 5, 3);
    std::stringstream ss;
    write_generator(ss, g);
    const auto back = parse_generator(ss);
    CHECK(back.entries() == g.entries());
    CHECK(back.field()->q() == 4);
    std::stringstream bad("2 1 2\n1 5\n");
    CHECK_THROWS_AS(parse_generator(bad), InputError);
  }

  TEST_CASE("subset budget is enforced") {
    const LinearCode big(random_generator(field_of_order(2), 10, 4, 1));
    CHECK_THROWS_AS(min_avg_distance_over_subsets(big, 4), BudgetError);
  }
}
