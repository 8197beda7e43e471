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

#include "listdec/error.hpp"
#include "listdec/jacobi.hpp"
#include "listdec/parallel.hpp"
#include "listdec/random.hpp"
#include "listdec/rational.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

using namespace listdec;

namespace {

// Plain FNV-1a over a byte buffer.
std::uint64_t fnv_bytes(const unsigned char* data, std::size_t len) {
  std::uint64_t h = 14695981039346656037ull;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= data[i];
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

TEST_SUITE("core") {
  TEST_CASE("rational normalization and parsing") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(3, -6).den() == 2);
    CHECK(Rational::parse("3/8") == Rational(3, 8));
    CHECK(Rational::parse("0.375") == Rational(3, 8));
    CHECK(Rational::parse("2") == Rational(2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(1, 3) * Rational(3, 4)) == Rational(1, 4));
    CHECK((Rational(1, 3) / Rational(2, 3)) == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(3, 8).to_string() == "3/8");
    CHECK_THROWS_AS(Rational(1, 0), InputError);
    CHECK_THROWS_AS(Rational::parse("x/2"), InputError);
    CHECK(Rational::floor_of(0.2499999, 1000) == Rational(249, 1000));
  }

  TEST_CASE("derive_seed is FNV-1a over little-endian words") {
    const std::uint64_t seed = 0x0123456789abcdefull, idx = 42;
    unsigned char buf[16];
    for (int i = 0; i < 8; ++i) {
      buf[i] = static_cast<unsigned char>(seed >> (8 * i));
      buf[8 + i] = static_cast<unsigned char>(idx >> (8 * i));
    }
    CHECK(derive_seed(seed, idx) == fnv_bytes(buf, 16));
    CHECK(fnv_bytes(reinterpret_cast<const unsigned char*>("a"), 1) == 0xaf63dc4c8601ec8cull);
    CHECK(derive_seed(1, 2) != derive_seed(2, 1));
  }

  TEST_CASE("rng streams are reproducible and uniform") {
    Rng a(7), b(7);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    Rng r(11);
    std::vector<int> counts(6, 0);
    const int draws = 60000;
    for (int i = 0; i < draws; ++i) ++counts[r.uniform_below(6)];
    double chi = 0.0;
    for (int c : counts) chi += (c - draws / 6.0) * (c - draws / 6.0) / (draws / 6.0);
    CHECK(chi < 20.5);  // chi-square, 5 dof, p ~ 0.001
    double mean = 0.0, var = 0.0;
    for (int i = 0; i < draws; ++i) {
      const double z = r.normal();
      mean += z;
      var += z * z;
    }
    mean /= draws;
    var = var / draws - mean * mean;
    CHECK(std::abs(mean) < 3.0 / std::sqrt(draws) * 1.5);
    CHECK(std::abs(var - 1.0) < 0.03);
  }

  TEST_CASE("parallel_for fills every slot once") {
    std::vector<int> out(1000, 0);
    parallel_for(out.size(), 4, [&](std::size_t i) { out[i] += static_cast<int>(i); });
    for (std::size_t i = 0; i < out.size(); ++i) REQUIRE(out[i] == static_cast<int>(i));
    CHECK_THROWS_AS(parallel_for(10, 3, [](std::size_t i) {
                      if (i == 5) throw InputError("boom");
                    }),
                    InputError);
  }

  TEST_CASE("jacobi matches closed-form eigenvalues") {
    Rng rng(3);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = 1 + trial % 3;
      std::vector<double> a(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) a[i * n + j] = a[j * n + i] = rng.uniform(-2, 2);
      const auto ref = oracle::small_eigenvalues(a, n);
      const auto eig = jacobi_eigen(a, n);
      for (std::size_t i = 0; i < n; ++i) REQUIRE(eig.values[i] == doctest::Approx(ref[i]).epsilon(1e-9));
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t r = 0; r < n; ++r) {
          double av = 0.0;
          for (std::size_t c = 0; c < n; ++c) av += a[r * n + c] * eig.vectors[c * n + j];
          REQUIRE(std::abs(av - eig.values[j] * eig.vectors[r * n + j]) < 1e-9);
        }
      }
      auto copy = a;
      const auto range = jacobi_eigen_range(copy, n);
      CHECK(range.min == doctest::Approx(ref.front()).epsilon(1e-9));
      CHECK(range.max == doctest::Approx(ref.back()).epsilon(1e-9));
    }
  }
}
