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
#include "listdec/random.hpp"
#include "listdec/rip.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace listdec;

namespace {

// Direct evaluation over the dense matrix-vector product.
double xprime_direct(const ComplexMatrix& m, unsigned s, const std::vector<double>& v) {
  std::vector<Complex> y(m.rows(), 0.0);
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) y[r] += m(r, c) * v[c];
  double total = 0.0;
  for (std::size_t t = 0; t < m.groups(); ++t) {
    double g = 0.0;
    for (std::size_t a = 0; a < m.group_size(); ++a) g += std::norm(y[t * m.group_size() + a]);
    total += std::pow(g, s);
  }
  return std::pow(total, 1.0 / (2 * s));
}

ComplexMatrix random_lin(unsigned q, std::size_t kt, std::size_t rows, std::uint64_t seed) {
  const auto f = field_of_order(q);
  return phi_lin_sub(f, kt, sample_T(f, kt, rows, seed).rows);
}

}  // namespace

TEST_SUITE("chaining") {
  TEST_CASE("sparse unit vectors are validated") {
    CHECK_NOTHROW(SparseUnitVector(4, 2, {0, 3}, {0.6, -0.8}));
    CHECK_THROWS_AS(SparseUnitVector(4, 2, {0, 3}, {0.6, 0.6}), InputError);
    CHECK_THROWS_AS(SparseUnitVector(4, 1, {0, 3}, {0.6, -0.8}), InputError);
    CHECK_THROWS_AS(SparseUnitVector(4, 2, {0, 4}, {0.6, -0.8}), InputError);
    CHECK_THROWS_AS(SparseUnitVector(4, 2, {1, 1}, {0.6, -0.8}), InputError);
    const auto x = random_sparse_unit(100, 7, 3);
    double n2 = 0.0;
    for (double v : x.values()) n2 += v * v;
    CHECK(std::abs(n2 - 1.0) < 1e-12);
    CHECK(x.support().size() == 7);
  }

  TEST_CASE("xprime_norm examples") {
    const auto h = phi_matrix(lin_matrix(field_of_order(2), 2));
    CHECK(xprime_norm(h, 2, std::vector<double>(4, 0.0)) == 0.0);
    const std::vector<double> v{1, -1, 0, 0};
    CHECK(xprime_norm(h, 2, v) == doctest::Approx(std::pow(32.0, 0.25)).epsilon(1e-14));
    CHECK(xprime_norm(h, 2, v) == doctest::Approx(xprime_direct(h, 2, v)).epsilon(1e-14));
    Rng rng(4);
    for (int t = 0; t < 50; ++t) {
      const auto m = random_lin(3, 2, 5, rng.next());
      std::vector<double> w(m.cols());
      for (auto& e : w) e = rng.normal();
      std::vector<Complex> y(m.rows(), 0.0);
      for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r) y[r] += m(r, c) * w[c];
      CHECK(xprime_norm(m, 1, w) == doctest::Approx(std::sqrt(squared_norm(y))).epsilon(1e-12));
      for (unsigned s = 1; s <= 4; ++s) CHECK(xprime_norm(m, s, w) == doctest::Approx(xprime_direct(m, s, w)).epsilon(1e-12));
    }
    ComplexMatrix plain(2, 2);
    CHECK_THROWS_AS(xprime_norm(plain, 1, std::vector<double>{1, 0}), InputError);
    CHECK_THROWS_AS(xprime_norm(h, 0, v), InputError);
    CHECK_THROWS_AS(xprime_norm(h, 1, std::vector<double>{1, 0}), InputError);
  }

  TEST_CASE("xprime_norm is a seminorm") {
    Rng rng(9);
    for (int t = 0; t < 1000; ++t) {
      const unsigned q = 2 + static_cast<unsigned>(rng.uniform_below(2));
      const auto m = random_lin(q, 2, 1 + rng.uniform_below(6), rng.next());
      const unsigned s = 1 + static_cast<unsigned>(rng.uniform_below(3));
      std::vector<double> u(m.cols()), v(m.cols()), sum(m.cols()), scaled(m.cols());
      const double c = rng.uniform(-3, 3);
      for (std::size_t i = 0; i < m.cols(); ++i) {
        u[i] = rng.normal();
        v[i] = rng.normal();
        sum[i] = u[i] + v[i];
        scaled[i] = c * u[i];
      }
      REQUIRE(xprime_norm(m, s, sum) <= xprime_norm(m, s, u) + xprime_norm(m, s, v) + 1e-9);
      REQUIRE(std::abs(xprime_norm(m, s, scaled) - std::abs(c) * xprime_norm(m, s, u)) < 1e-9);
    }
  }

  TEST_CASE("X' diameter of sparse unit vectors") {
    Rng rng(12);
    for (int t = 0; t < 300; ++t) {
      const unsigned q = 2 + static_cast<unsigned>(rng.uniform_below(3));
      const std::size_t kt = 2, rows = 1 + rng.uniform_below(10);
      const auto m = random_lin(q, kt, rows, rng.next());
      const std::size_t N = m.cols();
      const std::size_t k = 1 + rng.uniform_below(N);
      const unsigned s = 1 + static_cast<unsigned>(rng.uniform_below(3));
      const auto u = random_sparse_unit(N, k, rng.next()).dense();
      const auto v = random_sparse_unit(N, k, rng.next()).dense();
      std::vector<double> d(N);
      for (std::size_t i = 0; i < N; ++i) d[i] = u[i] - v[i];
      const double bound = 2 * std::pow(static_cast<double>(rows), 1.0 / (2 * s)) * std::sqrt(double(q) * k);
      REQUIRE(xprime_norm(m, s, d) <= bound + 1e-9);
    }
  }

  TEST_CASE("maurey_sample examples") {
    const SparseUnitVector e(10, 1, {4}, {1.0});
    for (std::size_t m : {1u, 5u, 64u}) {
      const auto z = maurey_sample(e, m, 3);
      for (std::size_t i = 0; i < 10; ++i) CHECK(z[i] == (i == 4 ? 1.0 : 0.0));
    }
    const SparseUnitVector neg(10, 1, {2}, {-1.0});
    CHECK(maurey_sample(neg, 7, 1)[2] == doctest::Approx(-1.0).epsilon(1e-15));
    const auto x = random_sparse_unit(50, 6, 8);
    for (std::size_t m : {1u, 3u, 10u}) {
      const auto z = maurey_sample(x, m, m);
      std::size_t nz = 0;
      for (double v : z) nz += v != 0.0;
      CHECK(nz <= m);
    }
    CHECK(maurey_sample(x, 20, 5) == maurey_sample(x, 20, 5));
    CHECK_THROWS_AS(maurey_sample(x, 0, 5), InputError);
  }

  TEST_CASE("maurey sampler is unbiased") {
    const auto x = random_sparse_unit(20, 5, 21);
    const auto xd = x.dense();
    const std::size_t draws = 10000, m = 4;
    std::vector<double> mean(20, 0.0), sq(20, 0.0);
    for (std::size_t r = 0; r < draws; ++r) {
      const auto z = maurey_sample(x, m, derive_seed(99, r));
      for (std::size_t i = 0; i < 20; ++i) {
        mean[i] += z[i];
        sq[i] += z[i] * z[i];
      }
    }
    for (std::size_t i = 0; i < 20; ++i) {
      mean[i] /= draws;
      const double var = sq[i] / draws - mean[i] * mean[i];
      const double sigma = std::sqrt(var / draws);
      if (xd[i] == 0.0) {
        CHECK(mean[i] == 0.0);
      } else {
        CHECK(std::abs(mean[i] - xd[i]) <= 3 * sigma);
      }
    }
  }

  TEST_CASE("covering curve shape") {
    const auto m = random_lin(2, 6, 16, 4);
    const SparseUnitVector e(64, 1, {9}, {1.0});
    const std::vector<std::size_t> ms{2, 8, 32};
    const auto zero = covering_error_curve(e, m, 2, ms, 20, 1);
    for (const auto& p : zero.points) CHECK(p.mean_error == 0.0);

    const auto x = random_sparse_unit(64, 4, 5);
    const std::vector<std::size_t> grid{4, 8, 16, 32, 64, 128, 256};
    const auto curve = covering_error_curve(x, m, 2, grid, 150, 7, 2);
    REQUIRE(curve.points.size() == grid.size());
    for (std::size_t i = 1; i < grid.size(); ++i) {
      const auto& a = curve.points[i - 1];
      const auto& b = curve.points[i];
      CHECK(b.mean_error <= a.mean_error + 3 * std::hypot(a.std_error, b.std_error));
    }
    CHECK(curve.slope == doctest::Approx(-0.5).epsilon(0.3));
    CHECK(curve.points.back().envelope == doctest::Approx(curve.points.back().mean_error));
    const double ratio = curve.points.front().envelope / curve.points.back().envelope;
    CHECK(ratio == doctest::Approx(std::sqrt(64.0)).epsilon(1e-12));
    const auto again = covering_error_curve(x, m, 2, grid, 150, 7, 1);
    CHECK(again.points.front().mean_error == curve.points.front().mean_error);
  }

  TEST_CASE("loglog_slope recovers power laws") {
    const std::vector<double> xs{1, 2, 4, 8};
    std::vector<double> ys;
    for (double x : xs) ys.push_back(3 * std::pow(x, -0.5));
    CHECK(loglog_slope(xs, ys) == doctest::Approx(-0.5).epsilon(1e-12));
    ys[0] = 0;
    CHECK(std::isnan(loglog_slope(xs, ys)));
  }

  TEST_CASE("chaos_moment_exact examples") {
    const auto one = chaos_moment_exact(std::vector<double>{0.375}, 1, 1);
    CHECK(one.exact == ExactRational(3, 8));
    const auto ones = chaos_moment_exact(std::vector<double>(4, 1.0), 2, 2);
    CHECK(ones.exact == ExactRational(8));
    CHECK(ones.value == 8.0);
    CHECK(chaos_moment_bound(1.0, 2, 2) == ExactRational(256));
    CHECK(chaos_moment_within_bound(ones, 1.0, 2, 2));
    CHECK_THROWS_AS(chaos_moment_exact(std::vector<double>(225, 0.0), 15, 1), InputError);
    CHECK_THROWS_AS(chaos_moment_exact(std::vector<double>(4, 0.0), 2, 5), InputError);
    CHECK_THROWS_AS(chaos_moment_exact(std::vector<double>(3, 0.0), 2, 1), InputError);
  }

  TEST_CASE("chaos moments match float enumeration and closed forms") {
    Rng rng(15);
    for (int t = 0; t < 200; ++t) {
      const std::size_t m = 1 + rng.uniform_below(8);
      const unsigned s = 1 + static_cast<unsigned>(rng.uniform_below(4));
      std::vector<double> a(m * m);
      for (auto& v : a) v = rng.uniform(-1, 1);
      const auto c = chaos_moment_exact(a, m, s);
      REQUIRE(c.value == doctest::Approx(oracle::chaos_moment(a, m, s)).epsilon(1e-9).scale(1e-6));
      double trace = 0.0;
      for (std::size_t i = 0; i < m; ++i) trace += a[i * m + i];
      const auto first = chaos_moment_exact(a, m, 1);
      REQUIRE(first.value == doctest::Approx(trace).epsilon(1e-12));
      double second = trace * trace;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) second += std::pow(a[i * m + j] + a[j * m + i], 2);
      REQUIRE(chaos_moment_exact(a, m, 2).value == doctest::Approx(second).epsilon(1e-12));
    }
  }

  TEST_CASE("chaos moments respect the (4Kms)^s bound") {
    Rng rng(16);
    for (int t = 0; t < 1000; ++t) {
      const std::size_t m = 1 + rng.uniform_below(10);
      const unsigned s = 1 + static_cast<unsigned>(rng.uniform_below(3));
      const double K = rng.uniform(0.1, 4.0);
      std::vector<double> a(m * m);
      for (auto& v : a) v = rng.uniform(-K, K);
      REQUIRE(chaos_moment_within_bound(chaos_moment_exact(a, m, s), K, m, s));
    }
  }

  TEST_CASE("delta_sqr_check examples and grid") {
    CHECK(delta_sqr_check(0.39, 0.0, 1.0));
    CHECK(delta_sqr_check(1e-12, 0.5, 0.01));
    CHECK_THROWS_AS(delta_sqr_check(0.0, 0.5, 0.5), InputError);
    CHECK_THROWS_AS(delta_sqr_check(0.1, 1.5, 0.5), InputError);
    CHECK_THROWS_AS(delta_sqr_check(0.1, 0.5, 0.0), InputError);
    CHECK_THROWS_AS(delta_sqr_check(0.1, 0.5, 1.1), InputError);
    std::size_t exceptions = 0, held = 0;
    for (int i = 1; i <= 25; ++i)
      for (int j = 0; j < 20; ++j)
        for (int l = 1; l <= 20; ++l) {
          const double a = 2.0 * i / 25, mu = j / 19.0, d = l / 20.0;
          if (delta_sqr_check(a, mu, d)) {
            ++held;
            exceptions += a > d;
          }
          CHECK_FALSE(delta_sqr_check(2 * d, mu, d));
        }
    CHECK(exceptions == 0);
    CHECK(held > 0);
  }
}
