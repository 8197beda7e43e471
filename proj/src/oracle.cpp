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

#include "listdec/oracle.hpp"

#include "listdec/error.hpp"
#include "listdec/parallel.hpp"
#include "listdec/random.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace listdec {
namespace {

// Distance threshold t such that d/n < rho  <=>  d < t.
std::size_t strict_threshold(const Rational& rho, std::size_t n) {
  require(rho >= Rational(0) && rho <= Rational(1), "radius rho outside [0, 1]");
  const __int128 prod = static_cast<__int128>(rho.num()) * static_cast<__int128>(n);
  return static_cast<std::size_t>((prod + rho.den() - 1) / rho.den());
}

// Codewords packed `bits` bits per symbol into one 64-bit word when they fit.
class PackedWords {
 public:
  explicit PackedWords(const LinearCode& code) : n_(code.length()) {
    bits_ = static_cast<unsigned>(std::bit_width(code.q() - 1u));
    packed_ = bits_ * n_ <= 64;
    if (!packed_) return;
    low_mask_ = 0;
    for (std::size_t i = 0; i < n_; ++i) low_mask_ |= std::uint64_t{1} << (i * bits_);
    words_.reserve(code.size());
    for (std::size_t i = 0; i < code.size(); ++i) words_.push_back(pack(code.codeword(i)));
  }

  bool packed() const { return packed_; }

  std::uint64_t pack(std::span<const Symbol> w) const {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < w.size(); ++i) v |= std::uint64_t{w[i]} << (i * bits_);
    return v;
  }

  std::size_t count(std::uint64_t center, std::size_t threshold) const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) {
      const std::uint64_t x = w ^ center;
      std::uint64_t folded = x;
      for (unsigned s = 1; s < bits_; ++s) folded |= x >> s;
      c += static_cast<std::size_t>(std::popcount(folded & low_mask_)) < threshold;
    }
    return c;
  }

 private:
  std::size_t n_;
  unsigned bits_ = 1;
  bool packed_ = false;
  std::uint64_t low_mask_ = 0;
  std::vector<std::uint64_t> words_;
};

std::size_t count_plain(const LinearCode& code, std::span<const Symbol> center, std::size_t threshold) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < code.size(); ++i) {
    c += hamming_distance(code.codeword(i), center) < threshold;
  }
  return c;
}

struct Best {
  std::size_t count = 0;
  Word center;
  bool set = false;

  void offer(std::size_t c, std::span<const Symbol> w) {
    if (!set || c > count || (c == count && std::lexicographical_compare(w.begin(), w.end(),
                                                                           center.begin(), center.end()))) {
      count = c;
      center.assign(w.begin(), w.end());
      set = true;
    }
  }
};

}  // namespace

std::string to_string(CenterMode mode) {
  return mode == CenterMode::exhaustive ? "exhaustive" : "sampled";
}

std::size_t count_within(const LinearCode& code, std::span<const Symbol> center, const Rational& rho) {
  require(center.size() == code.length(), "center length differs from block length");
  return count_plain(code, center, strict_threshold(rho, code.length()));
}

ListOracleResult list_size_at_radius(const LinearCode& code, const Rational& rho,
                                     const OracleOptions& options) {
  const std::size_t n = code.length();
  const unsigned q = code.q();
  const std::size_t threshold = strict_threshold(rho, n);
  const PackedWords packed(code);
  auto count_at = [&](std::span<const Symbol> center) {
    return packed.packed() ? packed.count(packed.pack(center), threshold)
                           : count_plain(code, center, threshold);
  };

  ListOracleResult result;
  result.mode = options.mode;

  if (options.mode == CenterMode::exhaustive) {
    const std::uint64_t total = checked_power(q, n, kCenterBudget);
    require_budget(total <= kCenterBudget, "q^n exceeds the exhaustive center budget 2^24");
    const std::uint64_t chunk = 4096;
    const std::size_t chunks = static_cast<std::size_t>((total + chunk - 1) / chunk);
    std::vector<Best> partial(chunks);
    parallel_for(chunks, options.threads, [&](std::size_t ci) {
      const std::uint64_t begin = ci * chunk;
      const std::uint64_t end = std::min(total, begin + chunk);
      Word center = message_vector(q, n, begin);
      Best best;
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        // Centers ascend lexicographically, so only a strictly larger count replaces.
        const std::size_t c = count_at(center);
        if (!best.set || c > best.count) {
          best.count = c;
          best.center = center;
          best.set = true;
        }
        for (std::size_t j = n; j-- > 0;) {
          center[j] = static_cast<Symbol>((center[j] + 1) % q);
          if (center[j] != 0) break;
        }
      }
      partial[ci] = std::move(best);
    });
    Best best;
    for (const auto& p : partial) {
      if (!best.set || p.count > best.count) best = p;
    }
    result.max_count = best.count;
    result.witness_center = best.center;
    result.centers_examined = total;
    return result;
  }

  require(options.budget >= 1, "sampled oracle needs a positive center budget");
  Rng rng(options.seed);
  Best best;
  const std::size_t perturb = static_cast<std::size_t>(rho.num() * static_cast<std::int64_t>(n) / rho.den());
  std::vector<std::size_t> positions(n);
  Word center(n);
  std::uint64_t examined = 0;
  for (std::size_t i = 0; i < code.size() && examined < options.budget; ++i, ++examined) {
    best.offer(count_at(code.codeword(i)), code.codeword(i));
  }
  for (std::uint64_t r = 0; examined < options.budget; ++r, ++examined) {
    if (r % 2 == 0) {
      auto base = code.codeword(rng.uniform_below(code.size()));
      center.assign(base.begin(), base.end());
      std::iota(positions.begin(), positions.end(), std::size_t{0});
      const std::size_t count = std::min(perturb, n);
      for (std::size_t j = 0; j < count; ++j) {
        const std::size_t pick = j + rng.uniform_below(n - j);
        std::swap(positions[j], positions[pick]);
        center[positions[j]] = static_cast<Symbol>(rng.uniform_below(q));
      }
    } else {
      for (auto& s : center) s = static_cast<Symbol>(rng.uniform_below(q));
    }
    best.offer(count_at(center), center);
  }
  result.max_count = best.count;
  result.witness_center = best.center;
  result.centers_examined = examined;
  return result;
}

ListDecodabilityVerdict verify_list_decodable(const LinearCode& code, const Rational& rho,
                                              std::size_t ell, unsigned threads) {
  OracleOptions options;
  options.threads = threads;
  const ListOracleResult r = list_size_at_radius(code, rho, options);
  ListDecodabilityVerdict v;
  v.max_count = r.max_count;
  v.ok = r.max_count <= ell;
  if (!v.ok) v.counterexample = r.witness_center;
  return v;
}

Rational radius_cutoff(double radius) {
  constexpr std::int64_t kGranularity = 1'000'000'000;
  const Rational r = Rational::floor_of(radius - 1e-9, kGranularity);
  return r < Rational(0) ? Rational(0) : r;
}

}  // namespace listdec
