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

#include "listdec/rational.hpp"

#include "listdec/error.hpp"

#include <cmath>
#include <numeric>
#include <ostream>

namespace listdec {
namespace {

std::int64_t narrow(__int128 v) {
  require(v <= INT64_MAX && v >= INT64_MIN, "rational overflow");
  return static_cast<std::int64_t>(v);
}

Rational reduce(__int128 num, __int128 den) {
  require(den != 0, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 a = num < 0 ? -num : num;
  __int128 b = den;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  require(den != 0, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

Rational operator+(const Rational& a, const Rational& b) {
  return reduce(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return reduce(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return reduce(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  return reduce(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  require(!text.empty(), "empty rational");
  auto parse_int = [](std::string_view s) {
    require(!s.empty(), "malformed rational");
    std::size_t i = 0;
    bool negative = false;
    if (s[0] == '-' || s[0] == '+') {
      negative = s[0] == '-';
      i = 1;
    }
    require(i < s.size(), "malformed rational");
    __int128 v = 0;
    for (; i < s.size(); ++i) {
      require(s[i] >= '0' && s[i] <= '9', "malformed rational '" + std::string(s) + "'");
      v = v * 10 + (s[i] - '0');
      require(v <= INT64_MAX, "rational overflow");
    }
    return static_cast<std::int64_t>(negative ? -v : v);
  };
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    require(frac.size() <= 17, "too many decimal places");
    const bool negative = !whole.empty() && whole[0] == '-';
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::int64_t w = (whole.empty() || whole == "-" || whole == "+") ? 0 : parse_int(whole);
    const std::int64_t f = frac.empty() ? 0 : parse_int(frac);
    require(f >= 0, "malformed rational");
    const __int128 magnitude = static_cast<__int128>(w < 0 ? -w : w) * scale + f;
    return reduce(negative ? -magnitude : magnitude, scale);
  }
  return Rational(parse_int(text));
}

Rational Rational::floor_of(double x, std::int64_t den) {
  require(std::isfinite(x), "non-finite value");
  require(den > 0, "denominator must be positive");
  return Rational(static_cast<std::int64_t>(std::floor(x * static_cast<double>(den))), den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace listdec
