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

#include "listdec/gf.hpp"

#include "listdec/error.hpp"

#include <algorithm>

namespace listdec {
namespace {

using Poly = std::vector<unsigned>;  // coefficients low to high, GF(p)

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned inv_mod(unsigned a, unsigned p) {
  for (unsigned x = 1; x < p; ++x) {
    if ((a * x) % p == 1) return x;
  }
  return 0;
}

// Remainder of a modulo b over GF(p); b must be nonzero.
Poly poly_mod(Poly a, const Poly& b, unsigned p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const unsigned lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const unsigned factor = (a.back() * lead_inv) % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + p * p - factor * b[i]) % p;
    }
    trim(a);
  }
  return a;
}

Poly digits_of(unsigned label, unsigned p, unsigned m) {
  Poly d(m, 0);
  for (unsigned i = 0; i < m; ++i) {
    d[i] = label % p;
    label /= p;
  }
  return d;
}

unsigned label_of(const Poly& d, unsigned p) {
  unsigned label = 0;
  for (std::size_t i = d.size(); i-- > 0;) label = label * p + d[i];
  return label;
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(const std::vector<unsigned>& poly, unsigned p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  // Try every monic divisor of degree 1..deg/2.
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    unsigned count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (unsigned low = 0; low < count; ++low) {
      Poly g = digits_of(low, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Field::Field(unsigned p, unsigned m) : p_(p), m_(m) {
  require(m >= 1, "field extension degree must be >= 1");
  require(is_prime(p), "field characteristic " + std::to_string(p) + " is not prime");
  unsigned q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    require(q <= 256, "field order p^m must be <= 256");
  }
  q_ = q;

  if (m == 1) {
    modulus_ = {0, 1};
  } else {
    for (unsigned low = 0; low < q; ++low) {
      Poly cand = digits_of(low, p, m);
      cand.push_back(1);
      if (is_irreducible(cand, p)) {
        modulus_ = std::move(cand);
        break;
      }
    }
  }

  add_.resize(static_cast<std::size_t>(q) * q);
  neg_.resize(q);
  for (unsigned a = 0; a < q; ++a) {
    const Poly da = digits_of(a, p, m);
    Poly dn(m);
    for (unsigned i = 0; i < m; ++i) dn[i] = (p - da[i]) % p;
    neg_[a] = static_cast<Symbol>(label_of(dn, p));
    for (unsigned b = 0; b < q; ++b) {
      const Poly db = digits_of(b, p, m);
      Poly ds(m);
      for (unsigned i = 0; i < m; ++i) ds[i] = (da[i] + db[i]) % p;
      add_[index(static_cast<Symbol>(a), static_cast<Symbol>(b))] =
          static_cast<Symbol>(label_of(ds, p));
    }
  }

  // Schoolbook product reduced by the modulus; used only to build exp/log.
  auto slow_mul = [&](unsigned a, unsigned b) {
    const Poly da = digits_of(a, p, m);
    const Poly db = digits_of(b, p, m);
    Poly prod(2 * m - 1, 0);
    for (unsigned i = 0; i < m; ++i) {
      for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
    Poly r = (m == 1) ? Poly{prod[0] % p} : poly_mod(prod, modulus_, p);
    r.resize(m, 0);
    return label_of(r, p);
  };

  exp_.assign(2 * (q - 1), 0);
  log_.assign(q, 0);
  for (unsigned g = 1; g < q; ++g) {
    unsigned x = 1;
    unsigned order = 0;
    do {
      x = slow_mul(x, g);
      ++order;
    } while (x != 1);
    if (order != q - 1) continue;
    x = 1;
    for (unsigned i = 0; i < q - 1; ++i) {
      exp_[i] = static_cast<Symbol>(x);
      exp_[i + q - 1] = static_cast<Symbol>(x);
      log_[x] = i;
      x = slow_mul(x, g);
    }
    break;
  }
}

Symbol Field::inv(Symbol a) const {
  require(a != 0, "inverse of zero in " + name());
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Symbol Field::dot(std::span<const Symbol> x, std::span<const Symbol> y) const {
  require(x.size() == y.size(), "inner product of vectors with different lengths");
  Symbol acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc = add(acc, mul(x[i], y[i]));
  return acc;
}

std::string Field::name() const {
  return "GF(" + std::to_string(q_) + ")";
}

FieldPtr field_make(unsigned p, unsigned m) {
  return std::make_shared<const Field>(p, m);
}

FieldPtr field_of_order(unsigned q) {
  require(q >= 2 && q <= 256, "field order must be in [2, 256]");
  for (unsigned p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    unsigned m = 0;
    unsigned r = q;
    while (r % p == 0) {
      r /= p;
      ++m;
    }
    require(r == 1, std::to_string(q) + " is not a prime power");
    return field_make(p, m);
  }
  throw InputError("invalid field order");
}

FieldElem::FieldElem(FieldPtr field, unsigned label) : field_(std::move(field)) {
  require(field_ != nullptr, "field element without a field");
  require(label < field_->q(), "label " + std::to_string(label) + " out of range for " + field_->name());
  label_ = static_cast<Symbol>(label);
}

void FieldElem::check_same(const FieldElem& o) const {
  require(*field_ == *o.field_, "operands from different fields");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same(o);
  return FieldElem(field_, field_->add(label_, o.label_));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  check_same(o);
  return FieldElem(field_, field_->sub(label_, o.label_));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same(o);
  return FieldElem(field_, field_->mul(label_, o.label_));
}

FieldElem FieldElem::inv() const {
  return FieldElem(field_, field_->inv(label_));
}

FieldElem field_arith(const FieldElem& a, const FieldElem& b, FieldOp op) {
  switch (op) {
    case FieldOp::add: return a + b;
    case FieldOp::mul: return a * b;
    case FieldOp::neg: return -a;
    case FieldOp::inv: return a.inv();
  }
  throw InputError("unknown field operation");
}

FieldElem inner_product(std::span<const FieldElem> x, std::span<const FieldElem> y) {
  require(x.size() == y.size(), "inner product of vectors with different lengths");
  require(!x.empty(), "inner product of empty vectors has no field");
  FieldElem acc(x[0].field(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) acc = acc + x[i] * y[i];
  return acc;
}

}  // namespace listdec
