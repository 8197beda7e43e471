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

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace listdec {

/// A field element's integer label in [0, q).
using Symbol = std::uint8_t;

/// Finite field GF(p^m), q = p^m <= 256.
///
/// An element with coefficient vector (c_{m-1}, ..., c_0) over GF(p) is labelled
/// sum c_i p^i, so label 0 is zero and label 1 is one. Multiplication is reduced
/// modulo the lexicographically least monic irreducible polynomial of degree m;
/// addition, negation and multiplication are served from tables built once at
/// construction. Instances are immutable.
class Field {
 public:
  Field(unsigned p, unsigned m);

  unsigned p() const { return p_; }
  unsigned m() const { return m_; }
  unsigned q() const { return q_; }

  // Coefficients c_0..c_m of the modulus (c_m = 1). For m = 1 this is x.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  Symbol add(Symbol a, Symbol b) const { return add_[index(a, b)]; }
  Symbol sub(Symbol a, Symbol b) const { return add_[index(a, neg_[b])]; }
  Symbol neg(Symbol a) const { return neg_[a]; }
  Symbol mul(Symbol a, Symbol b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Symbol inv(Symbol a) const;

  // Sum_i x_i y_i in the field.
  Symbol dot(std::span<const Symbol> x, std::span<const Symbol> y) const;

  // A generator of the multiplicative group used for the exp/log tables.
  Symbol primitive() const { return exp_[1]; }

  std::string name() const;

  // Fields with the same (p, m) are the same field, since the modulus is canonical.
  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_ && a.m_ == b.m_; }

 private:
  std::size_t index(Symbol a, Symbol b) const { return static_cast<std::size_t>(a) * q_ + b; }

  unsigned p_;
  unsigned m_;
  unsigned q_;
  std::vector<unsigned> modulus_;
  std::vector<Symbol> add_;
  std::vector<Symbol> neg_;
  std::vector<Symbol> exp_;  // length 2(q-1) so log sums need no reduction
  std::vector<unsigned> log_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Builds GF(p^m). Throws InputError if p is not prime, m < 1, or p^m > 256.
FieldPtr field_make(unsigned p, unsigned m);

/// Builds the field of order q (q must be a prime power <= 256).
FieldPtr field_of_order(unsigned q);

bool is_prime(unsigned n);

/// Exhaustive irreducibility test of a monic polynomial over GF(p), coefficients low to high.
bool is_irreducible(const std::vector<unsigned>& poly, unsigned p);

/// Field element bound to its field. Operations check that both operands share a field.
class FieldElem {
 public:
  FieldElem(FieldPtr field, unsigned label);

  const FieldPtr& field() const { return field_; }
  Symbol label() const { return label_; }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator-() const { return FieldElem(field_, field_->neg(label_)); }
  FieldElem inv() const;

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return *a.field_ == *b.field_ && a.label_ == b.label_;
  }

 private:
  void check_same(const FieldElem& o) const;

  FieldPtr field_;
  Symbol label_;
};

enum class FieldOp { add, mul, neg, inv };

/// Dispatching form of the element operations; `b` is ignored for neg and inv.
FieldElem field_arith(const FieldElem& a, const FieldElem& b, FieldOp op);

/// Finite-field inner product of equal-length element sequences.
FieldElem inner_product(std::span<const FieldElem> x, std::span<const FieldElem> y);

}  // namespace listdec
