// Copyright 2026 The vdyck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "vdyck/bigint.hpp"

namespace vdyck {

/// Polynomial in x with exact integer coefficients. Coefficient i multiplies
/// x^i; trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  /// Zero for indices past the degree.
  BigInt coefficient(std::size_t power) const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  IntPolynomial shifted(std::size_t powers) const;  // multiply by x^powers

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Human-readable form such as "1 - 2x - x^2".
  std::string str() const;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

/// f = numerator / denominator as a formal power series at x = 0.
struct RationalGF {
  IntPolynomial numerator;
  IntPolynomial denominator;
};

inline constexpr int kDefaultSeriesCap = 64;

/// ceil((h + 1) / 2): the degree of q_h for h >= 2, and the number of
/// a_{h,j} coefficients that can be nonzero.
constexpr int q_degree(int h) { return (h + 2) / 2; }

/// Denominator q_h of f_h: q_1 = 1, q_2 = 1 - x - x^2,
/// q_h = q_{h-1} - x q_{h-2}.
IntPolynomial q_poly(int h);

/// a_{h,j} = (3j - h - 2) binom(h - j + 1, j - 1) (-1)^j / j, zero for
/// j > ceil((h+1)/2). The division is checked for exactness and throws
/// kNonIntegralCoefficient otherwise.
BigInt a_coeff(int h, int j);

/// f_1 = 1 + x; f_h = q_{h-1} / q_h for h >= 2.
RationalGF gf(int h);

/// First terms + 1 coefficients of the series, by exact long division.
/// Requires a denominator constant term of +1 or -1.
std::vector<BigInt> series(const RationalGF& f, int terms,
                           int cap = kDefaultSeriesCap);

/// D_0..D_{n_max} of D^(h,2) from the closed-form linear recurrence with the
/// a_{h,j} and the numerator correction term. At h = 1 the correction term
/// reproduces the numerator 1 + x, so the same formula yields 1, 1, 0, 0, ...
std::vector<BigInt> count_recurrence_sequence(int h, int n_max);

BigInt count_recurrence(int h, int n);

/// Both sides of the Catalan identity obtained from D_n^(n+alpha,2) = C_n.
struct CatalanIdentityCheck {
  BigInt lhs;
  std::optional<BigInt> rhs;  // empty when a term was non-integral
  bool holds = false;
  std::string failure;  // which term failed, if any
};

CatalanIdentityCheck evaluate_catalan_identity(int n, int alpha);

bool catalan_identity(int n, int alpha);

}  // namespace vdyck
