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

#include "vdyck/genfunc.hpp"

#include <algorithm>

#include "vdyck/dyck.hpp"
#include "vdyck/error.hpp"

namespace vdyck {
namespace {

BigInt sign(int power) { return power % 2 == 0 ? 1 : -1; }

// numerator / denominator, throwing if the quotient is not an integer.
BigInt exact_div(const BigInt& numerator, long long denominator,
                 const std::string& what) {
  if (numerator % denominator != 0) {
    throw Error(ErrorCode::kNonIntegralCoefficient,
                what + ": " + to_string(numerator) + " is not divisible by " +
                    std::to_string(denominator));
  }
  return numerator / denominator;
}

// a_{h-1,n} = ((3n - h - 1)/n) binom(h - n, n - 1) (-1)^n for n >= 1. The
// numerator q_{h-1} of f_h has -a_{h-1,n} as its x^n coefficient.
BigInt numerator_term(int h, int n) {
  const BigInt product = BigInt(3LL * n - h - 1) * binomial(h - n, n - 1);
  return exact_div(product, n, "numerator term") * sign(n);
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
  for (long long c : coefficients) coeffs_.emplace_back(c);
  normalize();
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : BigInt(0);
}

IntPolynomial IntPolynomial::shifted(std::size_t powers) const {
  if (is_zero()) return {};
  std::vector<BigInt> out(powers, BigInt(0));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(out));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.coefficient(i) + b.coefficient(i);
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.coefficient(i) - b.coefficient(i);
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += to_string(mag);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

IntPolynomial q_poly(int h) {
  if (h < 1) throw Error(ErrorCode::kInvalidArgument, "h must be >= 1");
  IntPolynomial prev{1};           // q_1
  if (h == 1) return prev;
  IntPolynomial cur{1, -1, -1};    // q_2
  for (int k = 3; k <= h; ++k) {
    IntPolynomial next = cur - prev.shifted(1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt a_coeff(int h, int j) {
  if (h < 1) throw Error(ErrorCode::kInvalidArgument, "h must be >= 1");
  if (j < 1) throw Error(ErrorCode::kInvalidArgument, "j must be >= 1");
  if (j > q_degree(h)) return 0;
  const BigInt product = BigInt(3LL * j - h - 2) * binomial(h - j + 1, j - 1);
  return exact_div(product, j,
                   "a(" + std::to_string(h) + "," + std::to_string(j) + ")") *
         sign(j);
}

RationalGF gf(int h) {
  if (h < 1) throw Error(ErrorCode::kInvalidArgument, "h must be >= 1");
  if (h == 1) return {IntPolynomial{1, 1}, IntPolynomial{1}};
  return {q_poly(h - 1), q_poly(h)};
}

std::vector<BigInt> series(const RationalGF& f, int terms, int cap) {
  if (terms < 0) throw Error(ErrorCode::kInvalidArgument, "N must be >= 0");
  if (terms > cap) {
    throw Error(ErrorCode::kCapExceeded, "series length " +
                                             std::to_string(terms) +
                                             " exceeds cap " +
                                             std::to_string(cap));
  }
  const BigInt c0 = f.denominator.coefficient(0);
  if (c0 != 1 && c0 != -1) {
    throw Error(ErrorCode::kNonUnitConstantTerm,
                "denominator constant term is " + to_string(c0));
  }
  // denominator * s = numerator, solved term by term.
  std::vector<BigInt> s(static_cast<std::size_t>(terms) + 1);
  const int deg = f.denominator.degree();
  for (int n = 0; n <= terms; ++n) {
    BigInt acc = f.numerator.coefficient(n);
    for (int i = 1; i <= std::min(n, deg); ++i) {
      acc -= f.denominator.coefficient(i) * s[n - i];
    }
    s[n] = acc * c0;  // c0 is its own inverse
  }
  return s;
}

std::vector<BigInt> count_recurrence_sequence(int h, int n_max) {
  if (h < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "the counting recurrence needs h >= 1");
  }
  if (n_max < 0) throw Error(ErrorCode::kInvalidArgument, "n must be >= 0");
  const int width = q_degree(h);
  std::vector<BigInt> a(width + 1);
  for (int j = 1; j <= width; ++j) a[j] = a_coeff(h, j);

  std::vector<BigInt> d(static_cast<std::size_t>(n_max) + 1);
  d[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    BigInt acc = 0;
    for (int j = 1; j <= std::min(width, n); ++j) acc += d[n - j] * a[j];
    d[n] = acc - numerator_term(h, n);
  }
  return d;
}

BigInt count_recurrence(int h, int n) {
  return count_recurrence_sequence(h, n).back();
}

CatalanIdentityCheck evaluate_catalan_identity(int n, int alpha) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  if (alpha < 0) throw Error(ErrorCode::kInvalidArgument, "alpha must be >= 0");

  CatalanIdentityCheck check;
  check.lhs = catalan(n);
  BigInt rhs = 0;
  for (int j = 1; j <= n; ++j) {
    const BigInt product = catalan(n - j) * BigInt(3LL * j - n - alpha - 2) *
                           binomial(n + alpha - j + 1, j - 1);
    if (product % j != 0) {
      check.failure = "summand j=" + std::to_string(j) + " is not integral";
      return check;
    }
    rhs += product / j * sign(j);
  }
  const BigInt tail = BigInt(2LL * n - alpha - 1) * binomial(alpha, n - 1);
  if (tail % n != 0) {
    check.failure = "correction term is not integral";
    return check;
  }
  rhs -= tail / n * sign(n);
  check.holds = rhs == check.lhs;
  check.rhs = std::move(rhs);
  return check;
}

bool catalan_identity(int n, int alpha) {
  return evaluate_catalan_identity(n, alpha).holds;
}

}  // namespace vdyck
