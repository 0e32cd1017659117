// Copyright 2026 The mapgen Authors.
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

#ifndef MAPGEN_PSERIES_HPP
#define MAPGEN_PSERIES_HPP

// Truncated formal power series in one counting variable whose coefficients
// are polynomials, with exact rational coefficients, in a declared list of
// indeterminates (edge/vertex weights g1, g2, ..., the crossing weight q, the
// color count N, ...).

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace mapgen {

using Rational = mpq_class;
using BigInt = mpz_class;
using Exponents = std::vector<int>;

/// A polynomial with rational coefficients in a fixed number of
/// indeterminates. Zero coefficients are never stored.
class PolyCoeff {
 public:
  PolyCoeff() = default;
  explicit PolyCoeff(std::size_t arity) : arity_(arity) {}

  static PolyCoeff constant(std::size_t arity, const Rational& value);
  static PolyCoeff variable(std::size_t arity, std::size_t index,
                            int power = 1);
  static PolyCoeff monomial(const Exponents& exps, const Rational& value);

  std::size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Exponents& exps) const;
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  PolyCoeff& operator+=(const PolyCoeff& other);
  PolyCoeff& operator-=(const PolyCoeff& other);
  PolyCoeff& operator*=(const Rational& c);
  /// Adds a*b into *this without a temporary.
  void add_product(const PolyCoeff& a, const PolyCoeff& b);

  friend PolyCoeff operator+(PolyCoeff a, const PolyCoeff& b) { return a += b; }
  friend PolyCoeff operator-(PolyCoeff a, const PolyCoeff& b) { return a -= b; }
  friend PolyCoeff operator*(const PolyCoeff& a, const PolyCoeff& b);
  friend PolyCoeff operator*(PolyCoeff a, const Rational& c) { return a *= c; }
  friend PolyCoeff operator-(PolyCoeff a) { return a *= Rational(-1); }
  friend bool operator==(const PolyCoeff& a, const PolyCoeff& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  /// Replaces indeterminate `index` by a rational value.
  PolyCoeff substitute(std::size_t index, const Rational& value) const;
  /// Re-expresses the polynomial in a larger ring; position j of the old
  /// ring goes to position index_map[j] of the new one. An index past the
  /// new arity drops the indeterminate, which must then not occur.
  PolyCoeff embed(const std::vector<std::size_t>& index_map,
                  std::size_t new_arity) const;

  /// Canonical text, monomials by decreasing total degree then decreasing
  /// exponent vector, e.g. "2*N^3 + N".
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void add_term(const Exponents& exps, const Rational& value);

  std::size_t arity_ = 0;
  std::map<Exponents, Rational> terms_;
};

/// A power series sum_{n=0}^{order} c_n x^n with PolyCoeff coefficients.
/// Series only combine when variable name, order and indeterminates agree;
/// anything else is a structural error.
class TruncatedSeries {
 public:
  TruncatedSeries(std::string var, int order,
                  std::vector<std::string> indeterminates = {});

  static TruncatedSeries constant(std::string var, int order,
                                  std::vector<std::string> indeterminates,
                                  const PolyCoeff& value);
  static TruncatedSeries from_integers(std::string var, int order,
                                       const std::vector<long>& coeffs);

  const std::string& var() const { return var_; }
  int order() const { return order_; }
  const std::vector<std::string>& indeterminates() const { return names_; }
  std::size_t arity() const { return names_.size(); }

  const PolyCoeff& operator[](int n) const;
  PolyCoeff& coeff(int n);
  void set(int n, const PolyCoeff& value);

  bool same_shape(const TruncatedSeries& other) const;
  bool is_zero() const;
  /// Index of the first coefficient where the two series differ, or -1.
  int first_difference(const TruncatedSeries& other) const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const Rational& c);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    return a += b;
  }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
    return a -= b;
  }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) {
    return a *= c;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a,
                                   const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  /// Adds the constant (polynomial) value to the x^0 coefficient.
  TruncatedSeries plus_constant(const PolyCoeff& value) const;
  TruncatedSeries plus_constant(const Rational& value) const;
  /// Multiplies every coefficient by a polynomial.
  TruncatedSeries scaled(const PolyCoeff& factor) const;
  /// Multiplies by x^k, dropping what falls past the order.
  TruncatedSeries shifted(int k) const;
  /// The series whose x^n coefficient is the x^(k n) coefficient of *this,
  /// truncated at `new_order` (requires k*new_order <= order).
  TruncatedSeries decimated(int k, int new_order, std::string new_var) const;
  /// The series in x with x^(k n) coefficient equal to the x^n coefficient.
  TruncatedSeries dilated(int k, int new_order, std::string new_var) const;
  TruncatedSeries substitute(const std::string& name, const Rational& value) const;
  /// Moves to another ring; names may be dropped only if unused.
  TruncatedSeries with_indeterminates(const std::vector<std::string>& names) const;
  TruncatedSeries with_var(std::string var) const;

  std::string to_text() const;
  std::string to_json() const;

 private:
  void require_same_shape(const TruncatedSeries& other, const char* op) const;

  std::string var_;
  int order_;
  std::vector<std::string> names_;
  std::vector<PolyCoeff> coeffs_;
};

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
/// Multiplicative inverse; the constant coefficient must be a nonzero
/// rational constant.
TruncatedSeries invert(const TruncatedSeries& a);
/// c * x d/dx applied to a: the x^n coefficient is multiplied by c*n.
TruncatedSeries theta_derivative(const TruncatedSeries& a, const Rational& c);
TruncatedSeries power(const TruncatedSeries& a, int k);

/// The ring obtained by appending names missing from `base`.
std::vector<std::string> merge_indeterminates(
    const std::vector<std::string>& base, const std::vector<std::string>& extra);

std::string rational_to_string(const Rational& q);

}  // namespace mapgen

#endif  // MAPGEN_PSERIES_HPP
