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

#include "mapgen/pseries.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "mapgen/error.hpp"

namespace mapgen {

namespace {

int total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

// Decreasing total degree, then decreasing exponent vector.
std::vector<std::pair<Exponents, Rational>> sorted_terms(
    const std::map<Exponents, Rational>& terms) {
  std::vector<std::pair<Exponents, Rational>> out(terms.begin(), terms.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int da = total_degree(a.first), db = total_degree(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  return out;
}

std::string monomial_string(const Exponents& e,
                            const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[j];
    if (e[j] > 1) out += "^" + std::to_string(e[j]);
  }
  return out;
}

}  // namespace

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// ---------------------------------------------------------------- PolyCoeff

PolyCoeff PolyCoeff::constant(std::size_t arity, const Rational& value) {
  PolyCoeff p(arity);
  Rational v = value;
  v.canonicalize();
  p.add_term(Exponents(arity, 0), v);
  return p;
}

PolyCoeff PolyCoeff::variable(std::size_t arity, std::size_t index, int power) {
  if (index >= arity) fail(ErrorKind::kStructural, "indeterminate index out of range");
  PolyCoeff p(arity);
  Exponents e(arity, 0);
  e[index] = power;
  p.add_term(e, Rational(1));
  return p;
}

PolyCoeff PolyCoeff::monomial(const Exponents& exps, const Rational& value) {
  PolyCoeff p(exps.size());
  Rational v = value;
  v.canonicalize();
  p.add_term(exps, v);
  return p;
}

bool PolyCoeff::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

Rational PolyCoeff::constant_term() const {
  return coefficient(Exponents(arity_, 0));
}

Rational PolyCoeff::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PolyCoeff::add_term(const Exponents& exps, const Rational& value) {
  if (exps.size() != arity_) fail(ErrorKind::kStructural, "monomial arity mismatch");
  if (value == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

PolyCoeff& PolyCoeff::operator+=(const PolyCoeff& other) {
  if (other.arity_ != arity_) fail(ErrorKind::kStructural, "polynomial arity mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

PolyCoeff& PolyCoeff::operator-=(const PolyCoeff& other) {
  if (other.arity_ != arity_) fail(ErrorKind::kStructural, "polynomial arity mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

PolyCoeff& PolyCoeff::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  Rational k = c;
  k.canonicalize();
  for (auto& [e, v] : terms_) v *= k;
  return *this;
}

void PolyCoeff::add_product(const PolyCoeff& a, const PolyCoeff& b) {
  if (a.arity_ != arity_ || b.arity_ != arity_)
    fail(ErrorKind::kStructural, "polynomial arity mismatch");
  Exponents e(arity_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t j = 0; j < arity_; ++j) e[j] = ea[j] + eb[j];
      add_term(e, ca * cb);
    }
  }
}

PolyCoeff operator*(const PolyCoeff& a, const PolyCoeff& b) {
  PolyCoeff out(a.arity_);
  out.add_product(a, b);
  return out;
}

PolyCoeff PolyCoeff::substitute(std::size_t index, const Rational& value) const {
  if (index >= arity_) fail(ErrorKind::kStructural, "indeterminate index out of range");
  PolyCoeff out(arity_);
  for (const auto& [e, c] : terms_) {
    Rational v = c;
    for (int k = 0; k < e[index]; ++k) v *= value;
    Exponents f = e;
    f[index] = 0;
    out.add_term(f, v);
  }
  return out;
}

PolyCoeff PolyCoeff::embed(const std::vector<std::size_t>& index_map,
                           std::size_t new_arity) const {
  PolyCoeff out(new_arity);
  for (const auto& [e, c] : terms_) {
    Exponents f(new_arity, 0);
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (index_map[j] >= new_arity)
        fail(ErrorKind::kStructural, "indeterminate dropped while still in use");
      f[index_map[j]] += e[j];
    }
    out.add_term(f, c);
  }
  return out;
}

std::string PolyCoeff::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : sorted_terms(terms_)) {
    std::string mono = monomial_string(e, names);
    Rational mag = abs(c);
    std::string body;
    if (mono.empty()) {
      body = rational_to_string(mag);
    } else if (mag == 1) {
      body = mono;
    } else {
      body = rational_to_string(mag) + "*" + mono;
    }
    if (first) {
      out = (c < 0 ? "-" : "") + body;
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

// ----------------------------------------------------------- TruncatedSeries

TruncatedSeries::TruncatedSeries(std::string var, int order,
                                 std::vector<std::string> indeterminates)
    : var_(std::move(var)), order_(order), names_(std::move(indeterminates)) {
  if (order_ < 0) fail(ErrorKind::kDomain, "truncation order must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(order_) + 1, PolyCoeff(names_.size()));
}

TruncatedSeries TruncatedSeries::constant(std::string var, int order,
                                          std::vector<std::string> indeterminates,
                                          const PolyCoeff& value) {
  TruncatedSeries s(std::move(var), order, std::move(indeterminates));
  s.set(0, value);
  return s;
}

TruncatedSeries TruncatedSeries::from_integers(std::string var, int order,
                                               const std::vector<long>& coeffs) {
  TruncatedSeries s(std::move(var), order);
  for (std::size_t n = 0; n < coeffs.size() && static_cast<int>(n) <= order; ++n)
    s.set(static_cast<int>(n), PolyCoeff::constant(0, Rational(coeffs[n])));
  return s;
}

const PolyCoeff& TruncatedSeries::operator[](int n) const {
  if (n < 0 || n > order_) fail(ErrorKind::kRange, "coefficient index beyond truncation order");
  return coeffs_[static_cast<std::size_t>(n)];
}

PolyCoeff& TruncatedSeries::coeff(int n) {
  if (n < 0 || n > order_) fail(ErrorKind::kRange, "coefficient index beyond truncation order");
  return coeffs_[static_cast<std::size_t>(n)];
}

void TruncatedSeries::set(int n, const PolyCoeff& value) {
  if (value.arity() != names_.size())
    fail(ErrorKind::kStructural, "coefficient arity does not match indeterminates");
  coeff(n) = value;
}

bool TruncatedSeries::same_shape(const TruncatedSeries& other) const {
  return var_ == other.var_ && order_ == other.order_ && names_ == other.names_;
}

void TruncatedSeries::require_same_shape(const TruncatedSeries& other,
                                         const char* op) const {
  if (!same_shape(other)) {
    std::ostringstream msg;
    msg << op << ": series shapes differ (" << var_ << "/" << order_ << "/"
        << names_.size() << " vs " << other.var_ << "/" << other.order_ << "/"
        << other.names_.size() << ")";
    fail(ErrorKind::kStructural, msg.str());
  }
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const PolyCoeff& p) { return p.is_zero(); });
}

int TruncatedSeries::first_difference(const TruncatedSeries& other) const {
  require_same_shape(other, "compare");
  for (int n = 0; n <= order_; ++n)
    if (!(coeffs_[n] == other.coeffs_[n])) return n;
  return -1;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  require_same_shape(other, "add");
  for (int n = 0; n <= order_; ++n) coeffs_[n] += other.coeffs_[n];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  require_same_shape(other, "subtract");
  for (int n = 0; n <= order_; ++n) coeffs_[n] -= other.coeffs_[n];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  for (auto& p : coeffs_) p *= c;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.require_same_shape(b, "multiply");
  TruncatedSeries out(a.var_, a.order_, a.names_);
  for (int i = 0; i <= a.order_; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= a.order_; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j].add_product(a.coeffs_[i], b.coeffs_[j]);
    }
  }
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.same_shape(b) && a.coeffs_ == b.coeffs_;
}

TruncatedSeries TruncatedSeries::plus_constant(const PolyCoeff& value) const {
  TruncatedSeries out = *this;
  out.coeffs_[0] += value;
  return out;
}

TruncatedSeries TruncatedSeries::plus_constant(const Rational& value) const {
  return plus_constant(PolyCoeff::constant(names_.size(), value));
}

TruncatedSeries TruncatedSeries::scaled(const PolyCoeff& factor) const {
  TruncatedSeries out(var_, order_, names_);
  for (int n = 0; n <= order_; ++n) out.coeffs_[n] = coeffs_[n] * factor;
  return out;
}

TruncatedSeries TruncatedSeries::shifted(int k) const {
  TruncatedSeries out(var_, order_, names_);
  for (int n = 0; n <= order_; ++n) {
    int m = n + k;
    if (m >= 0 && m <= order_) out.coeffs_[m] = coeffs_[n];
  }
  return out;
}

TruncatedSeries TruncatedSeries::decimated(int k, int new_order,
                                           std::string new_var) const {
  if (k < 1 || static_cast<long>(k) * new_order > order_)
    fail(ErrorKind::kRange, "decimation needs k*new_order <= order");
  TruncatedSeries out(std::move(new_var), new_order, names_);
  for (int n = 0; n <= new_order; ++n) out.coeffs_[n] = coeffs_[k * n];
  return out;
}

TruncatedSeries TruncatedSeries::dilated(int k, int new_order,
                                         std::string new_var) const {
  if (k < 1) fail(ErrorKind::kDomain, "dilation factor must be >= 1");
  TruncatedSeries out(std::move(new_var), new_order, names_);
  for (int n = 0; n <= order_ && k * n <= new_order; ++n)
    out.coeffs_[k * n] = coeffs_[n];
  return out;
}

TruncatedSeries TruncatedSeries::substitute(const std::string& name,
                                            const Rational& value) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) fail(ErrorKind::kStructural, "unknown indeterminate " + name);
  std::size_t idx = static_cast<std::size_t>(it - names_.begin());
  TruncatedSeries out = *this;
  for (auto& p : out.coeffs_) p = p.substitute(idx, value);
  return out;
}

TruncatedSeries TruncatedSeries::with_indeterminates(
    const std::vector<std::string>& names) const {
  std::vector<std::size_t> index_map;
  for (const auto& n : names_) {
    auto it = std::find(names.begin(), names.end(), n);
    // Absent names map past the end; embed rejects them if actually used.
    index_map.push_back(it == names.end()
                            ? names.size()
                            : static_cast<std::size_t>(it - names.begin()));
  }
  TruncatedSeries out(var_, order_, names);
  for (int n = 0; n <= order_; ++n)
    out.coeffs_[n] = coeffs_[n].embed(index_map, names.size());
  return out;
}

TruncatedSeries TruncatedSeries::with_var(std::string var) const {
  TruncatedSeries out = *this;
  out.var_ = std::move(var);
  return out;
}

std::string TruncatedSeries::to_text() const {
  std::string out;
  auto power = [&](int n) -> std::string {
    if (n == 0) return "";
    if (n == 1) return var_;
    return var_ + "^" + std::to_string(n);
  };
  for (int n = 0; n <= order_; ++n) {
    const PolyCoeff& p = coeffs_[n];
    if (p.is_zero()) continue;
    std::string term;
    bool negative = false;
    if (p.is_constant()) {
      Rational c = p.constant_term();
      negative = c < 0;
      Rational mag = abs(c);
      if (n == 0) {
        term = rational_to_string(mag);
      } else {
        term = mag == 1 ? power(n) : rational_to_string(mag) + "*" + power(n);
      }
    } else {
      std::string poly = p.to_string(names_);
      bool single = p.terms().size() == 1;
      if (n == 0) {
        term = poly;
      } else if (single && poly[0] != '-') {
        term = poly + "*" + power(n);
      } else {
        term = "(" + poly + ")*" + power(n);
      }
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  if (out.empty()) out = "0";
  out += " + O(" + power(order_ + 1) + ")";
  return out;
}

std::string TruncatedSeries::to_json() const {
  nlohmann::json j;
  j["format_version"] = 1;
  j["var"] = var_;
  j["order"] = order_;
  j["indeterminates"] = names_;
  nlohmann::json coeffs = nlohmann::json::array();
  for (int n = 0; n <= order_; ++n) {
    if (coeffs_[n].is_zero()) continue;
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : sorted_terms(coeffs_[n].terms())) {
      terms.push_back({{"monomial", e},
                       {"num", c.get_num().get_str()},
                       {"den", c.get_den().get_str()}});
    }
    coeffs.push_back({{"exponent", n}, {"terms", terms}});
  }
  j["coefficients"] = coeffs;
  return j.dump();
}

// --------------------------------------------------------------- free ops

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a * b;
}

TruncatedSeries invert(const TruncatedSeries& a) {
  const PolyCoeff& c0 = a[0];
  if (!c0.is_constant() || c0.is_zero())
    fail(ErrorKind::kDomain, "series is not invertible: constant term must be a nonzero rational");
  Rational inv0 = 1 / c0.constant_term();
  TruncatedSeries b(a.var(), a.order(), a.indeterminates());
  b.set(0, PolyCoeff::constant(a.arity(), inv0));
  for (int n = 1; n <= a.order(); ++n) {
    PolyCoeff acc(a.arity());
    for (int j = 1; j <= n; ++j) acc.add_product(a[j], b[n - j]);
    b.set(n, acc * (-inv0));
  }
  return b;
}

TruncatedSeries theta_derivative(const TruncatedSeries& a, const Rational& c) {
  TruncatedSeries out(a.var(), a.order(), a.indeterminates());
  for (int n = 1; n <= a.order(); ++n) out.set(n, a[n] * (c * n));
  return out;
}

TruncatedSeries power(const TruncatedSeries& a, int k) {
  if (k < 0) fail(ErrorKind::kDomain, "negative power");
  TruncatedSeries out = TruncatedSeries::constant(
      a.var(), a.order(), a.indeterminates(), PolyCoeff::constant(a.arity(), 1));
  for (int j = 0; j < k; ++j) out = out * a;
  return out;
}

std::vector<std::string> merge_indeterminates(const std::vector<std::string>& base,
                                              const std::vector<std::string>& extra) {
  std::vector<std::string> out = base;
  for (const auto& n : extra)
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  return out;
}

}  // namespace mapgen
