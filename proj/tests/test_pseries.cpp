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

#include <random>

#include "doctest.h"
#include "mapgen/error.hpp"
#include "mapgen/pseries.hpp"
#include "mapgen/recursion.hpp"

using namespace mapgen;

namespace {

TruncatedSeries random_series(std::mt19937& rng, int order,
                              const std::vector<std::string>& names) {
  std::uniform_int_distribution<int> coef(-4, 4), den(1, 3), expo(0, 2);
  TruncatedSeries s("t", order, names);
  for (int n = 0; n <= order; ++n) {
    PolyCoeff p(names.size());
    for (int k = 0; k < 3; ++k) {
      Exponents e(names.size());
      for (auto& x : e) x = expo(rng);
      p += PolyCoeff::monomial(e, Rational(coef(rng), den(rng)));
    }
    s.set(n, p);
  }
  return s;
}

// Plain double loop over the dense coefficients; no shortcuts.
TruncatedSeries convolve(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(a.var(), a.order(), a.indeterminates());
  for (int n = 0; n <= a.order(); ++n) {
    PolyCoeff acc(a.arity());
    for (int j = 0; j <= n; ++j) acc = acc + a[j] * b[n - j];
    out.set(n, acc);
  }
  return out;
}

}  // namespace

TEST_CASE("mul examples") {
  auto a = TruncatedSeries::from_integers("t", 2, {1, 1});
  CHECK(mul(a, a) == TruncatedSeries::from_integers("t", 2, {1, 2, 1}));

  TruncatedSeries b("t", 2, {"g1"});
  b.set(0, PolyCoeff::constant(1, Rational(1)));
  b.set(1, PolyCoeff::variable(1, 0));
  auto one = TruncatedSeries("t", 2, {"g1"}).plus_constant(Rational(1));
  CHECK(mul(b, one) == b);

  auto sol = solve_eulerian(WeightSpec::regular(4), 2, 2);
  auto p = mul(sol.r_at(1), sol.r_at(2));
  CHECK(p == TruncatedSeries::from_integers("t", 2, {2, 0, 18}));
  CHECK(p == convolve(sol.r_at(1), sol.r_at(2)));
}

TEST_CASE("mismatched shapes are structural errors") {
  auto a = TruncatedSeries::from_integers("t", 2, {1});
  auto b = TruncatedSeries::from_integers("t", 3, {1});
  auto c = TruncatedSeries::from_integers("g", 2, {1});
  auto d = TruncatedSeries("t", 2, {"q"});
  for (const auto* other : {&b, &c, &d}) {
    try {
      (void)mul(a, *other);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kStructural);
    }
  }
}

TEST_CASE("invert examples") {
  auto a = TruncatedSeries::from_integers("t", 3, {1, -1});
  CHECK(invert(a) == TruncatedSeries::from_integers("t", 3, {1, 1, 1, 1}));
  auto one = TruncatedSeries::from_integers("t", 3, {1});
  CHECK(invert(one) == one);

  auto sol = solve_eulerian(WeightSpec::regular(4), 4, 2);
  auto r1 = sol.r_at(1);
  CHECK(mul(r1, invert(r1)) == TruncatedSeries::from_integers("t", 4, {1}));

  auto zero_const = TruncatedSeries::from_integers("t", 3, {0, 1});
  try {
    (void)invert(zero_const);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kDomain);
  }
  TruncatedSeries sym("t", 2, {"g1"});
  sym.set(0, PolyCoeff::variable(1, 0));
  CHECK_THROWS_AS(invert(sym), Error);
}

TEST_CASE("theta derivative examples") {
  auto a = TruncatedSeries::from_integers("t", 4, {1, 0, 3});
  CHECK(theta_derivative(a, Rational(2)) ==
        TruncatedSeries::from_integers("t", 4, {0, 0, 12}));
  CHECK(theta_derivative(TruncatedSeries::from_integers("t", 4, {7}), Rational(5))
            .is_zero());

  auto sol = solve_eulerian(WeightSpec::regular(4), 4, 3);
  auto log_der = theta_derivative(sol.r_at(1), Rational(2)) * invert(sol.r_at(1));
  auto cross = sol.r_at(2) - sol.r_at(0) - sol.zero().plus_constant(Rational(2));
  CHECK(log_der == cross);
  CHECK(log_der == TruncatedSeries::from_integers("t", 4, {0, 0, 12, 0, 156}));
}

TEST_CASE("ring axioms and derivation rule on random series") {
  std::mt19937 rng(20260101);
  const std::vector<std::string> names{"g1", "q"};
  for (int trial = 0; trial < 40; ++trial) {
    int order = 1 + trial % 5;
    auto a = random_series(rng, order, names);
    auto b = random_series(rng, order, names);
    auto c = random_series(rng, order, names);
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, b + c) == mul(a, b) + mul(a, c));
    CHECK(mul(a, b) == mul(b, a));
    CHECK(mul(a, b) == convolve(a, b));
    Rational k(1 + trial % 3, 2);
    CHECK(theta_derivative(mul(a, b), k) ==
          mul(theta_derivative(a, k), b) + mul(a, theta_derivative(b, k)));
  }
}

TEST_CASE("invert then multiply gives one at every order") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int order = 0; order <= 8; ++order) {
    std::vector<long> cs(static_cast<std::size_t>(order) + 1);
    for (auto& c : cs) c = coef(rng);
    cs[0] = 1 + (coef(rng) + 5);
    auto a = TruncatedSeries::from_integers("t", order, cs);
    CHECK(mul(a, invert(a)) == TruncatedSeries::from_integers("t", order, {1}));
  }
}

TEST_CASE("text and json forms") {
  TruncatedSeries s("t", 3, {"N"});
  s.set(0, PolyCoeff::constant(1, Rational(1)));
  s.set(2, PolyCoeff::variable(1, 0, 3) * Rational(2) + PolyCoeff::variable(1, 0));
  CHECK(s.to_text() == "1 + (2*N^3 + N)*t^2 + O(t^4)");
  auto j1 = s.to_json();
  CHECK(j1 == s.to_json());
  CHECK(j1.find("\"format_version\":1") != std::string::npos);
  CHECK(TruncatedSeries("t", 2).to_text() == "0 + O(t^3)");
}

TEST_CASE("substitution and ring changes") {
  TruncatedSeries s("t", 2, {"q"});
  s.set(1, PolyCoeff::variable(1, 0) + PolyCoeff::constant(1, Rational(1)));
  auto at0 = s.substitute("q", Rational(0)).with_indeterminates({});
  CHECK(at0 == TruncatedSeries::from_integers("t", 2, {0, 1}));
  auto wide = s.with_indeterminates({"g1", "q"});
  CHECK(wide.with_indeterminates({"q"}) == s);
}
