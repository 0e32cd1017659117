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

#include "doctest.h"
#include "mapgen/analytic.hpp"
#include "mapgen/error.hpp"
#include "mapgen/recursion.hpp"

using namespace mapgen;

namespace {

// [x^n] of the Riccati equation read off by hand:
// M_n = (p-1)[n=1] + p n M_{n-1} + sum_{a+b=n-1} M_a M_b.
std::vector<BigInt> riccati_recurrence(int p, int order) {
  std::vector<BigInt> m(static_cast<std::size_t>(order) + 1, 0);
  for (int n = 1; n <= order; ++n) {
    BigInt v = (n == 1) ? BigInt(p - 1) : BigInt(0);
    v += BigInt(p) * n * m[static_cast<std::size_t>(n - 1)];
    for (int a = 0; a <= n - 1; ++a) {
      v += m[static_cast<std::size_t>(a)] * m[static_cast<std::size_t>(n - 1 - a)];
    }
    m[static_cast<std::size_t>(n)] = v;
  }
  return m;
}

}  // namespace

TEST_CASE("riccati examples") {
  CHECK(solve_riccati(4, 3) == TruncatedSeries::from_integers("x", 3, {0, 3, 24, 297}));
  CHECK(solve_riccati(3, 3) == TruncatedSeries::from_integers("x", 3, {0, 2, 12, 112}));
  for (int p = 2; p <= 7; ++p) {
    CHECK(solve_riccati(p, 1)[1] == PolyCoeff::constant(0, Rational(p - 1)));
  }
}

TEST_CASE("riccati agrees with the hand recurrence") {
  for (int p : {2, 3, 4, 6}) {
    auto m = solve_riccati(p, 10);
    auto ref = riccati_recurrence(p, 10);
    for (int n = 0; n <= 10; ++n) {
      CHECK(m[n].constant_term() == Rational(ref[static_cast<std::size_t>(n)]));
      CHECK(m[n].is_constant());
    }
  }
  auto p2 = solve_riccati(2, 10);
  for (int n = 1; n <= 10; ++n) {
    CHECK(p2[n].constant_term() > 0);
    CHECK(p2[n].constant_term().get_den() == 1);
  }
}

TEST_CASE("continued fraction convergents") {
  CHECK(contfrac_convergent(4, 2, 2) == TruncatedSeries::from_integers("x", 2, {1, 3, 24}));
  CHECK(contfrac_convergent(4, 1, 1) == TruncatedSeries::from_integers("x", 1, {1, 3}));
  for (int p : {2, 3, 4, 6}) {
    for (int order = 1; order <= 8; ++order) {
      CHECK(contfrac_convergent(p, order, order) ==
            solve_riccati(p, order).plus_constant(Rational(1)));
    }
  }
  // depth d fixes exactly d orders
  auto full = solve_riccati(4, 6).plus_constant(Rational(1));
  CHECK(contfrac_convergent(4, 3, 6).first_difference(full) == 4);
  CHECK_THROWS_AS(contfrac_convergent(4, 0, 3), Error);
}

TEST_CASE("riccati families match the recursive systems") {
  const int K = 6;
  auto eul4 = solve_eulerian(WeightSpec::regular(4), 2 * K, 1);
  CHECK(solve_family_ode(OdeFamily::kM4, K) ==
        eul4.r_at(1).decimated(2, K, "g").plus_constant(Rational(-1)));

  auto bip = solve_bipartite(3, K, 1);
  CHECK(solve_family_ode(OdeFamily::kM3b, K) == bip.r_at(1).plus_constant(Rational(-1)));

  auto three = solve_threeregular(2 * K, 1);
  CHECK(solve_family_ode(OdeFamily::kM3, 2 * K) == *three.m3);
  CHECK(contfrac_convergent(6, 3, 3).dilated(2, 6, "g").plus_constant(Rational(-1)) ==
        solve_threeregular(6, 1).m3->with_var("g"));
}

TEST_CASE("M6 equation") {
  CHECK(solve_m6_ode(0).is_zero());
  auto m6 = solve_m6_ode(4);
  CHECK(m6[1] == PolyCoeff::constant(0, Rational(15)));
  auto eul6 = solve_eulerian(WeightSpec::regular(6), 12, 1);
  CHECK(m6 == eul6.r_at(1).decimated(3, 4, "g").plus_constant(Rational(-1)));
  CHECK(solve_m6_t_form(12) == eul6.r_at(1));
  CHECK(solve_family_ode(OdeFamily::kM6, 4) == m6);
}

TEST_CASE("A_k / B_k tower") {
  for (int p : {3, 4, 6}) {
    CHECK(solve_ak(p, 1, 6) == solve_riccati(p, 6));
  }
  for (int k = 1; k <= 5; ++k) {
    CHECK(solve_ak(5, k, 1)[1] == PolyCoeff::constant(0, Rational(5 * k - 1)));
  }
  auto rep = ak_tower_check(4, 3, 6);
  CHECK(rep.passed);
  CHECK(rep.checks == 7);
  for (int p : {2, 3, 6}) CHECK(ak_tower_check(p, 3, 6).passed);
}

TEST_CASE("family names") {
  CHECK(parse_ode_family("m3b") == OdeFamily::kM3b);
  CHECK_THROWS_AS(parse_ode_family("m5"), Error);
}
