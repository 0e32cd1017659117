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

#include "mapgen/analytic.hpp"

#include "mapgen/error.hpp"

namespace mapgen {

namespace {

// x * d/dx
TruncatedSeries theta(const TruncatedSeries& a) { return theta_derivative(a, Rational(1)); }

void require_order(int order, int min) {
  if (order < min) {
    fail(ErrorKind::kDomain, "order must be >= " + std::to_string(min));
  }
}

}  // namespace

TruncatedSeries solve_by_extraction(
    const std::function<TruncatedSeries(const TruncatedSeries&)>& residual,
    const TruncatedSeries& shape) {
  TruncatedSeries m(shape.var(), shape.order(), shape.indeterminates());
  const std::size_t arity = shape.arity();
  for (int n = 0; n <= shape.order(); ++n) {
    m.set(n, PolyCoeff(arity));
    const PolyCoeff c0 = residual(m)[n];
    m.set(n, PolyCoeff::constant(arity, Rational(1)));
    const PolyCoeff c1 = residual(m)[n];
    const PolyCoeff slope = c1 - c0;
    if (!slope.is_constant() || slope.is_zero()) {
      fail(ErrorKind::kDomain, "equation does not determine coefficient " +
                                   std::to_string(n));
    }
    m.set(n, c0 * (Rational(-1) / slope.constant_term()));
  }
  return m;
}

TruncatedSeries solve_riccati(int p, int order, const std::string& var) {
  if (p < 1) fail(ErrorKind::kDomain, "p must be positive");
  require_order(order, 0);
  const TruncatedSeries shape(var, order);
  return solve_by_extraction(
      [&](const TruncatedSeries& M) {
        TruncatedSeries rhs = (M + theta(M)) * Rational(p) + M * M;
        rhs = rhs.plus_constant(Rational(p - 1)).shifted(1);
        return rhs - M;
      },
      shape);
}

TruncatedSeries contfrac_convergent(int p, int depth, int order, const std::string& var) {
  if (p < 1) fail(ErrorKind::kDomain, "p must be positive");
  if (depth < 1) fail(ErrorKind::kDomain, "depth must be >= 1");
  require_order(order, 0);
  const TruncatedSeries one = TruncatedSeries(var, order).plus_constant(Rational(1));
  TruncatedSeries f = one;
  for (int j = depth; j >= 1; --j) {
    const int k = (j + 1) / 2;
    const int a = (j % 2 == 1) ? k * p - 1 : k * p + 1;
    f = invert(one - (f * Rational(a)).shifted(1));
  }
  return f;
}

TruncatedSeries solve_m6_ode(int order) {
  require_order(order, 0);
  const TruncatedSeries shape("g", order);
  return solve_by_extraction(
      [](const TruncatedSeries& M) {
        const TruncatedSeries tM = theta(M);
        // g^2 M' = g tM, g^3 M'' = g (t(tM) - tM)
        TruncatedSeries in = M * Rational(23) + M * M * Rational(9) + M * M * M +
                             tM * Rational(90) + M * tM * Rational(18) +
                             (theta(tM) - tM) * Rational(36);
        in = in.plus_constant(Rational(15)).shifted(1);
        return in - M;
      },
      shape);
}

TruncatedSeries solve_m6_t_form(int order) {
  require_order(order, 0);
  const TruncatedSeries shape("t", order);
  return solve_by_extraction(
      [](const TruncatedSeries& r) {
        const TruncatedSeries tr = theta(r);
        // t^4 r' = t^3 tr, t^5 r'' = t^3 (t(tr) - tr)
        TruncatedSeries in = r * Rational(8) + r * r * Rational(6) + r * r * r +
                             tr * Rational(16) + r * tr * Rational(6) +
                             (theta(tr) - tr) * Rational(4);
        return in.shifted(3).plus_constant(Rational(1)) - r;
      },
      shape);
}

TruncatedSeries solve_ak(int p, int k, int order) {
  if (k < 1) fail(ErrorKind::kDomain, "k must be >= 1");
  require_order(order, 0);
  const TruncatedSeries shape("x", order);
  return solve_by_extraction(
      [&](const TruncatedSeries& A) {
        TruncatedSeries in = (A * Rational(2 * k - 1) + theta(A)) * Rational(p) +
                             A * A * Rational((k - 1) * p + 1);
        return in.plus_constant(Rational(k * p - 1)).shifted(1) - A;
      },
      shape);
}

TruncatedSeries solve_bk(int p, int k, int order) {
  if (k < 1) fail(ErrorKind::kDomain, "k must be >= 1");
  require_order(order, 0);
  const TruncatedSeries shape("x", order);
  return solve_by_extraction(
      [&](const TruncatedSeries& B) {
        TruncatedSeries in = (B * Rational(2 * k) + theta(B)) * Rational(p) +
                             B * B * Rational(k * p - 1);
        return in.plus_constant(Rational(k * p + 1)).shifted(1) - B;
      },
      shape);
}

TowerReport ak_tower_check(int p, int k_max, int order) {
  if (k_max < 1) fail(ErrorKind::kDomain, "k_max must be >= 1");
  TowerReport rep;
  const TruncatedSeries one = TruncatedSeries("x", order).plus_constant(Rational(1));
  auto record = [&](bool ok, const std::string& what) {
    ++rep.checks;
    if (!ok) {
      rep.passed = false;
      rep.failures.push_back(what);
    }
  };
  record(solve_ak(p, 1, order) == solve_riccati(p, order), "A_1 != M");
  TruncatedSeries a = solve_ak(p, 1, order);
  for (int k = 1; k <= k_max; ++k) {
    const TruncatedSeries b = solve_bk(p, k, order);
    const TruncatedSeries next = solve_ak(p, k + 1, order);
    const auto lhs_a = a + one;
    const auto rhs_a = invert(one - ((one + b) * Rational(k * p - 1)).shifted(1));
    record(lhs_a == rhs_a, "1+A_" + std::to_string(k) + " substitution");
    const auto lhs_b = b + one;
    const auto rhs_b = invert(one - ((one + next) * Rational(k * p + 1)).shifted(1));
    record(lhs_b == rhs_b, "1+B_" + std::to_string(k) + " substitution");
    a = next;
  }
  return rep;
}

OdeFamily parse_ode_family(const std::string& name) {
  if (name == "m4") return OdeFamily::kM4;
  if (name == "m3b") return OdeFamily::kM3b;
  if (name == "m3") return OdeFamily::kM3;
  if (name == "m6") return OdeFamily::kM6;
  fail(ErrorKind::kParse, "unknown ODE family '" + name + "' (m4|m3b|m3|m6)");
}

TruncatedSeries solve_family_ode(OdeFamily family, int order) {
  require_order(order, 0);
  switch (family) {
    case OdeFamily::kM4: return solve_riccati(4, order, "g");
    case OdeFamily::kM3b: return solve_riccati(3, order, "g");
    case OdeFamily::kM3:
      // power series in x = g^2
      return solve_riccati(6, order / 2, "x").dilated(2, order, "g");
    case OdeFamily::kM6: return solve_m6_ode(order);
  }
  return TruncatedSeries("g", order);
}

}  // namespace mapgen
