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

#ifndef MAPGEN_ANALYTIC_HPP
#define MAPGEN_ANALYTIC_HPP

// Series solutions of the first-order Riccati equations
//   M = (p-1) x + p x (M + x M') + x M^2,
// their continued-fraction convergents, the auxiliary A_k / B_k tower, and
// the second-order equation for rooted 6-regular maps.

#include <functional>
#include <string>
#include <vector>

#include "mapgen/pseries.hpp"

namespace mapgen {

/// Solves residual(M) = 0 coefficient by coefficient, starting from the
/// zero series shaped like `shape`. The x^n coefficient of the residual
/// must be affine in M_n once M_0..M_{n-1} are fixed, with nonzero slope.
TruncatedSeries solve_by_extraction(
    const std::function<TruncatedSeries(const TruncatedSeries&)>& residual,
    const TruncatedSeries& shape);

TruncatedSeries solve_riccati(int p, int order, const std::string& var = "x");

/// 1/(1 - a_1 x/(1 - a_2 x/(...(1 - a_depth x)))) with a_{2k-1} = kp-1 and
/// a_{2k} = kp+1; approximates 1 + M.
TruncatedSeries contfrac_convergent(int p, int depth, int order,
                                    const std::string& var = "x");

/// M_6(g) from its second-order equation in g.
TruncatedSeries solve_m6_ode(int order);
/// r_1(t) for 6-regular maps from the same equation written in t.
TruncatedSeries solve_m6_t_form(int order);

TruncatedSeries solve_ak(int p, int k, int order);
TruncatedSeries solve_bk(int p, int k, int order);

struct TowerReport {
  bool passed = true;
  int checks = 0;
  std::vector<std::string> failures;
};

/// Checks A_1 = M and both substitutions linking A_k, B_k, A_{k+1}.
TowerReport ak_tower_check(int p, int k_max, int order);

enum class OdeFamily { kM4, kM3b, kM3, kM6 };

OdeFamily parse_ode_family(const std::string& name);
/// The family's generating function in g, from its differential equation.
TruncatedSeries solve_family_ode(OdeFamily family, int order);

}  // namespace mapgen

#endif  // MAPGEN_ANALYTIC_HPP
