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

#ifndef MAPGEN_RECURSION_HPP
#define MAPGEN_RECURSION_HPP

// Order-by-order solvers for the recursive systems satisfied by the series
// r_i (Eulerian maps, their q-analog and planar specialization), r_i/q_i
// (m-regular bipartite maps) and r_i/s_i (3-regular maps), together with
// the identity checks and face-colored generating functions built on them.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mapgen/pseries.hpp"

namespace mapgen {

/// A walk on the nonnegative integers with +1/-1 steps.
struct DyckPath {
  int start_height = 0;
  std::vector<int> steps;

  int end_height() const;
  /// Starting height of every down-step, in order.
  std::vector<int> descent_heights() const;
  bool nonnegative() const;
};

/// All paths of length 2k-1 from height i to height i-1 that never go below
/// zero, in lexicographic order of their step words (up before down).
std::vector<DyckPath> enumerate_dyck(int k, int i);

/// Vertex weights g_k (weight of a vertex of degree 2k) as polynomials in a
/// declared list of indeterminates.
struct WeightSpec {
  std::vector<std::string> names;
  std::map<int, PolyCoeff> g;

  int max_k() const;
  /// g_k = 1 for the single k with 2k = degree, zero otherwise.
  static WeightSpec regular(int degree);
  /// g_k = the indeterminate "gk" for k = 1..b.
  static WeightSpec symbolic(int b);
  /// Accepts "regular:2k", "symbolic:b" or a list "k=value,..." with
  /// rational values.
  static WeightSpec parse(const std::string& text);
};

enum class LeafWeight { kIntegerHeight, kQAnalog, kPlanarOne };

enum class Family { kEulerian, kEulerianQ, kPlanarR, kBipartite, kThreeRegular };

std::string family_name(Family f);

struct SystemSolution {
  Family family = Family::kEulerian;
  int m = 0;  // bipartite degree
  int order = 0;
  int i_max = 0;
  bool degenerate = false;  // m = 2 bipartite sanity case
  WeightSpec weights;       // Eulerian families only
  std::string var;
  std::vector<std::string> names;
  std::vector<TruncatedSeries> r;  // r[i], i = 0..i_max, r[0] = 0
  std::vector<TruncatedSeries> q;  // bipartite, q[i], i = 0..i_max, q[0] = 0
  std::vector<TruncatedSeries> s;  // 3-regular, s[i], i = 0..i_max
  std::optional<TruncatedSeries> m3;  // r_1 + s_0^2 - 1 for 3-regular

  TruncatedSeries zero() const;
  TruncatedSeries one() const;
  /// r_i with r_i = 0 for i <= 0; range error past i_max.
  const TruncatedSeries& r_at(int i) const;
  TruncatedSeries q_at(int i) const;
  const TruncatedSeries& s_at(int i) const;
};

SystemSolution solve_eulerian(const WeightSpec& weights, int order, int i_max,
                              LeafWeight leaf_weight = LeafWeight::kIntegerHeight);
SystemSolution solve_bipartite(int m, int order, int i_max,
                               bool allow_degenerate = false);
SystemSolution solve_threeregular(int order, int i_max);

enum class Identity {
  kEulerianDerivative,     // 2t r_i' = r_i (r_{i+1} - r_{i-1} - 2)
  kEulerianLogDerivative,  // 2t d/dt Log r_i = r_{i+1} - r_{i-1} - 2
  kCountingF,              // t^2 g2 r_i (r_{i+1}-r_{i-1}-2) = t^2 g2 2t r_i'
  kBipartiteDerivative,    // m g r_i' = r_i (q_{i+1} - q_{i-m+1})
  kBipartiteQDerivative,   // m g q_i' = g (pi_i - pi_{i-1})
  kThreeRegularR,          // 3g r_i' = r_i ((r_{i+1}-r_{i-1}-2) + (s_i^2 - s_{i-1}^2))
  kThreeRegularS,          // 3g^2 s_i' = (r_{i+1} - r_i - 1) - g s_i
};

std::string identity_name(Identity id);

struct IdentityReport {
  Identity identity;
  std::string name;
  int first_index = 0;
  int last_index = 0;
  bool passed = true;
  // (index, first differing order) of each failing instance
  std::vector<std::pair<int, int>> mismatches;
  std::string summary() const;
};

/// Evaluates both sides independently for i = first..i_hi and compares
/// coefficient by coefficient. i_hi < 0 selects the largest index for which
/// every series involved is materialized; an explicit i_hi beyond that is a
/// range error.
IdentityReport check_identity(const SystemSolution& sol, Identity id, int i_hi = -1);

/// Identities applicable to the family of `sol`.
std::vector<Identity> identities_for(const SystemSolution& sol);

/// Degree bound in N of the order-n coefficient of T, used to size the
/// interpolation for symbolic N.
int face_colored_degree_bound(const SystemSolution& sol);
/// Smallest i_max that face_colored_T with symbolic N accepts.
int face_colored_required_i_max(Family family, int m, int order);

/// Face-colored generating function T(N). Computed by the log-derivative
/// formula and by the partial-sum formula; the two must agree (an invariant
/// error otherwise). With N unset the result is a polynomial in an extra
/// indeterminate "N", obtained by exact interpolation over integer N.
TruncatedSeries face_colored_T(const SystemSolution& sol, std::optional<int> N);
/// The two formulas for integer N, returned separately.
std::pair<TruncatedSeries, TruncatedSeries> face_colored_T_both(
    const SystemSolution& sol, int N);
/// Fully-colored version: inverse binomial transform of T(1..N).
TruncatedSeries face_colored_T_tilde(const SystemSolution& sol, int N);

/// An integer sequence with u_{j+1} >= u_j - 1 and a marked position
/// (0-based).
struct MarkedSequence {
  std::vector<int> values;
  int mark = -1;
  bool in_P() const;
  friend bool operator==(const MarkedSequence& a, const MarkedSequence& b) {
    return a.values == b.values && a.mark == b.mark;
  }
};

/// Shifts by -1 the longest run u_m + l, ..., u_m + 1, u_m ending at the
/// mark and moves the mark to its first element.
MarkedSequence phi_bijection(const MarkedSequence& u);
/// Shifts by +1 the longest run u_m, u_m - 1, ... starting at the mark and
/// moves the mark to its last element.
MarkedSequence phi_inverse(const MarkedSequence& u);

}  // namespace mapgen

#endif  // MAPGEN_RECURSION_HPP
