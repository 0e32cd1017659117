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

#ifndef MAPGEN_ORACLE_HPP
#define MAPGEN_ORACLE_HPP

// Brute-force enumeration of rooted maps by gluing vertex stars, used as
// ground truth for the series and the bijections.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mapgen/cmap.hpp"
#include "mapgen/pseries.hpp"

namespace mapgen {

/// Largest edge count the oracle accepts: MAPGEN_MAX_EDGES if set, else 6.
int oracle_edge_cap();

enum class OracleFamily { kEulerian, kBipartite, kGeneral };

struct EnumSpec {
  OracleFamily family = OracleFamily::kEulerian;
  int m = 3;                                // bipartite degree
  std::optional<std::vector<int>> profile;  // degrees; all profiles up to max_edges if unset
  int max_edges = 4;                        // bipartite: edges = m * black vertices
  std::optional<int> genus;
};

/// The rooted maps of one degree profile, with the gluing statistics used
/// by the orbit-counting check.
struct ProfileEnumeration {
  std::vector<int> profile;  // sorted
  std::vector<CombMap> maps;  // canonical, in a fixed order
  long gluings = 0;
  long connected_gluings = 0;
  BigInt quotient_count;  // rooted maps predicted from connected_gluings
  bool quotient_ok() const { return quotient_count == BigInt(static_cast<long>(maps.size())); }
};

ProfileEnumeration enumerate_profile(const std::vector<int>& degrees);
/// m-regular bipartite maps with `black` black and `black` white vertices,
/// rooted at a white dart, colored.
ProfileEnumeration enumerate_bipartite(int m, int black);

/// Partitions of 2E into even parts (Eulerian) or positive parts (general),
/// each sorted increasingly.
std::vector<std::vector<int>> profiles_for(OracleFamily family, int edges);

/// Every rooted map matching the spec, each once, in deterministic order.
std::vector<CombMap> enumerate_rooted(const EnumSpec& spec);

struct CountKey {
  int edges = 0;
  std::vector<int> profile;
  int genus = 0;
  int faces = 0;
  int marks = 0;
  auto operator<=>(const CountKey&) const = default;
};
using CountTable = std::map<CountKey, BigInt>;

CountTable count_table(const std::vector<CombMap>& maps);
/// Columns: E, profile, genus, F, marks, value.
std::string count_table_tsv(const CountTable& table);

/// Per-profile totals compared with a series in t whose coefficients are
/// polynomials in g1..gb (Eulerian) or a series in g (bipartite, edges/m).
struct SeriesComparison {
  bool passed = true;
  int checked = 0;
  std::vector<std::string> mismatches;
};
SeriesComparison compare_counts(const CountTable& table, const TruncatedSeries& series,
                                OracleFamily family, int m = 3);

/// Exponent vector over g1..gb of a degree profile.
Exponents profile_exponents(const std::vector<int>& profile, std::size_t arity);

/// Marked admissible maps obtained from each base map by marking `marks`
/// edges in every direction.
struct MarkedCounts {
  long total = 0;          // u
  long root_unmarked = 0;  // v
  long root_marked = 0;    // w
  long weighted = 0;       // u-tilde
};
std::vector<CombMap> enumerate_marked_admissible(const std::vector<CombMap>& base, int marks,
                                                 OracleFamily family, int m = 3);
/// Eulerian: root-marked maps count twice. Bipartite: each map counts
/// root-index times.
MarkedCounts marked_counts(const std::vector<CombMap>& marked, OracleFamily family);
/// Smallest p with the (p-1)-th edge around the root vertex unmarked.
int root_index(const CombMap& m);

/// Number of colorings of the faces with N colors (all of them if
/// surjective is false, onto colorings otherwise). Inclusion-exclusion.
BigInt face_colorings(int faces, int N, bool surjective);
/// The same count by listing colorings.
BigInt face_colorings_explicit(int faces, int N, bool surjective);
/// Sum of face_colorings over the maps.
BigInt face_colored_total(const std::vector<CombMap>& maps, int N, bool surjective);

/// (2n-1)!! sum_{a=1}^N C(N,a) C(n,a-1) 2^{a-1}.
BigInt harer_zagier(int n, int N);
/// m! sum_{a=1}^m C(N,a) C(m,a-1).
BigInt two_vertex_bipartite(int m, int N);

BigInt binomial(int n, int k);

}  // namespace mapgen

#endif  // MAPGEN_ORACLE_HPP
