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

#ifndef MAPGEN_ORIENT_HPP
#define MAPGEN_ORIENT_HPP

// Orientations with prescribed outdegrees, the minimal orientation and its
// spanning tree, and the canonical orientation of a marked map.

#include <optional>
#include <vector>

#include "mapgen/cmap.hpp"

namespace mapgen {

/// Prescribed outdegree per vertex, indexed like CombMap vertices.
using Outdegrees = std::vector<int>;

/// Half-degrees.
Outdegrees eulerian_alpha(const CombMap& m);
/// White m-1, black 1. Colors are taken from the map, or from the proper
/// 2-coloring with the root white if the map has none.
Outdegrees one_orientation_alpha(const CombMap& m, int mdeg);

/// Some alpha-orientation, or nullopt. With respect_marks the marked edges
/// keep their direction. Every dart in forced_tails is made outgoing.
std::optional<Orientation> find_alpha_orientation(const CombMap& m, const Outdegrees& alpha,
                                                  bool respect_marks,
                                                  const std::vector<int>& forced_tails = {});

/// Every vertex reaches `target` along the orientation.
bool is_accessible(const CombMap& m, const Orientation& o, int target, bool avoid_marks);

/// Exponential check: sum alpha = E, alpha(S) >= |E_S| for every S, strictly
/// when S is nonempty and avoids the root vertex. Refuses maps with more than
/// 12 vertices.
bool subset_criterion(const CombMap& m, const Outdegrees& alpha);

/// Every orientation of m with the given outdegrees. Small maps only.
std::vector<Orientation> all_alpha_orientations(const CombMap& m, const Outdegrees& alpha);

struct MinimalResult {
  Orientation orientation;
  std::vector<int> tree_edges;  // sorted edge ids
  std::vector<int> dart_order;  // clockwise walk around the tree from the root corner

  bool in_tree(int e) const;
};

bool is_spanning_tree(const CombMap& m, const std::vector<int>& edges);
/// All spanning trees as sorted edge lists. Small maps only.
std::vector<std::vector<int>> spanning_trees(const CombMap& m);

/// Walk around the tree from the root corner.
std::vector<int> tree_walk(const CombMap& m, const std::vector<int>& tree_edges);
/// Tree edges toward the root, external edges outgoing at their first half.
Orientation phi_orientation(const CombMap& m, const std::vector<int>& tree_edges);

/// The minimal alpha-orientation. Marks are ignored. A seed shuffles the
/// order in which directed cycles are searched.
MinimalResult bernardi_minimal(const CombMap& m, const Outdegrees& alpha,
                               std::optional<unsigned> seed = std::nullopt);

/// The map with the marked edges deleted.
struct ReducedMap {
  CombMap map;
  std::vector<int> to_reduced;   // dart of m -> dart of map, -1 if deleted
  std::vector<int> from_reduced;  // dart of map -> dart of m
};
ReducedMap delete_marked_edges(const CombMap& m);

/// Minimal orientation of the unmarked part, with the marked edges restored.
/// The tree is a spanning tree of the unmarked part; dart_order walks the
/// whole map.
MinimalResult canonical_marked_orientation(const CombMap& m, const Outdegrees& alpha,
                                           std::optional<unsigned> seed = std::nullopt);

/// A compatible Eulerian orientation exists which is root-accessible avoiding
/// marks and has the root dart outgoing.
bool is_admissible_eulerian(const CombMap& m);
/// A compatible root-accessible 1-orientation exists in which the only
/// ingoing dart at the root vertex precedes the root dart.
bool is_admissible_bipartite(const CombMap& m, int mdeg);

}  // namespace mapgen

#endif  // MAPGEN_ORIENT_HPP
