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

#ifndef MAPGEN_BLOSSOM_HPP
#define MAPGEN_BLOSSOM_HPP

// Blossoming trees and the closure/opening bijections with rooted maps.
//
// Text form of a tree: the word of the root leaf's only neighbour. A node is
// "(" followed by its children in clockwise order after the parent edge and
// ")". Leaves are "o" (opening) and "c" (closing), a closing leaf optionally
// followed by its matching index, e.g. "c2". A closing leaf in a marked pair
// is written "c*k" where k numbers its opening partner among the opening
// leaves in walk order (the root leaf is 0), followed by "xμ" when the
// multiplicity μ is not 1. Reading the word left to right is the clockwise
// walk around the tree. "(oc1c0)" is the one-vertex toral map; "c0" is the
// nodeless tree.

#include <optional>
#include <string>
#include <vector>

#include "mapgen/cmap.hpp"
#include "mapgen/recursion.hpp"

namespace mapgen {

enum class TreeFamily { kEulerian, kBipartite };

class BlossomTree {
 public:
  enum class Kind : std::uint8_t { kNode, kOpening, kClosing };
  struct Vertex {
    Kind kind = Kind::kNode;
    int parent = -1;
    std::vector<int> children;
    int iota = -1;         // closing leaf: matching index, -1 if unset
    int marked_with = -1;  // closing leaf: opening number of its marked partner
    int mult = 1;
  };

  /// Root leaf plus one closing leaf.
  static BlossomTree nodeless(int iota = 0);
  static BlossomTree parse(const std::string& text);
  std::string to_text() const;

  const std::vector<Vertex>& vertices() const { return v_; }
  const Vertex& at(int x) const { return v_[static_cast<std::size_t>(x)]; }
  Vertex& at(int x) { return v_[static_cast<std::size_t>(x)]; }
  int size() const { return static_cast<int>(v_.size()); }

  /// Vertex 0 is the root leaf; its only child is the root node or, in the
  /// nodeless tree, a closing leaf.
  int top() const { return at(0).children.front(); }
  bool is_nodeless() const { return at(top()).kind != Kind::kNode; }
  bool is_leaf(int x) const { return at(x).kind != Kind::kNode; }

  /// Nodes in preorder.
  std::vector<int> nodes() const;
  int num_nodes() const;
  int degree(int node) const { return static_cast<int>(at(node).children.size()) + 1; }
  /// Sorted node degrees.
  std::vector<int> node_degrees() const;
  /// Half the total node degree.
  int half_degree() const;
  /// Leaves in clockwise order from the root leaf, root leaf first.
  std::vector<int> leaves() const;
  /// Opening leaves in walk order; position = opening number.
  std::vector<int> openings() const;
  int depth(int x) const;
  /// White for nodes at even depth from the root node.
  Color node_color(int node) const { return depth(node) % 2 == 1 ? Color::kWhite : Color::kBlack; }
  int num_marked() const;
  bool all_indices_set() const;

  bool is_eulerian() const;
  /// Shape of an m-bipartite tree.
  bool is_bipartite(int m) const;
  /// The black child of the root node is its last child.
  bool root_black_child_last() const;

  /// Appends a vertex under `parent` (-1 only for the root leaf).
  int add(Kind kind, int parent);

  friend bool operator==(const BlossomTree& a, const BlossomTree& b) {
    return a.to_text() == b.to_text();
  }

 private:
  std::vector<Vertex> v_;
};

/// Leaf path started at height i.
struct LeafPath {
  DyckPath path;
  std::vector<int> closing_leaves;  // walk order
  std::vector<int> heights;         // i-height of each closing leaf
  bool balanced = false;            // i-balanced
};
LeafPath leaf_path(const BlossomTree& t, int i);

struct LeafPair {
  int opening = -1;
  int closing = -1;
  bool marked = false;
  int mult = 1;
  friend bool operator==(const LeafPair&, const LeafPair&) = default;
};
/// Pairs sorted by the walk position of the closing leaf.
struct ForwardMatching {
  std::vector<LeafPair> pairs;
  friend bool operator==(const ForwardMatching&, const ForwardMatching&) = default;
};

/// Unmarked closing leaf of height h (opening leaves before it, unmatched
/// and not in marked pairs) with index ι takes the (h-ι)-th of those
/// openings counted from the first.
ForwardMatching indices_to_matching(const BlossomTree& t);
/// Writes matching indices and marks from a matching into a copy of t.
BlossomTree matching_to_indices(const BlossomTree& t, const ForwardMatching& f);

/// Rooted map with the canonical orientation of the closure, before
/// canonical relabeling. Darts are numbered node by node in preorder, each
/// node's parent slot first; dart 0 is the root.
struct Closure {
  CombMap map;
  Orientation orientation;
  std::vector<int> tree_edges;
  std::vector<int> node_base;  // first dart of each tree vertex, -1 for leaves
};
Closure close_raw(const BlossomTree& t, const ForwardMatching& f, TreeFamily family, int m = 3);

/// The closure, canonically relabeled. The nodeless tree gives the vertex
/// map.
CombMap close_tree(const BlossomTree& t, const ForwardMatching& f, TreeFamily family, int m = 3);
CombMap close_tree(const BlossomTree& t, TreeFamily family, int m = 3);

struct Opened {
  BlossomTree tree;  // with matching indices and marks
  ForwardMatching matching;
};
/// Cuts the external edges of the canonical orientation. Marked maps must be
/// admissible.
Opened open_map(const CombMap& m, TreeFamily family, int mdeg = 3);

struct PlanarForm {
  CombMap planar;   // with crossing vertices, canonical
  int crossings = 0;
  CombMap reduced;  // crossing vertices removed, canonical
};
/// Leaf extension at every closing leaf, planar closure, and reduction.
PlanarForm planar_close(const BlossomTree& t);

/// From an i-enriched tree to the marked tree with multiplicities.
BlossomTree i_enrich_to_marked(const BlossomTree& t, int i);
/// Inverse of i_enrich_to_marked.
BlossomTree marked_to_i_enrich(const BlossomTree& t, int i);

/// Eulerian trees with the given half-degree, matching indices unset.
std::vector<BlossomTree> eulerian_trees(int half_degree, int max_node_degree);
/// m-bipartite trees with the given number of black nodes.
std::vector<BlossomTree> bipartite_trees(int m, int black);
/// Every assignment of matching indices for which the tree is i-balanced.
std::vector<BlossomTree> enrichments(const BlossomTree& t, int i);
/// Product of the i-heights, zero if not i-balanced.
long enrichment_count(const BlossomTree& t, int i);

}  // namespace mapgen

#endif  // MAPGEN_BLOSSOM_HPP
