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

#ifndef MAPGEN_CMAP_HPP
#define MAPGEN_CMAP_HPP

// Rooted combinatorial maps as a pair of permutations on darts: sigma turns
// clockwise around a vertex, alpha swaps the two darts of an edge. Faces are
// the cycles of d -> sigma(alpha(d)). Darts are 0-based in memory and
// 1-based in the text form.

#include <cstdint>
#include <string>
#include <vector>

namespace mapgen {

enum class Color : std::uint8_t { kWhite, kBlack };

/// A marked edge with its fixed direction and multiplicity.
struct Mark {
  int out = -1;  // dart at the tail
  int in = -1;   // dart at the head
  int mult = 1;
  friend bool operator==(const Mark&, const Mark&) = default;
};

class CombMap {
 public:
  /// The single-vertex map without edges (image of the nodeless tree).
  CombMap() = default;

  /// Validates and builds. `colors` is indexed by vertex (vertices ordered by
  /// smallest dart) and may be empty.
  static CombMap build(std::vector<int> sigma, std::vector<int> alpha, int root,
                       std::vector<Color> colors = {}, std::vector<Mark> marks = {});

  bool is_vertex_map() const { return sigma_.empty(); }
  int n_darts() const { return static_cast<int>(sigma_.size()); }
  int sigma(int d) const { return sigma_[static_cast<std::size_t>(d)]; }
  int sigma_inv(int d) const { return sigma_inv_[static_cast<std::size_t>(d)]; }
  int alpha(int d) const { return alpha_[static_cast<std::size_t>(d)]; }
  int face_next(int d) const { return sigma(alpha(d)); }
  int root() const { return root_; }
  const std::vector<int>& sigma_perm() const { return sigma_; }
  const std::vector<int>& alpha_perm() const { return alpha_; }

  int num_vertices() const { return is_vertex_map() ? 1 : static_cast<int>(vertex_first_.size()); }
  int num_edges() const { return n_darts() / 2; }
  int num_faces() const { return num_faces_; }
  int genus() const { return genus_; }

  int vertex_of(int d) const { return vertex_of_[static_cast<std::size_t>(d)]; }
  int root_vertex() const { return is_vertex_map() ? 0 : vertex_of(root_); }
  int degree(int v) const;
  /// Darts around v clockwise, starting from its smallest dart.
  std::vector<int> darts_around(int v) const;
  /// Edges are numbered by their smallest dart.
  int edge_of(int d) const { return edge_of_[static_cast<std::size_t>(d)]; }
  int edge_dart(int e) const { return edge_dart_[static_cast<std::size_t>(e)]; }

  bool has_colors() const { return !colors_.empty(); }
  const std::vector<Color>& colors() const { return colors_; }
  Color color_of_vertex(int v) const { return colors_[static_cast<std::size_t>(v)]; }

  const std::vector<Mark>& marks() const { return marks_; }
  bool has_marks() const { return !marks_.empty(); }
  /// Index into marks() of the mark on edge e, or -1.
  int mark_index(int e) const { return mark_of_edge_[static_cast<std::size_t>(e)]; }
  bool is_marked(int e) const { return mark_index(e) >= 0; }

  /// Sorted vertex degrees.
  std::vector<int> degree_profile() const;
  bool is_eulerian() const;
  /// Proper 2-coloring, all degrees m, root vertex white.
  bool is_bipartite_regular(int m) const;

  /// Dart d becomes perm[d].
  CombMap relabeled(const std::vector<int>& perm) const;
  /// Labels from a breadth-first search at the root, sigma before alpha.
  std::vector<int> canonical_labels() const;
  CombMap canonical() const { return relabeled(canonical_labels()); }

  CombMap with_root(int d) const;
  CombMap with_marks(std::vector<Mark> marks) const;
  CombMap with_colors(std::vector<Color> colors) const;
  /// The proper 2-coloring with the root vertex white, if one exists.
  CombMap with_bipartite_colors() const;

  std::string to_text() const;
  static CombMap parse(const std::string& text);

  friend bool operator==(const CombMap& a, const CombMap& b) {
    return a.sigma_ == b.sigma_ && a.alpha_ == b.alpha_ && a.root_ == b.root_ &&
           a.colors_ == b.colors_ && a.sorted_marks() == b.sorted_marks();
  }

 private:
  void derive();
  std::vector<Mark> sorted_marks() const;

  std::vector<int> sigma_, sigma_inv_, alpha_;
  int root_ = 0;
  std::vector<Color> colors_;
  std::vector<Mark> marks_;

  std::vector<int> vertex_of_, vertex_first_, edge_of_, edge_dart_, mark_of_edge_;
  int num_faces_ = 1;
  int genus_ = 0;
};

bool rooted_isomorphic(const CombMap& a, const CombMap& b);

/// out[d] is 1 when dart d is the tail of its edge.
struct Orientation {
  std::vector<std::uint8_t> out;

  bool is_out(int d) const { return out[static_cast<std::size_t>(d)] != 0; }
  void set_tail(const CombMap& m, int d);
  void reverse(const CombMap& m, int d);
  friend bool operator==(const Orientation&, const Orientation&) = default;
};

bool is_valid_orientation(const CombMap& m, const Orientation& o);
std::vector<int> outdegrees(const CombMap& m, const Orientation& o);
bool respects_marks(const CombMap& m, const Orientation& o);
/// Tail darts in increasing order, 1-based, e.g. "1 4 6".
std::string orientation_to_text(const CombMap& m, const Orientation& o);

}  // namespace mapgen

#endif  // MAPGEN_CMAP_HPP
