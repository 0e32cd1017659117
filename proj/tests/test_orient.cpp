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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "mapgen/error.hpp"
#include "mapgen/oracle.hpp"
#include "mapgen/orient.hpp"

using namespace mapgen;

namespace {

std::vector<CombMap> eulerian_maps(int max_edges) {
  EnumSpec spec;
  spec.max_edges = max_edges;
  return enumerate_rooted(spec);
}

std::vector<CombMap> general_maps(int max_edges) {
  EnumSpec spec;
  spec.family = OracleFamily::kGeneral;
  spec.max_edges = max_edges;
  return enumerate_rooted(spec);
}

// Outdegree sequences realized by some orientation and root-accessible.
std::set<Outdegrees> accessible_alphas(const CombMap& m) {
  std::set<Outdegrees> out;
  const int ne = m.num_edges();
  for (unsigned mask = 0; mask < (1u << ne); ++mask) {
    Orientation o{std::vector<std::uint8_t>(static_cast<std::size_t>(m.n_darts()), 0)};
    for (int e = 0; e < ne; ++e) {
      int d = m.edge_dart(e);
      o.set_tail(m, (mask >> e & 1u) ? m.alpha(d) : d);
    }
    if (is_accessible(m, o, m.root_vertex(), false)) out.insert(outdegrees(m, o));
  }
  return out;
}

}  // namespace

TEST_CASE("feasibility examples") {
  CombMap loop = CombMap::parse("2; (1 2); (1 2); 1");
  auto o = find_alpha_orientation(loop, {1}, false);
  REQUIRE(o);
  CHECK(is_valid_orientation(loop, *o));
  CHECK_FALSE(find_alpha_orientation(loop, {0}, false));
  CHECK(all_alpha_orientations(loop, {1}).size() == 2);
  CHECK_THROWS_AS(find_alpha_orientation(loop, {1, 0}, false), Error);

  for (const CombMap& m : eulerian_maps(5)) {
    auto e = find_alpha_orientation(m, eulerian_alpha(m), false);
    REQUIRE(e);
    CHECK(outdegrees(m, *e) == eulerian_alpha(m));
  }
}

TEST_CASE("accessibility examples") {
  CombMap loop = CombMap::parse("2; (1 2); (1 2); 1");
  Orientation o{{1, 0}};
  CHECK(is_accessible(loop, o, 0, false));
  // an edge between two vertices, each carrying a loop
  CombMap m = CombMap::parse("6; (1 2 3)(4 5 6); (1 4)(2 3)(5 6); 1");
  Orientation away{std::vector<std::uint8_t>(6, 0)};
  away.set_tail(m, 0);
  away.set_tail(m, 1);
  away.set_tail(m, 4);
  CHECK_FALSE(is_accessible(m, away, m.root_vertex(), false));
  CHECK(is_accessible(m, away, m.vertex_of(3), false));

  for (const CombMap& map : eulerian_maps(4)) {
    for (const Orientation& e : all_alpha_orientations(map, eulerian_alpha(map))) {
      for (int v = 0; v < map.num_vertices(); ++v) CHECK(is_accessible(map, e, v, false));
    }
  }
}

TEST_CASE("constructive feasibility agrees with the subset criterion") {
  for (const CombMap& m : general_maps(4)) {
    // every outdegree vector with entries bounded by the degrees
    const int nv = m.num_vertices();
    Outdegrees a(static_cast<std::size_t>(nv), 0);
    for (;;) {
      auto o = find_alpha_orientation(m, a, false);
      bool constructive = o && is_accessible(m, *o, m.root_vertex(), false);
      CHECK(constructive == subset_criterion(m, a));
      int j = 0;
      while (j < nv && ++a[static_cast<std::size_t>(j)] > m.degree(j)) a[static_cast<std::size_t>(j++)] = 0;
      if (j == nv) break;
    }
  }
}

TEST_CASE("minimal orientation examples") {
  CombMap loop = CombMap::parse("2; (1 2); (1 2); 1");
  MinimalResult r = bernardi_minimal(loop, {1});
  CHECK(r.tree_edges.empty());
  CHECK(r.orientation.is_out(0));
  CHECK(r.dart_order == std::vector<int>{0, 1});

  CombMap torus = CombMap::parse("4; (1 2 3 4); (1 3)(2 4); 1");
  MinimalResult t = bernardi_minimal(torus, {2});
  CHECK(phi_orientation(torus, t.tree_edges) == t.orientation);
  CHECK(outdegrees(torus, t.orientation) == Outdegrees{2});
  CHECK(orientation_to_text(torus, t.orientation) == "1 2");

  CHECK_THROWS_AS(bernardi_minimal(loop, {0}), Error);
  // not root-accessible: the only edge leaves the root vertex
  CombMap seg = CombMap::parse("2; (1)(2); (1 2); 1");
  try {
    bernardi_minimal(seg, {1, 0});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kPrecondition);
  }
}

TEST_CASE("traversal covers every dart once") {
  for (const CombMap& m : eulerian_maps(4)) {
    MinimalResult r = bernardi_minimal(m, eulerian_alpha(m));
    std::vector<int> sorted = r.dart_order;
    std::sort(sorted.begin(), sorted.end());
    for (int d = 0; d < m.n_darts(); ++d) CHECK(sorted[static_cast<std::size_t>(d)] == d);
    CHECK(r.dart_order.front() == m.root());
  }
}

TEST_CASE("property: one spanning tree per feasible root-accessible alpha") {
  long instances = 0;
  for (const CombMap& m : general_maps(4)) {
    std::set<Outdegrees> feasible = accessible_alphas(m);
    std::map<Outdegrees, std::vector<std::vector<int>>> by_alpha;
    for (const auto& t : spanning_trees(m)) by_alpha[outdegrees(m, phi_orientation(m, t))].push_back(t);
    // the map T -> outdegrees is a bijection onto the feasible set
    CHECK(by_alpha.size() == feasible.size());
    for (const Outdegrees& a : feasible) {
      auto it = by_alpha.find(a);
      REQUIRE(it != by_alpha.end());
      CHECK(it->second.size() == 1);
      MinimalResult r = bernardi_minimal(m, a);
      CHECK(r.tree_edges == it->second.front());
      ++instances;
    }
  }
  CHECK(instances > 1000);
}

TEST_CASE("property: cycle search order does not matter") {
  for (const CombMap& m : general_maps(4)) {
    for (const Outdegrees& a : accessible_alphas(m)) {
      MinimalResult base = bernardi_minimal(m, a);
      for (unsigned seed = 1; seed <= 20; ++seed) {
        MinimalResult r = bernardi_minimal(m, a, seed);
        CHECK(r.orientation == base.orientation);
        CHECK(r.tree_edges == base.tree_edges);
      }
    }
  }
}

TEST_CASE("property: outgoing prefix at the root survives minimization") {
  for (const CombMap& m : general_maps(4)) {
    const std::vector<int> around = [&] {
      std::vector<int> v;
      int d = m.root();
      do {
        v.push_back(d);
        d = m.sigma(d);
      } while (d != m.root());
      return v;
    }();
    for (const Outdegrees& a : accessible_alphas(m)) {
      MinimalResult r = bernardi_minimal(m, a);
      for (const Orientation& o : all_alpha_orientations(m, a)) {
        std::size_t k = 0;
        while (k < around.size() && o.is_out(around[k])) ++k;
        for (std::size_t j = 0; j < k; ++j) CHECK(r.orientation.is_out(around[j]));
      }
    }
  }
}

TEST_CASE("property: 1-orientations of bipartite maps") {
  for (int black = 1; black <= 2; ++black) {
    for (const CombMap& m : enumerate_bipartite(3, black).maps) {
      Outdegrees a = one_orientation_alpha(m, 3);
      auto all = all_alpha_orientations(m, a);
      REQUIRE_FALSE(all.empty());
      for (const Orientation& o : all) {
        for (int v = 0; v < m.num_vertices(); ++v) CHECK(is_accessible(m, o, v, false));
      }
      MinimalResult r = bernardi_minimal(m, a);
      // each white vertex has one black child; external edges go white to black
      std::vector<int> children(static_cast<std::size_t>(m.num_vertices()), 0);
      for (int e = 0; e < m.num_edges(); ++e) {
        int d = m.edge_dart(e);
        int tail = r.orientation.is_out(d) ? d : m.alpha(d);
        if (r.in_tree(e)) {
          ++children[static_cast<std::size_t>(m.vertex_of(m.alpha(tail)))];
        } else {
          CHECK(m.color_of_vertex(m.vertex_of(tail)) == Color::kWhite);
        }
      }
      for (int v = 0; v < m.num_vertices(); ++v) {
        if (m.color_of_vertex(v) == Color::kWhite) CHECK(children[static_cast<std::size_t>(v)] == 1);
      }
      CHECK_FALSE(r.orientation.is_out(m.sigma_inv(m.root())));
    }
  }
}

TEST_CASE("canonical orientation of marked maps") {
  CombMap two_loops = CombMap::parse("4; (1 2 3 4); (1 2)(3 4); 1");
  CHECK(canonical_marked_orientation(two_loops, {2}).orientation ==
        bernardi_minimal(two_loops, {2}).orientation);

  CombMap marked = two_loops.with_marks({{3, 2, 1}});
  ReducedMap red = delete_marked_edges(marked);
  CHECK(red.map.n_darts() == 2);
  CHECK(red.map.num_faces() == 2);
  MinimalResult r = canonical_marked_orientation(marked, {2});
  CHECK(r.orientation.is_out(3));
  CHECK(r.orientation.is_out(0));
  CHECK(r.tree_edges.empty());

  // all loops marked leaves the vertex map
  CombMap all = CombMap::parse("2; (1 2); (1 2); 1; -; (1,2,1)");
  MinimalResult v = canonical_marked_orientation(all, {1});
  CHECK(v.orientation.is_out(0));

  EnumSpec spec;
  spec.max_edges = 3;
  std::vector<CombMap> base = enumerate_rooted(spec);
  long seen = 0;
  for (int a = 1; a <= 2; ++a) {
    for (const CombMap& m : enumerate_marked_admissible(base, a, OracleFamily::kEulerian)) {
      MinimalResult c = canonical_marked_orientation(m, eulerian_alpha(m));
      CHECK(c.orientation.is_out(m.root()));
      CHECK(respects_marks(m, c.orientation));
      for (int e : c.tree_edges) CHECK_FALSE(m.is_marked(e));
      ++seen;
    }
  }
  CHECK(seen > 50);
}

TEST_CASE("admissibility") {
  CombMap two_loops = CombMap::parse("4; (1 2 3 4); (1 2)(3 4); 1");
  CHECK(is_admissible_eulerian(two_loops.with_marks({{0, 1, 1}})));
  CHECK_FALSE(is_admissible_eulerian(two_loops.with_marks({{1, 0, 1}})));
  CHECK(is_admissible_eulerian(two_loops.with_marks({{2, 3, 1}})));
  // two vertices joined by two edges: marking both cuts the return path
  CombMap dig = CombMap::parse("4; (1 2)(3 4); (1 4)(2 3); 1");
  CHECK(is_admissible_eulerian(dig));
  CHECK_FALSE(is_admissible_eulerian(dig.with_marks({{0, 3, 1}, {1, 2, 1}})));
  CHECK(is_admissible_eulerian(dig.with_marks({{0, 3, 1}})));
  CHECK_FALSE(is_admissible_eulerian(dig.with_marks({{3, 0, 1}})));

  for (const CombMap& m : enumerate_bipartite(3, 1).maps) {
    CHECK(is_admissible_bipartite(m, 3));
    // the edge before the root corner can not carry a mark
    int last = m.sigma_inv(m.root());
    CHECK_FALSE(is_admissible_bipartite(m.with_marks({{last, m.alpha(last), 1}}), 3));
    CHECK_FALSE(is_admissible_bipartite(m.with_marks({{m.alpha(last), last, 1}}), 3));
  }
}
