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

#include <functional>
#include <numeric>
#include <set>

#include "doctest.h"
#include "mapgen/blossom.hpp"
#include "mapgen/error.hpp"
#include "mapgen/oracle.hpp"
#include "mapgen/orient.hpp"
#include "mapgen/recursion.hpp"

using namespace mapgen;

namespace {

using Kind = BlossomTree::Kind;

std::vector<CombMap> eulerian_maps(int edges) {
  EnumSpec spec;
  spec.max_edges = edges;
  return enumerate_rooted(spec);
}

std::vector<CombMap> bipartite_maps(int m, int black) {
  EnumSpec spec;
  spec.family = OracleFamily::kBipartite;
  spec.m = m;
  spec.max_edges = m * black;
  return enumerate_rooted(spec);
}

int iota_sum(const BlossomTree& t) {
  int s = 0;
  for (const auto& v : t.vertices()) {
    if (v.kind == Kind::kClosing && v.iota > 0) s += v.iota;
  }
  return s;
}

Exponents tree_exponents(const BlossomTree& t, const std::vector<std::string>& names, int q) {
  Exponents e(names.size(), 0);
  for (int d : t.node_degrees()) {
    auto it = std::find(names.begin(), names.end(), "g" + std::to_string(d / 2));
    REQUIRE(it != names.end());
    ++e[static_cast<std::size_t>(it - names.begin())];
  }
  auto it = std::find(names.begin(), names.end(), "q");
  if (it != names.end()) e[static_cast<std::size_t>(it - names.begin())] = q;
  return e;
}

int error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return static_cast<int>(e.kind());
  }
  return -1;
}

}  // namespace

TEST_CASE("tree words") {
  for (const char* w : {"c", "c3", "(oc1c0)", "(c*0oc)", "(c*0x3oc)", "((ooc)cc)", "(o(oc0c1)c2)"}) {
    CHECK(BlossomTree::parse(w).to_text() == w);
  }
  BlossomTree t = BlossomTree::parse(" ( o c1 c0 ) ");
  CHECK(t.size() == 5);
  CHECK(t.num_nodes() == 1);
  CHECK(t.half_degree() == 2);
  CHECK(t.is_eulerian());
  CHECK(BlossomTree::nodeless(2).to_text() == "c2");
  CHECK(BlossomTree::parse("c").is_nodeless());
  for (const char* bad : {"", "o", "()", "(oc", "(oc))", "(ocx)", "c*", "(c*1x0)"}) {
    CHECK_MESSAGE(error_kind([&] { BlossomTree::parse(bad); }) == static_cast<int>(ErrorKind::kParse), bad);
  }
}

TEST_CASE("leaf paths") {
  LeafPath n = leaf_path(BlossomTree::parse("c"), 1);
  CHECK(n.balanced);
  CHECK(n.heights == std::vector<int>{1});

  BlossomTree t = BlossomTree::parse("(cco)");
  CHECK_FALSE(leaf_path(t, 1).balanced);
  CHECK(leaf_path(t, 2).heights == std::vector<int>{2, 1});
  LeafPath p3 = leaf_path(t, 3);
  CHECK(p3.balanced);
  CHECK(p3.heights == std::vector<int>{3, 2});
  CHECK(p3.path.steps == std::vector<int>{-1, -1, 1});
  CHECK(p3.path.end_height() == 2);
  CHECK(enrichment_count(t, 3) == 6);
  CHECK(enrichment_count(t, 1) == 0);
  CHECK(enrichments(t, 3).size() == 6);
}

TEST_CASE("matching indices") {
  BlossomTree t = BlossomTree::parse("(oc1c0)");
  ForwardMatching f = indices_to_matching(t);
  REQUIRE(f.pairs.size() == 2);
  // leaves: root 0, node 1, o 2, c 3, c 4
  CHECK(f.pairs[0].opening == 0);
  CHECK(f.pairs[0].closing == 3);
  CHECK(f.pairs[1].opening == 2);
  CHECK(f.pairs[1].closing == 4);
  CHECK(matching_to_indices(BlossomTree::parse("(occ)"), f) == t);

  BlossomTree m = BlossomTree::parse("(c*0oc0)");
  ForwardMatching fm = indices_to_matching(m);
  REQUIRE(fm.pairs.size() == 2);
  CHECK(fm.pairs[0].marked);
  CHECK(fm.pairs[0].opening == 0);
  CHECK(fm.pairs[1].opening == 3);

  CHECK(error_kind([] { indices_to_matching(BlossomTree::parse("(oc2c0)")); }) ==
        static_cast<int>(ErrorKind::kDomain));
  CHECK(error_kind([] { indices_to_matching(BlossomTree::parse("(c*0oc*0)")); }) ==
        static_cast<int>(ErrorKind::kDomain));
}

TEST_CASE("closure examples") {
  CHECK(close_tree(BlossomTree::parse("c0"), TreeFamily::kEulerian).is_vertex_map());
  CombMap loop = close_tree(BlossomTree::parse("(oc0c0)"), TreeFamily::kEulerian);
  CHECK(loop.num_vertices() == 1);
  CHECK(loop.num_edges() == 2);
  CHECK(loop.genus() == 0);
  CombMap torus = close_tree(BlossomTree::parse("(oc1c0)"), TreeFamily::kEulerian);
  CHECK(torus.genus() == 1);
  CHECK(torus.num_faces() == 1);

  // the three one-vertex maps of degree 4
  std::set<std::string> seen;
  for (const auto& t : enrichments(BlossomTree::parse("(occ)"), 1)) {
    CHECK(seen.insert(close_tree(t, TreeFamily::kEulerian).to_text()).second);
  }
  CHECK(seen.size() == 2);
  seen.clear();
  for (const auto& tree : eulerian_trees(2, 4)) {
    for (const auto& t : enrichments(tree, 1)) seen.insert(close_tree(t, TreeFamily::kEulerian).to_text());
  }
  std::set<std::string> single;
  for (const CombMap& m : enumerate_profile({4}).maps) single.insert(m.to_text());
  for (const auto& s : single) CHECK(seen.count(s) == 1);

  CombMap single_loop = close_tree(BlossomTree::parse("(c0)"), TreeFamily::kEulerian);
  CHECK(single_loop == CombMap::parse("2; (1 2); (1 2); 1").canonical());

  // theta graph with m = 3: planar and toral closures
  CombMap planar = close_tree(BlossomTree::parse("(o(c0c0))"), TreeFamily::kBipartite, 3);
  CHECK(planar.genus() == 0);
  CHECK(planar.is_bipartite_regular(3));
  CHECK(planar.colors().front() == Color::kWhite);
  bool toral = false;
  for (const auto& t : enrichments(BlossomTree::parse("(o(cc))"), 1)) {
    toral = toral || close_tree(t, TreeFamily::kBipartite, 3).genus() == 1;
  }
  CHECK(toral);
}

TEST_CASE("tree shape errors") {
  CHECK(error_kind([] { close_tree(BlossomTree::parse("(oc0)"), TreeFamily::kEulerian); }) ==
        static_cast<int>(ErrorKind::kDomain));
  CHECK(error_kind([] { close_tree(BlossomTree::parse("(occ)"), TreeFamily::kBipartite, 3); }) ==
        static_cast<int>(ErrorKind::kDomain));
  // marked pair with the black child first
  CHECK(error_kind([] { close_tree(BlossomTree::parse("((c*0c)o)"), TreeFamily::kBipartite, 3); }) ==
        static_cast<int>(ErrorKind::kPrecondition));
  CHECK(error_kind([] { open_map(CombMap::parse("2; (1 2); (1 2); 1"), TreeFamily::kBipartite, 3); }) ==
        static_cast<int>(ErrorKind::kDomain));
  CHECK(error_kind([] { open_map(CombMap::parse("2; (1)(2); (1 2); 1"), TreeFamily::kEulerian, 0); }) ==
        static_cast<int>(ErrorKind::kDomain));
}

TEST_CASE("Eulerian maps and enriched trees, up to 4 edges") {
  std::vector<CombMap> maps = eulerian_maps(4);
  std::map<int, long> by_edges;
  for (const CombMap& m : maps) {
    ++by_edges[m.num_edges()];
    Opened o = open_map(m, TreeFamily::kEulerian);
    CHECK(o.tree.is_eulerian());
    CHECK(o.tree.half_degree() == m.num_edges());
    CHECK(o.tree.node_degrees() == m.degree_profile());
    CHECK(close_tree(o.tree, TreeFamily::kEulerian) == m.canonical());
    CHECK(close_tree(o.tree, o.matching, TreeFamily::kEulerian) == m.canonical());
    CHECK((m.genus() == 0) == (iota_sum(o.tree) == 0));
  }
  for (int e = 1; e <= 4; ++e) {
    long trees = 0;
    std::set<std::string> images;
    for (const auto& tree : eulerian_trees(e, 2 * e)) {
      CHECK(tree.is_eulerian());
      for (const auto& t : enrichments(tree, 1)) {
        ++trees;
        CombMap m = close_tree(t, TreeFamily::kEulerian);
        images.insert(m.to_text());
        CHECK(open_map(m, TreeFamily::kEulerian).tree == t);
      }
    }
    CHECK(trees == by_edges[e]);
    CHECK(static_cast<long>(images.size()) == trees);
  }
}

TEST_CASE("enriched trees against r_1") {
  SystemSolution sol = solve_eulerian(WeightSpec::symbolic(4), 4, 2);
  const auto& names = sol.r_at(1).indeterminates();
  for (int e = 1; e <= 4; ++e) {
    std::map<Exponents, long> count;
    for (const auto& tree : eulerian_trees(e, 8)) count[tree_exponents(tree, names, 0)] += enrichment_count(tree, 1);
    const PolyCoeff& c = sol.r_at(1)[e];
    CHECK(c.terms().size() == count.size());
    for (const auto& [ex, n] : count) CHECK(c.coefficient(ex) == Rational(n));
  }
}

TEST_CASE("bipartite maps and enriched trees") {
  for (int m : {3, 4}) {
    const int bmax = m == 3 ? 2 : 1;
    for (const CombMap& map : bipartite_maps(m, bmax)) {
      Opened o = open_map(map, TreeFamily::kBipartite, m);
      CHECK(o.tree.is_bipartite(m));
      CHECK(close_tree(o.tree, TreeFamily::kBipartite, m) == map.canonical());
      CHECK((map.genus() == 0) == (iota_sum(o.tree) == 0));
    }
    for (int b = 1; b <= bmax; ++b) {
      long n = 0;
      std::set<std::string> images;
      for (const auto& tree : bipartite_trees(m, b)) {
        CHECK(tree.is_bipartite(m));
        for (const auto& t : enrichments(tree, 1)) {
          ++n;
          CombMap map = close_tree(t, TreeFamily::kBipartite, m);
          CHECK(map.is_bipartite_regular(m));
          images.insert(map.to_text());
          CHECK(open_map(map, TreeFamily::kBipartite, m).tree == t);
        }
      }
      CHECK(static_cast<long>(images.size()) == n);
      long direct = 0;
      for (const CombMap& map : bipartite_maps(m, b)) direct += map.num_edges() == m * b;
      CHECK(n == direct);
    }
  }
  SystemSolution sol = solve_bipartite(3, 3, 2);
  for (int b = 1; b <= 3; ++b) {
    long n = 0;
    for (const auto& tree : bipartite_trees(3, b)) n += enrichment_count(tree, 1);
    CHECK(sol.r_at(1)[b].coefficient({}) == Rational(n));
  }
}

TEST_CASE("marked maps round trip") {
  std::vector<CombMap> base = eulerian_maps(3);
  for (int a = 1; a <= 2; ++a) {
    for (const CombMap& m : enumerate_marked_admissible(base, a, OracleFamily::kEulerian)) {
      Opened o = open_map(m, TreeFamily::kEulerian);
      CHECK(o.tree.num_marked() == a);
      CHECK(close_tree(o.tree, TreeFamily::kEulerian) == m.canonical());
    }
  }
  for (const CombMap& m : enumerate_marked_admissible(bipartite_maps(3, 2), 1, OracleFamily::kBipartite, 3)) {
    Opened o = open_map(m, TreeFamily::kBipartite, 3);
    CHECK(o.tree.root_black_child_last());
    CHECK(close_tree(o.tree, TreeFamily::kBipartite, 3) == m.canonical());
  }
}

TEST_CASE("planar form") {
  BlossomTree t = BlossomTree::parse("(oc1c0)");
  PlanarForm p = planar_close(t);
  CHECK(p.crossings == 1);
  CHECK(p.planar.genus() == 0);
  CHECK(p.reduced == close_tree(t, TreeFamily::kEulerian));

  SystemSolution qs = solve_eulerian(WeightSpec::symbolic(3), 3, 2, LeafWeight::kQAnalog);
  const auto& names = qs.r_at(1).indeterminates();
  for (int e = 1; e <= 3; ++e) {
    std::map<Exponents, long> count;
    for (const auto& tree : eulerian_trees(e, 6)) {
      for (const auto& en : enrichments(tree, 1)) {
        PlanarForm pf = planar_close(en);
        CHECK(pf.crossings == iota_sum(en));
        CHECK(pf.planar.genus() == 0);
        count[tree_exponents(tree, names, pf.crossings)] += 1;
      }
    }
    const PolyCoeff& c = qs.r_at(1)[e];
    CHECK(c.terms().size() == count.size());
    for (const auto& [ex, n] : count) CHECK(c.coefficient(ex) == Rational(n));
  }
}

TEST_CASE("i-enrichment example") {
  // nodeless tree: index 0 meets the last artificial opening
  BlossomTree m = i_enrich_to_marked(BlossomTree::parse("c0"), 3);
  CHECK(m.to_text() == "c*0x2");
  CHECK(i_enrich_to_marked(BlossomTree::parse("c2"), 3).to_text() == "c0");
  CHECK(marked_to_i_enrich(m, 3).to_text() == "c0");
  CHECK(i_enrich_to_marked(BlossomTree::parse("c0"), 1).to_text() == "c0");
  CHECK(error_kind([] { marked_to_i_enrich(BlossomTree::parse("c*0x3"), 3); }) ==
        static_cast<int>(ErrorKind::kDomain));
  CHECK(error_kind([] { i_enrich_to_marked(BlossomTree::parse("(cco)"), 1); }) ==
        static_cast<int>(ErrorKind::kDomain));
}

TEST_CASE("i-enriched trees and marked trees") {
  const int order = 3;
  SystemSolution sol = solve_eulerian(WeightSpec::symbolic(order), order, 5);
  const auto& names = sol.r_at(1).indeterminates();
  for (int i = 1; i <= 4; ++i) {
    for (int e = 1; e <= order; ++e) {
      std::map<Exponents, long> count;
      std::set<std::pair<std::string, std::string>> images;
      long n = 0;
      for (const auto& tree : eulerian_trees(e, 2 * order)) {
        count[tree_exponents(tree, names, 0)] += enrichment_count(tree, i);
        for (const auto& t : enrichments(tree, i)) {
          ++n;
          BlossomTree mk = i_enrich_to_marked(t, i);
          CHECK(marked_to_i_enrich(mk, i) == t);
          int total = 0;
          for (const auto& v : mk.vertices()) total += v.marked_with >= 0 ? v.mult : 0;
          CHECK(total < i);
          CombMap map = close_tree(mk, TreeFamily::kEulerian);
          CHECK(is_admissible_eulerian(map));
          CHECK(open_map(map, TreeFamily::kEulerian).tree == mk);
          images.insert({map.to_text(), mk.to_text()});
          if (iota_sum(t) == 0 && i > 1) {
            // every closing leaf takes the latest opening
            CHECK(total == i - 1);
          }
        }
      }
      CHECK(static_cast<long>(images.size()) == n);
      const PolyCoeff& c = sol.r_at(i)[e];
      for (const auto& [ex, k] : count) CHECK_MESSAGE(c.coefficient(ex) == Rational(k), "i=", i, " e=", e);
    }
  }
}

TEST_CASE("all-zero indices") {
  for (int i = 2; i <= 5; ++i) {
    for (const auto& tree : eulerian_trees(3, 6)) {
      if (!leaf_path(tree, i).balanced) continue;
      BlossomTree t = tree;
      for (int x = 0; x < t.size(); ++x) {
        if (t.at(x).kind == Kind::kClosing) t.at(x).iota = 0;
      }
      BlossomTree mk = i_enrich_to_marked(t, i);
      ForwardMatching f = indices_to_matching(mk);
      std::vector<int> mults;
      for (const auto& p : f.pairs) {
        if (p.marked) mults.push_back(p.mult);
      }
      REQUIRE(!mults.empty());
      int total = 0, above_one = 0;
      for (int u : mults) {
        total += u;
        above_one += u > 1;
      }
      CHECK(total == i - 1);
      CHECK(above_one <= 1);
    }
  }
}

TEST_CASE("leaf counts") {
  for (int e = 0; e <= 4; ++e) {
    for (const auto& t : eulerian_trees(e, 8)) {
      const int nodes = t.num_nodes();
      int closings = 0;
      for (const auto& v : t.vertices()) closings += v.kind == Kind::kClosing;
      CHECK(static_cast<int>(t.openings().size()) == closings);
      CHECK(closings == e - nodes + 1);
    }
  }
  for (int b = 1; b <= 3; ++b) {
    for (const auto& t : bipartite_trees(3, b)) {
      CHECK(t.num_nodes() == 2 * b);
      CHECK(static_cast<int>(t.openings().size()) == 3 * b - 2 * b + 1);
    }
  }
}

TEST_CASE("bipartite i-enrichment against q_i") {
  SystemSolution sol = solve_bipartite(3, 2, 5);
  for (int i = 1; i <= 4; ++i) {
    for (int b = 1; b <= 2; ++b) {
      long n = 0;
      for (const auto& tree : bipartite_trees(3, b)) {
        if (!tree.root_black_child_last()) continue;
        n += enrichment_count(tree, i);
        for (const auto& t : enrichments(tree, i)) {
          BlossomTree mk = i_enrich_to_marked(t, i);
          CHECK(marked_to_i_enrich(mk, i) == t);
          CombMap map = close_tree(mk, TreeFamily::kBipartite, 3);
          CHECK(is_admissible_bipartite(map, 3));
          CHECK(open_map(map, TreeFamily::kBipartite, 3).tree == mk);
        }
      }
      CHECK_MESSAGE(sol.q_at(i)[b].coefficient({}) == Rational(n), "i=", i, " b=", b);
    }
  }
}

TEST_CASE("leaf path substitution") {
  // the root node's word with each node child replaced by that subtree's path
  for (int e = 1; e <= 4; ++e) {
    for (const auto& t : eulerian_trees(e, 8)) {
      for (int i = 1; i <= 3; ++i) {
        std::vector<int> steps;
        for (int c : t.at(t.top()).children) {
          if (t.at(c).kind == Kind::kOpening) {
            steps.push_back(1);
          } else if (t.at(c).kind == Kind::kClosing) {
            steps.push_back(-1);
          } else {
            BlossomTree sub;
            sub.add(Kind::kOpening, -1);
            std::function<void(int, int)> copy = [&](int x, int parent) {
              int y = sub.add(t.at(x).kind, parent);
              for (int ch : t.at(x).children) copy(ch, y);
            };
            copy(c, 0);
            LeafPath sp = leaf_path(sub, 1);
            CHECK(sp.path.end_height() == 0);
            steps.insert(steps.end(), sp.path.steps.begin(), sp.path.steps.end());
          }
        }
        std::vector<int> whole = leaf_path(t, i).path.steps;
        CHECK(std::accumulate(whole.begin(), whole.end(), 0) == -1);
        CHECK(whole == steps);
      }
    }
  }
}

TEST_CASE("index round trip on small trees") {
  long checked = 0;
  for (int e = 0; e <= 4; ++e) {
    for (const auto& tree : eulerian_trees(e, 8)) {
      if (tree.num_nodes() > 2) continue;
      for (const auto& t : enrichments(tree, 1)) {
        CHECK(matching_to_indices(tree, indices_to_matching(t)) == t);
        ++checked;
      }
    }
  }
  CHECK(checked > 20);
  // all zero: each closing leaf takes the nearest free opening
  BlossomTree z = BlossomTree::parse("(o(oc0c0)c0)");
  for (const auto& p : indices_to_matching(z).pairs) {
    const auto leaves = z.leaves();
    const auto o = std::find(leaves.begin(), leaves.end(), p.opening);
    const auto c = std::find(leaves.begin(), leaves.end(), p.closing);
    REQUIRE(o < c);
  }
  CHECK(close_tree(z, TreeFamily::kEulerian).genus() == 0);
}

TEST_CASE("planar form without crossings") {
  for (const auto& tree : eulerian_trees(3, 6)) {
    for (const auto& t : enrichments(tree, 1)) {
      if (iota_sum(t) != 0) continue;
      PlanarForm p = planar_close(t);
      CHECK(p.crossings == 0);
      CHECK(p.planar == p.reduced);
      CHECK(p.planar.genus() == 0);
    }
  }
}

TEST_CASE("i-enrichment small instances") {
  for (int e = 1; e <= 3; ++e) {
    for (const auto& tree : eulerian_trees(e, 6)) {
      for (const auto& t : enrichments(tree, 1)) CHECK(i_enrich_to_marked(t, 1) == t);
    }
  }
  bool found = false;
  for (const auto& tree : eulerian_trees(1, 2)) {
    for (const auto& t : enrichments(tree, 2)) {
      BlossomTree mk = i_enrich_to_marked(t, 2);
      if (mk.num_marked() == 1) {
        found = true;
        for (const auto& v : mk.vertices()) {
          if (v.marked_with >= 0) CHECK(v.mult == 1);
        }
      }
    }
  }
  CHECK(found);
}

TEST_CASE("total leaf count") {
  for (int e = 1; e <= 4; ++e) {
    for (const auto& t : eulerian_trees(e, 8)) {
      int leaves = 0, excess = 0;
      for (const auto& v : t.vertices()) leaves += v.kind != Kind::kNode;
      for (int d : t.node_degrees()) excess += d / 2 - 1;
      CHECK(leaves == 2 + 2 * excess);
    }
  }
}
