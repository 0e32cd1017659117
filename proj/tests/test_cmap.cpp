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
#include <numeric>
#include <random>

#include "doctest.h"
#include "mapgen/cmap.hpp"
#include "mapgen/error.hpp"

using mapgen::CombMap;
using mapgen::Color;
using mapgen::Error;
using mapgen::ErrorKind;

namespace {

CombMap shuffled(const CombMap& m, std::mt19937& rng) {
  std::vector<int> perm(static_cast<std::size_t>(m.n_darts()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return m.relabeled(perm);
}

// Random connected map: random sigma, random pairing, retry until connected.
CombMap random_map(int edges, std::mt19937& rng) {
  const int n = 2 * edges;
  for (;;) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    std::vector<int> alpha(p.size());
    for (int k = 0; k < n; k += 2) {
      alpha[static_cast<std::size_t>(p[k])] = p[k + 1];
      alpha[static_cast<std::size_t>(p[k + 1])] = p[k];
    }
    std::vector<int> sigma(p.size());
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    try {
      return CombMap::build(sigma, alpha, static_cast<int>(rng() % static_cast<unsigned>(n)));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kStructural) throw;
    }
  }
}

}  // namespace

TEST_CASE("face and genus counts") {
  CombMap loop = CombMap::parse("2; (1 2); (1 2); 1");
  CHECK(loop.num_vertices() == 1);
  CHECK(loop.num_faces() == 2);
  CHECK(loop.genus() == 0);

  CombMap torus = CombMap::parse("4; (1 2 3 4); (1 3)(2 4); 1");
  CHECK(torus.num_faces() == 1);
  CHECK(torus.genus() == 1);

  CombMap two_loops = CombMap::parse("4; (1 2 3 4); (1 2)(3 4); 1");
  CHECK(two_loops.num_faces() == 3);
  CHECK(two_loops.genus() == 0);

  CombMap segment = CombMap::parse("2; (1)(2); (1 2); 1");
  CHECK(segment.num_vertices() == 2);
  CHECK(segment.num_faces() == 1);
  CHECK(segment.degree_profile() == std::vector<int>{1, 1});
}

TEST_CASE("theta graph is bipartite 3-regular") {
  CombMap theta = CombMap::parse("6; (1 2 3)(4 6 5); (1 4)(2 5)(3 6); 1");
  CHECK(theta.num_faces() == 3);
  CHECK(theta.genus() == 0);
  CHECK(theta.is_bipartite_regular(3));
  CHECK_FALSE(theta.is_bipartite_regular(2));
  CombMap c = theta.with_bipartite_colors();
  CHECK(c.colors() == std::vector<Color>{Color::kWhite, Color::kBlack});
  CHECK(c.is_bipartite_regular(3));
  // A loop can not be properly colored.
  CHECK_FALSE(CombMap::parse("2; (1 2); (1 2); 1").is_bipartite_regular(2));
}

TEST_CASE("the two planar pairings on a 4-valent vertex differ as rooted maps") {
  CombMap a = CombMap::parse("4; (1 2 3 4); (1 2)(3 4); 1");
  CombMap b = CombMap::parse("4; (1 2 3 4); (1 4)(2 3); 1");
  CHECK(a.genus() == 0);
  CHECK(b.genus() == 0);
  CHECK_FALSE(mapgen::rooted_isomorphic(a, b));
  // Rerooting b at dart 2 gives a.
  CHECK(mapgen::rooted_isomorphic(a, b.with_root(1)));
}

TEST_CASE("structural errors") {
  auto kind_of = [](const std::string& text) {
    try {
      CombMap::parse(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kInvariant;
  };
  CHECK(kind_of("2; (1)(2); (1 2)(1 2); 1") == ErrorKind::kParse);
  CHECK(kind_of("4; (1 2)(3 4); (1 2)(3 4); 1") == ErrorKind::kStructural);  // disconnected
  CHECK(kind_of("2; (1 2); (1 2); 3") == ErrorKind::kParse);
  CHECK(kind_of("2; (1 2); (1 x); 1") == ErrorKind::kParse);
  CHECK(kind_of("3; (1 2 3); (1 2); 1") == ErrorKind::kParse);
  CHECK(kind_of("2; (1 2); (1 2); 1; ww") == ErrorKind::kStructural);
  CHECK(kind_of("2; (1 2); (1 2); 1; -; (1,1,1)") == ErrorKind::kStructural);
  CHECK(kind_of("2; (1 2); (1 2); 1; -; (1,2,0)") == ErrorKind::kStructural);
  CHECK_THROWS_AS(CombMap::build({1, 0}, {0, 1}, 0), Error);
}

TEST_CASE("text round trip and vertex map") {
  const char* samples[] = {
      "2; (1 2); (1 2); 1; -; -",
      "4; (1 2 3 4); (1 3)(2 4); 2; -; -",
      "6; (1 2 3)(4 6 5); (1 4)(2 5)(3 6); 1; wb; (1,4,2)",
      "0; -; -; -; -; -",
  };
  for (const char* s : samples) {
    CombMap m = CombMap::parse(s);
    CHECK(m.to_text() == s);
    CHECK(CombMap::parse(m.to_text()) == m);
  }
  CombMap v;
  CHECK(v.is_vertex_map());
  CHECK(v.num_vertices() == 1);
  CHECK(v.num_edges() == 0);
  CHECK(v.num_faces() == 1);
  CHECK(v.genus() == 0);
  CHECK(v.canonical() == v);
}

TEST_CASE("property: canonical form is idempotent and relabeling invariant") {
  std::mt19937 rng(20260101);
  for (int trial = 0; trial < 300; ++trial) {
    CombMap m = random_map(1 + trial % 6, rng);
    CombMap c = m.canonical();
    CHECK(c.root() == 0);
    CHECK(c.canonical() == c);
    CombMap r = shuffled(m, rng);
    CHECK(r.num_faces() == m.num_faces());
    CHECK(r.genus() == m.genus());
    CHECK(r.degree_profile() == m.degree_profile());
    CHECK(mapgen::rooted_isomorphic(m, r));
    CHECK(CombMap::parse(m.to_text()) == m);
    CHECK(2 - 2 * m.genus() == m.num_vertices() - m.num_edges() + m.num_faces());
  }
}

TEST_CASE("property: rerooting changes the class only through automorphisms") {
  // Among all roots of a map, the number of distinct rooted classes times the
  // automorphism count equals the dart count.
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    CombMap m = random_map(1 + trial % 5, rng);
    std::vector<std::string> forms;
    int autos = 0;
    for (int d = 0; d < m.n_darts(); ++d) {
      CombMap r = m.with_root(d).canonical();
      forms.push_back(r.to_text());
      if (r == m.canonical()) ++autos;
    }
    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    CHECK(static_cast<int>(forms.size()) * autos == m.n_darts());
  }
}

TEST_CASE("colors and marks follow a relabeling") {
  CombMap m = CombMap::parse("6; (1 2 3)(4 6 5); (1 4)(2 5)(3 6); 4; bw; (2,5,3)");
  std::mt19937 rng(3);
  for (int k = 0; k < 20; ++k) {
    CombMap r = shuffled(m, rng);
    CHECK(r.color_of_vertex(r.root_vertex()) == Color::kWhite);
    REQUIRE(r.marks().size() == 1);
    CHECK(r.marks()[0].mult == 3);
    CHECK(r.alpha(r.marks()[0].out) == r.marks()[0].in);
    CHECK(r.canonical() == m.canonical());
  }
}

TEST_CASE("orientation helpers") {
  CombMap m = CombMap::parse("4; (1 2 3 4); (1 3)(2 4); 1");
  mapgen::Orientation o{std::vector<std::uint8_t>(4, 0)};
  CHECK_FALSE(mapgen::is_valid_orientation(m, o));
  o.set_tail(m, 0);
  o.set_tail(m, 3);
  CHECK(mapgen::is_valid_orientation(m, o));
  CHECK(mapgen::orientation_to_text(m, o) == "1 4");
  CHECK(mapgen::outdegrees(m, o) == std::vector<int>{2});
  o.reverse(m, 0);
  CHECK(mapgen::orientation_to_text(m, o) == "3 4");
  CombMap mk = m.with_marks({{0, 2, 1}});
  CHECK_FALSE(mapgen::respects_marks(mk, o));
  o.reverse(m, 2);
  CHECK(mapgen::respects_marks(mk, o));
}
