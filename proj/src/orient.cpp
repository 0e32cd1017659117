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

#include "mapgen/orient.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>

#include "mapgen/error.hpp"

namespace mapgen {

namespace {

std::size_t idx(int d) { return static_cast<std::size_t>(d); }

void check_alpha_size(const CombMap& m, const Outdegrees& alpha) {
  if (static_cast<int>(alpha.size()) != m.num_vertices()) {
    fail(ErrorKind::kStructural, "outdegree function needs one value per vertex");
  }
}

int mark_tail(const CombMap& m, int e) {
  int k = m.mark_index(e);
  return k < 0 ? -1 : m.marks()[idx(k)].out;
}

}  // namespace

Outdegrees eulerian_alpha(const CombMap& m) {
  Outdegrees a;
  for (int v = 0; v < m.num_vertices(); ++v) {
    int d = m.degree(v);
    if (d % 2 != 0) fail(ErrorKind::kDomain, "map is not Eulerian");
    a.push_back(d / 2);
  }
  return a;
}

Outdegrees one_orientation_alpha(const CombMap& m, int mdeg) {
  if (m.is_vertex_map()) return {0};
  std::vector<Color> cols = m.has_colors() ? m.colors() : m.with_bipartite_colors().colors();
  Outdegrees a;
  for (Color c : cols) a.push_back(c == Color::kWhite ? mdeg - 1 : 1);
  return a;
}

std::optional<Orientation> find_alpha_orientation(const CombMap& m, const Outdegrees& alpha,
                                                  bool respect_marks,
                                                  const std::vector<int>& forced_tails) {
  check_alpha_size(m, alpha);
  const int n = m.n_darts();
  const int ne = m.num_edges();
  long long total = 0;
  for (int a : alpha) {
    if (a < 0) return std::nullopt;
    total += a;
  }
  if (total != ne) return std::nullopt;

  Orientation o{std::vector<std::uint8_t>(idx(n), 0)};
  std::vector<int> fixed(idx(ne), -1);
  if (respect_marks) {
    for (int e = 0; e < ne; ++e) fixed[idx(e)] = mark_tail(m, e);
  }
  for (int d : forced_tails) {
    if (d < 0 || d >= n) fail(ErrorKind::kRange, "forced dart out of range");
    int& f = fixed[idx(m.edge_of(d))];
    if (f >= 0 && f != d) return std::nullopt;
    f = d;
  }
  std::vector<int> excess(alpha.size(), 0);
  for (int e = 0; e < ne; ++e) {
    int tail = fixed[idx(e)] >= 0 ? fixed[idx(e)] : m.edge_dart(e);
    o.set_tail(m, tail);
    ++excess[idx(m.vertex_of(tail))];
  }
  for (std::size_t v = 0; v < alpha.size(); ++v) excess[v] -= alpha[v];

  for (int u = 0; u < m.num_vertices(); ++u) {
    while (excess[idx(u)] > 0) {
      // breadth-first search along reversible outgoing edges
      std::vector<int> via(alpha.size(), -2);
      via[idx(u)] = -1;
      std::queue<int> q;
      q.push(u);
      int found = -1;
      while (!q.empty() && found < 0) {
        int v = q.front();
        q.pop();
        for (int d : m.darts_around(v)) {
          if (!o.is_out(d) || fixed[idx(m.edge_of(d))] >= 0) continue;
          int w = m.vertex_of(m.alpha(d));
          if (via[idx(w)] != -2) continue;
          via[idx(w)] = d;
          if (excess[idx(w)] < 0) {
            found = w;
            break;
          }
          q.push(w);
        }
      }
      if (found < 0) return std::nullopt;
      for (int w = found; w != u;) {
        int d = via[idx(w)];
        o.reverse(m, d);
        w = m.vertex_of(d);
      }
      --excess[idx(u)];
      ++excess[idx(found)];
    }
  }
  return o;
}

bool is_accessible(const CombMap& m, const Orientation& o, int target, bool avoid_marks) {
  if (m.is_vertex_map()) return true;
  std::vector<char> reach(idx(m.num_vertices()), 0);
  reach[idx(target)] = 1;
  std::vector<int> stack{target};
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int d : m.darts_around(v)) {
      if (o.is_out(d)) continue;
      if (avoid_marks && m.is_marked(m.edge_of(d))) continue;
      int w = m.vertex_of(m.alpha(d));
      if (!reach[idx(w)]) {
        reach[idx(w)] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == m.num_vertices();
}

bool subset_criterion(const CombMap& m, const Outdegrees& alpha) {
  check_alpha_size(m, alpha);
  const int nv = m.num_vertices();
  if (nv > 12) fail(ErrorKind::kCapExceeded, "subset criterion limited to 12 vertices");
  long long total = 0;
  for (int a : alpha) {
    if (a < 0) return false;
    total += a;
  }
  if (total != m.num_edges()) return false;
  const int v0 = m.root_vertex();
  for (unsigned s = 1; s < (1u << nv); ++s) {
    long long a = 0;
    for (int v = 0; v < nv; ++v) {
      if (s & (1u << v)) a += alpha[idx(v)];
    }
    long long inside = 0;
    for (int e = 0; e < m.num_edges(); ++e) {
      int d = m.edge_dart(e);
      if ((s >> m.vertex_of(d) & 1u) && (s >> m.vertex_of(m.alpha(d)) & 1u)) ++inside;
    }
    if (a < inside || (a == inside && !(s & (1u << v0)))) return false;
  }
  return true;
}

std::vector<Orientation> all_alpha_orientations(const CombMap& m, const Outdegrees& alpha) {
  check_alpha_size(m, alpha);
  const int ne = m.num_edges();
  if (ne > 20) fail(ErrorKind::kCapExceeded, "orientation enumeration limited to 20 edges");
  std::vector<Orientation> out;
  for (unsigned long mask = 0; mask < (1ul << ne); ++mask) {
    Orientation o{std::vector<std::uint8_t>(idx(m.n_darts()), 0)};
    for (int e = 0; e < ne; ++e) {
      int d = m.edge_dart(e);
      o.set_tail(m, (mask >> e & 1ul) ? m.alpha(d) : d);
    }
    if (outdegrees(m, o) == alpha) out.push_back(std::move(o));
  }
  return out;
}

bool MinimalResult::in_tree(int e) const {
  return std::binary_search(tree_edges.begin(), tree_edges.end(), e);
}

bool is_spanning_tree(const CombMap& m, const std::vector<int>& edges) {
  if (static_cast<int>(edges.size()) != m.num_vertices() - 1) return false;
  std::vector<int> parent(idx(m.num_vertices()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[idx(x)] != x) x = parent[idx(x)] = parent[idx(parent[idx(x)])];
    return x;
  };
  for (int e : edges) {
    if (e < 0 || e >= m.num_edges()) return false;
    int d = m.edge_dart(e);
    int a = find(m.vertex_of(d)), b = find(m.vertex_of(m.alpha(d)));
    if (a == b) return false;
    parent[idx(a)] = b;
  }
  return true;
}

std::vector<std::vector<int>> spanning_trees(const CombMap& m) {
  const int ne = m.num_edges();
  if (ne > 20) fail(ErrorKind::kCapExceeded, "spanning tree enumeration limited to 20 edges");
  const int need = m.num_vertices() - 1;
  std::vector<std::vector<int>> out;
  for (unsigned long mask = 0; mask < (1ul << ne); ++mask) {
    if (__builtin_popcountl(mask) != need) continue;
    std::vector<int> edges;
    for (int e = 0; e < ne; ++e) {
      if (mask >> e & 1ul) edges.push_back(e);
    }
    if (is_spanning_tree(m, edges)) out.push_back(std::move(edges));
  }
  return out;
}

std::vector<int> tree_walk(const CombMap& m, const std::vector<int>& tree_edges) {
  std::vector<int> order;
  if (m.is_vertex_map()) return order;
  std::vector<char> in_tree(idx(m.num_edges()), 0);
  for (int e : tree_edges) in_tree[idx(e)] = 1;
  int h = m.root();
  for (int k = 0; k < m.n_darts(); ++k) {
    order.push_back(h);
    h = in_tree[idx(m.edge_of(h))] ? m.sigma(m.alpha(h)) : m.sigma(h);
  }
  return order;
}

Orientation phi_orientation(const CombMap& m, const std::vector<int>& tree_edges) {
  if (!is_spanning_tree(m, tree_edges)) fail(ErrorKind::kPrecondition, "not a spanning tree");
  Orientation o{std::vector<std::uint8_t>(idx(m.n_darts()), 0)};
  if (m.is_vertex_map()) return o;
  std::vector<char> in_tree(idx(m.num_edges()), 0);
  for (int e : tree_edges) in_tree[idx(e)] = 1;
  std::vector<char> seen(idx(m.num_vertices()), 0);
  std::vector<int> stack{m.root_vertex()};
  seen[idx(m.root_vertex())] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int d : m.darts_around(v)) {
      if (!in_tree[idx(m.edge_of(d))]) continue;
      int w = m.vertex_of(m.alpha(d));
      if (seen[idx(w)]) continue;
      seen[idx(w)] = 1;
      o.set_tail(m, m.alpha(d));
      stack.push_back(w);
    }
  }
  std::vector<char> done(idx(m.num_edges()), 0);
  for (int h : tree_walk(m, tree_edges)) {
    int e = m.edge_of(h);
    if (in_tree[idx(e)] || done[idx(e)]) continue;
    done[idx(e)] = 1;
    o.set_tail(m, h);
  }
  return o;
}

MinimalResult bernardi_minimal(const CombMap& m, const Outdegrees& alpha,
                               std::optional<unsigned> seed) {
  check_alpha_size(m, alpha);
  MinimalResult res;
  if (m.is_vertex_map()) {
    if (alpha[0] != 0) fail(ErrorKind::kPrecondition, "outdegree function is infeasible");
    return res;
  }
  auto start = find_alpha_orientation(m, alpha, false);
  if (!start) fail(ErrorKind::kPrecondition, "outdegree function is infeasible");
  Orientation o = std::move(*start);
  if (!is_accessible(m, o, m.root_vertex(), false)) {
    fail(ErrorKind::kPrecondition, "outdegree function is not root-accessible");
  }

  const int n = m.n_darts();
  std::vector<std::vector<int>> around(idx(m.num_vertices()));
  for (int v = 0; v < m.num_vertices(); ++v) around[idx(v)] = m.darts_around(v);
  if (seed) {
    std::mt19937 rng(*seed);
    for (auto& a : around) std::shuffle(a.begin(), a.end(), rng);
  }

  std::vector<char> visited(idx(n), 0);
  auto edge_unvisited = [&](int d) { return !visited[idx(d)] && !visited[idx(m.alpha(d))]; };

  // Darts of a directed path from `from` to `to` over unvisited edges other
  // than the edge of `skip`, or empty if none.
  auto directed_path = [&](int from, int to, int skip) {
    std::vector<int> via(idx(m.num_vertices()), -2);
    via[idx(from)] = -1;
    std::vector<int> stack{from};
    while (!stack.empty() && via[idx(to)] == -2) {
      int v = stack.back();
      stack.pop_back();
      for (int d : around[idx(v)]) {
        if (!o.is_out(d) || m.edge_of(d) == m.edge_of(skip) || !edge_unvisited(d)) continue;
        int w = m.vertex_of(m.alpha(d));
        if (via[idx(w)] != -2) continue;
        via[idx(w)] = d;
        stack.push_back(w);
      }
    }
    std::vector<int> path;
    if (via[idx(to)] == -2) return path;
    for (int w = to; w != from;) {
      int d = via[idx(w)];
      path.push_back(d);
      w = m.vertex_of(d);
    }
    return path;
  };

  int h = m.root();
  for (int k = 0; k < n; ++k) {
    res.dart_order.push_back(h);
    const int opp = m.alpha(h);
    int next;
    if (o.is_out(h)) {
      next = visited[idx(opp)] ? m.sigma(opp) : m.sigma(h);
    } else if (visited[idx(opp)]) {
      next = m.sigma(h);
    } else {
      const int head = m.vertex_of(h), tail = m.vertex_of(opp);
      std::vector<int> path;
      bool cycle = head == tail;
      if (!cycle) {
        path = directed_path(head, tail, h);
        cycle = !path.empty();
      }
      if (cycle) {
        o.reverse(m, h);
        for (int d : path) o.reverse(m, d);
        next = m.sigma(h);
      } else {
        res.tree_edges.push_back(m.edge_of(h));
        next = m.sigma(opp);
      }
    }
    visited[idx(h)] = 1;
    h = next;
  }
  std::sort(res.tree_edges.begin(), res.tree_edges.end());
  res.orientation = std::move(o);

  if (!is_spanning_tree(m, res.tree_edges)) {
    fail(ErrorKind::kInvariant, "traversal did not produce a spanning tree");
  }
  if (phi_orientation(m, res.tree_edges) != res.orientation ||
      tree_walk(m, res.tree_edges) != res.dart_order ||
      outdegrees(m, res.orientation) != alpha) {
    fail(ErrorKind::kInvariant, "minimal orientation does not match its spanning tree");
  }
  return res;
}

ReducedMap delete_marked_edges(const CombMap& m) {
  ReducedMap r;
  const int n = m.n_darts();
  r.to_reduced.assign(idx(n), -1);
  for (int d = 0; d < n; ++d) {
    if (!m.is_marked(m.edge_of(d))) {
      r.to_reduced[idx(d)] = static_cast<int>(r.from_reduced.size());
      r.from_reduced.push_back(d);
    }
  }
  const int nr = static_cast<int>(r.from_reduced.size());
  if (nr == 0) {
    if (m.num_vertices() > 1) fail(ErrorKind::kPrecondition, "unmarked part is not connected");
    return r;
  }
  std::vector<int> sigma(idx(nr)), alpha(idx(nr));
  for (int k = 0; k < nr; ++k) {
    int d = r.from_reduced[idx(k)];
    int x = m.sigma(d);
    while (r.to_reduced[idx(x)] < 0) x = m.sigma(x);
    sigma[idx(k)] = r.to_reduced[idx(x)];
    alpha[idx(k)] = r.to_reduced[idx(m.alpha(d))];
  }
  int root = m.root();
  for (int j = 0; j < m.degree(m.root_vertex()) && r.to_reduced[idx(root)] < 0; ++j) {
    root = m.sigma(root);
  }
  if (r.to_reduced[idx(root)] < 0) fail(ErrorKind::kPrecondition, "unmarked part is not connected");
  try {
    r.map = CombMap::build(std::move(sigma), std::move(alpha), r.to_reduced[idx(root)]);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kStructural) throw;
    fail(ErrorKind::kPrecondition, "unmarked part is not connected");
  }
  if (r.map.num_vertices() != m.num_vertices()) {
    fail(ErrorKind::kPrecondition, "unmarked part is not connected");
  }
  return r;
}

MinimalResult canonical_marked_orientation(const CombMap& m, const Outdegrees& alpha,
                                           std::optional<unsigned> seed) {
  if (!m.has_marks()) return bernardi_minimal(m, alpha, seed);
  check_alpha_size(m, alpha);
  ReducedMap r = delete_marked_edges(m);

  Outdegrees reduced_alpha(idx(r.map.num_vertices()), 0);
  std::vector<int> marked_out(idx(m.num_vertices()), 0);
  for (const Mark& mk : m.marks()) ++marked_out[idx(m.vertex_of(mk.out))];
  for (int v = 0; v < m.num_vertices(); ++v) {
    int a = alpha[idx(v)] - marked_out[idx(v)];
    if (a < 0) fail(ErrorKind::kPrecondition, "marks exceed the prescribed outdegree");
    int rv = 0;
    if (!r.map.is_vertex_map()) {
      int d = m.darts_around(v).front();
      while (r.to_reduced[idx(d)] < 0) d = m.sigma(d);
      rv = r.map.vertex_of(r.to_reduced[idx(d)]);
    }
    reduced_alpha[idx(rv)] = a;
  }
  MinimalResult red = bernardi_minimal(r.map, reduced_alpha, seed);

  MinimalResult res;
  res.orientation.out.assign(idx(m.n_darts()), 0);
  for (int k = 0; k < r.map.n_darts(); ++k) {
    res.orientation.out[idx(r.from_reduced[idx(k)])] = red.orientation.out[idx(k)];
  }
  for (const Mark& mk : m.marks()) res.orientation.set_tail(m, mk.out);
  for (int e : red.tree_edges) res.tree_edges.push_back(m.edge_of(r.from_reduced[idx(r.map.edge_dart(e))]));
  std::sort(res.tree_edges.begin(), res.tree_edges.end());
  res.dart_order = tree_walk(m, res.tree_edges);
  if (outdegrees(m, res.orientation) != alpha || !respects_marks(m, res.orientation)) {
    fail(ErrorKind::kInvariant, "canonical orientation lost its outdegrees");
  }
  return res;
}

bool is_admissible_eulerian(const CombMap& m) {
  if (m.is_vertex_map()) return true;
  if (!m.is_eulerian()) return false;
  auto o = find_alpha_orientation(m, eulerian_alpha(m), true, {m.root()});
  return o && is_accessible(m, *o, m.root_vertex(), true);
}

bool is_admissible_bipartite(const CombMap& m, int mdeg) {
  if (m.is_vertex_map() || !m.is_bipartite_regular(mdeg)) return false;
  const int v0 = m.root_vertex();
  const int before = m.sigma_inv(m.root());
  std::vector<int> forced;
  for (int d : m.darts_around(v0)) {
    if (d != before) forced.push_back(d);
  }
  forced.push_back(m.alpha(before));
  auto o = find_alpha_orientation(m, one_orientation_alpha(m, mdeg), true, forced);
  return o && is_accessible(m, *o, v0, true);
}

}  // namespace mapgen
