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

#include "mapgen/blossom.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

#include "mapgen/error.hpp"
#include "mapgen/orient.hpp"

namespace mapgen {

namespace {

std::size_t idx(int d) { return static_cast<std::size_t>(d); }

using Kind = BlossomTree::Kind;

}  // namespace

// -------------------------------------------------------------- the tree

int BlossomTree::add(Kind kind, int parent) {
  Vertex v;
  v.kind = kind;
  v.parent = parent;
  v_.push_back(v);
  const int id = size() - 1;
  if (parent >= 0) at(parent).children.push_back(id);
  return id;
}

BlossomTree BlossomTree::nodeless(int iota) {
  BlossomTree t;
  t.add(Kind::kOpening, -1);
  t.at(t.add(Kind::kClosing, 0)).iota = iota;
  return t;
}

BlossomTree BlossomTree::parse(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  BlossomTree t;
  t.add(Kind::kOpening, -1);
  std::size_t pos = 0;
  auto number = [&]() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || pos - start > 9) fail(ErrorKind::kParse, "expected a number in tree word '" + s + "'");
    return std::stoi(s.substr(start, pos - start));
  };
  std::function<void(int)> item = [&](int parent) {
    if (pos >= s.size()) fail(ErrorKind::kParse, "unexpected end of tree word '" + s + "'");
    const char c = s[pos];
    if (c == '(') {
      ++pos;
      int x = t.add(Kind::kNode, parent);
      while (pos < s.size() && s[pos] != ')') item(x);
      if (pos >= s.size()) fail(ErrorKind::kParse, "unbalanced '(' in tree word '" + s + "'");
      ++pos;
      if (t.at(x).children.empty()) fail(ErrorKind::kParse, "a node needs children");
    } else if (c == 'o') {
      ++pos;
      t.add(Kind::kOpening, parent);
    } else if (c == 'c') {
      ++pos;
      int x = t.add(Kind::kClosing, parent);
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        t.at(x).marked_with = number();
        if (pos < s.size() && s[pos] == 'x') {
          ++pos;
          t.at(x).mult = number();
          if (t.at(x).mult < 1) fail(ErrorKind::kParse, "multiplicity must be positive");
        }
      } else if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        t.at(x).iota = number();
      }
    } else {
      fail(ErrorKind::kParse, std::string("unexpected '") + c + "' in tree word '" + s + "'");
    }
  };
  if (s.empty() || s[0] == 'o') fail(ErrorKind::kParse, "tree word must start with a node or a closing leaf");
  item(0);
  if (pos != s.size()) fail(ErrorKind::kParse, "trailing characters in tree word '" + s + "'");
  return t;
}

std::string BlossomTree::to_text() const {
  std::string out;
  std::function<void(int)> emit = [&](int x) {
    const Vertex& v = at(x);
    switch (v.kind) {
      case Kind::kNode:
        out += '(';
        for (int c : v.children) emit(c);
        out += ')';
        break;
      case Kind::kOpening:
        out += 'o';
        break;
      case Kind::kClosing:
        out += 'c';
        if (v.marked_with >= 0) {
          out += '*' + std::to_string(v.marked_with);
          if (v.mult != 1) out += 'x' + std::to_string(v.mult);
        } else if (v.iota >= 0) {
          out += std::to_string(v.iota);
        }
        break;
    }
  };
  emit(top());
  return out;
}

std::vector<int> BlossomTree::leaves() const {
  std::vector<int> out, stack{0};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (is_leaf(x)) out.push_back(x);
    const auto& ch = at(x).children;
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

std::vector<int> BlossomTree::nodes() const {
  std::vector<int> out, stack{top()};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (is_leaf(x)) continue;
    out.push_back(x);
    const auto& ch = at(x).children;
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

int BlossomTree::num_nodes() const { return static_cast<int>(nodes().size()); }

std::vector<int> BlossomTree::node_degrees() const {
  std::vector<int> out;
  for (int x : nodes()) out.push_back(degree(x));
  std::sort(out.begin(), out.end());
  return out;
}

int BlossomTree::half_degree() const {
  int total = 0;
  for (int x : nodes()) total += degree(x);
  return total / 2;
}

std::vector<int> BlossomTree::openings() const {
  std::vector<int> out;
  for (int x : leaves()) {
    if (at(x).kind == Kind::kOpening) out.push_back(x);
  }
  return out;
}

int BlossomTree::depth(int x) const {
  int d = 0;
  while (at(x).parent >= 0) {
    x = at(x).parent;
    ++d;
  }
  return d;
}

int BlossomTree::num_marked() const {
  int k = 0;
  for (const Vertex& v : v_) k += v.kind == Kind::kClosing && v.marked_with >= 0;
  return k;
}

bool BlossomTree::all_indices_set() const {
  for (const Vertex& v : v_) {
    if (v.kind == Kind::kClosing && v.marked_with < 0 && v.iota < 0) return false;
  }
  return true;
}

bool BlossomTree::is_eulerian() const {
  int open = 0, close = 0;
  for (const Vertex& v : v_) {
    open += v.kind == Kind::kOpening;
    close += v.kind == Kind::kClosing;
  }
  if (open != close) return false;
  for (int x : nodes()) {
    const int deg = degree(x);
    if (deg % 2 != 0) return false;
    int o = 0;
    for (int c : at(x).children) o += at(c).kind == Kind::kOpening;
    if (o != deg / 2 - 1) return false;
  }
  return true;
}

bool BlossomTree::is_bipartite(int m) const {
  for (int x : nodes()) {
    if (degree(x) != m) return false;
    int o = 0, c = 0, n = 0;
    for (int ch : at(x).children) {
      o += at(ch).kind == Kind::kOpening;
      c += at(ch).kind == Kind::kClosing;
      n += at(ch).kind == Kind::kNode;
    }
    if (node_color(x) == Color::kWhite) {
      if (n != 1 || o != m - 2) return false;
    } else if (o != 0) {
      return false;
    }
  }
  return true;
}

bool BlossomTree::root_black_child_last() const {
  if (is_nodeless()) return false;
  return !is_leaf(at(top()).children.back());
}

// ------------------------------------------------------------- leaf paths

LeafPath leaf_path(const BlossomTree& t, int i) {
  if (i < 1) fail(ErrorKind::kDomain, "leaf path needs i >= 1");
  LeafPath lp;
  lp.path.start_height = i;
  int h = i;
  bool ok = true;
  const auto leaves = t.leaves();
  for (std::size_t k = 1; k < leaves.size(); ++k) {
    if (t.at(leaves[k]).kind == Kind::kOpening) {
      lp.path.steps.push_back(1);
      ++h;
    } else {
      lp.closing_leaves.push_back(leaves[k]);
      lp.heights.push_back(h);
      if (h < 1) ok = false;
      lp.path.steps.push_back(-1);
      --h;
    }
  }
  lp.balanced = ok && h == i - 1;
  return lp;
}

// --------------------------------------------------------------- matching

namespace {

// Closing leaf -> partner, resolved from matching indices over the walk. The
// stack starts with `stack` and gains every opening leaf not in `skip`.
// Closing leaves in marked pairs are passed over.
std::map<int, int> resolve_indices(const BlossomTree& t, std::vector<int> stack,
                                   const std::vector<char>& skip, std::vector<int>* leftover) {
  std::map<int, int> partner;
  const auto leaves = t.leaves();
  for (std::size_t k = 1; k < leaves.size(); ++k) {
    const int x = leaves[k];
    const auto& v = t.at(x);
    if (v.kind == Kind::kOpening) {
      if (!skip[idx(x)]) stack.push_back(x);
      continue;
    }
    if (v.marked_with >= 0) continue;
    const int h = static_cast<int>(stack.size());
    if (v.iota < 0) fail(ErrorKind::kPrecondition, "closing leaf without a matching index");
    if (v.iota >= h) {
      fail(ErrorKind::kDomain, "matching index " + std::to_string(v.iota) +
                                   " out of range for height " + std::to_string(h));
    }
    const auto it = stack.begin() + (h - 1 - v.iota);
    partner[x] = *it;
    stack.erase(it);
  }
  if (leftover) *leftover = std::move(stack);
  return partner;
}

// Writes matching indices for closing leaves whose partner (possibly an
// artificial id) is given, over the same stack discipline.
void write_indices(BlossomTree& t, std::vector<int> stack, const std::vector<char>& skip,
                   const std::map<int, int>& partner) {
  const auto leaves = t.leaves();
  for (std::size_t k = 1; k < leaves.size(); ++k) {
    const int x = leaves[k];
    auto& v = t.at(x);
    if (v.kind == Kind::kOpening) {
      if (!skip[idx(x)]) stack.push_back(x);
      continue;
    }
    auto p = partner.find(x);
    if (p == partner.end()) continue;
    auto it = std::find(stack.begin(), stack.end(), p->second);
    if (it == stack.end()) fail(ErrorKind::kDomain, "matching is not forward");
    v.iota = static_cast<int>(stack.end() - it) - 1;
    stack.erase(it);
  }
}

std::vector<int> walk_position(const BlossomTree& t) {
  std::vector<int> pos(idx(t.size()), -1);
  const auto leaves = t.leaves();
  for (std::size_t k = 0; k < leaves.size(); ++k) pos[idx(leaves[k])] = static_cast<int>(k);
  return pos;
}

void sort_pairs(const BlossomTree& t, ForwardMatching& f) {
  const auto pos = walk_position(t);
  std::sort(f.pairs.begin(), f.pairs.end(), [&](const LeafPair& a, const LeafPair& b) {
    return pos[idx(a.closing)] < pos[idx(b.closing)];
  });
}

}  // namespace

ForwardMatching indices_to_matching(const BlossomTree& t) {
  const auto opens = t.openings();
  std::vector<char> skip(idx(t.size()), 0);
  ForwardMatching f;
  for (int x = 0; x < t.size(); ++x) {
    const auto& v = t.at(x);
    if (v.kind != Kind::kClosing || v.marked_with < 0) continue;
    if (v.marked_with >= static_cast<int>(opens.size())) fail(ErrorKind::kDomain, "marked partner out of range");
    const int o = opens[idx(v.marked_with)];
    if (skip[idx(o)]) fail(ErrorKind::kDomain, "opening leaf in two marked pairs");
    skip[idx(o)] = 1;
    f.pairs.push_back({o, x, true, v.mult});
  }
  std::vector<int> start;
  if (!skip[0]) start.push_back(0);
  std::vector<int> leftover;
  for (const auto& [c, o] : resolve_indices(t, start, skip, &leftover)) f.pairs.push_back({o, c, false, 1});
  if (!leftover.empty()) fail(ErrorKind::kDomain, "opening leaves left unmatched");
  sort_pairs(t, f);
  return f;
}

BlossomTree matching_to_indices(const BlossomTree& t, const ForwardMatching& f) {
  BlossomTree out = t;
  std::vector<int> seen(idx(t.size()), 0);
  std::vector<int> number(idx(t.size()), -1);
  const auto opens = t.openings();
  for (std::size_t k = 0; k < opens.size(); ++k) number[idx(opens[k])] = static_cast<int>(k);
  std::vector<char> skip(idx(t.size()), 0);
  std::map<int, int> partner;
  for (const LeafPair& p : f.pairs) {
    if (p.opening < 0 || p.opening >= t.size() || p.closing < 0 || p.closing >= t.size() ||
        t.at(p.opening).kind != Kind::kOpening || t.at(p.closing).kind != Kind::kClosing) {
      fail(ErrorKind::kDomain, "a pair must join an opening and a closing leaf");
    }
    if (seen[idx(p.opening)]++ || seen[idx(p.closing)]++) fail(ErrorKind::kDomain, "leaf in two pairs");
    auto& c = out.at(p.closing);
    if (p.marked) {
      if (p.mult < 1) fail(ErrorKind::kDomain, "multiplicity must be positive");
      c.marked_with = number[idx(p.opening)];
      c.mult = p.mult;
      c.iota = -1;
      skip[idx(p.opening)] = 1;
    } else {
      c.marked_with = -1;
      c.mult = 1;
      partner[p.closing] = p.opening;
    }
  }
  for (int x = 0; x < t.size(); ++x) {
    if (t.is_leaf(x) && !seen[idx(x)]) fail(ErrorKind::kDomain, "leaf left unmatched");
  }
  std::vector<int> start;
  if (!skip[0]) start.push_back(0);
  write_indices(out, start, skip, partner);
  return out;
}

// ---------------------------------------------------------------- closure

namespace {

Outdegrees family_alpha(const CombMap& m, TreeFamily family, int mdeg) {
  return family == TreeFamily::kEulerian ? eulerian_alpha(m) : one_orientation_alpha(m, mdeg);
}

void check_shape(const BlossomTree& t, TreeFamily family, int m) {
  if (family == TreeFamily::kEulerian) {
    if (!t.is_eulerian()) fail(ErrorKind::kDomain, "not an Eulerian tree: " + t.to_text());
  } else {
    if (m < 2) fail(ErrorKind::kDomain, "bipartite trees need m >= 2");
    if (!t.is_bipartite(m)) fail(ErrorKind::kDomain, "not an m-bipartite tree: " + t.to_text());
  }
}

}  // namespace

Closure close_raw(const BlossomTree& t, const ForwardMatching& f, TreeFamily family, int m) {
  check_shape(t, family, m);
  BlossomTree checked = matching_to_indices(t, f);  // validates f
  (void)checked;
  Closure out;
  out.node_base.assign(idx(t.size()), -1);
  if (t.is_nodeless()) {
    if (family == TreeFamily::kBipartite) out.map = out.map.with_colors({Color::kWhite});
    return out;
  }
  bool marked = false;
  for (const LeafPair& p : f.pairs) marked = marked || p.marked;
  if (family == TreeFamily::kBipartite && marked && !t.root_black_child_last()) {
    fail(ErrorKind::kPrecondition, "marked bipartite trees need the root's black child last");
  }

  const auto nodes = t.nodes();
  int n = 0;
  for (int x : nodes) {
    out.node_base[idx(x)] = n;
    n += t.degree(x);
  }
  std::vector<int> sigma(idx(n)), alpha(idx(n), -1);
  std::vector<int> slot(idx(t.size()), -1);  // dart at the parent of each vertex
  for (int x : nodes) {
    const int base = out.node_base[idx(x)];
    const int deg = t.degree(x);
    for (int j = 0; j < deg; ++j) sigma[idx(base + j)] = base + (j + 1) % deg;
    const auto& ch = t.at(x).children;
    for (std::size_t j = 0; j < ch.size(); ++j) slot[idx(ch[j])] = base + 1 + static_cast<int>(j);
  }
  slot[0] = 0;
  Orientation o{std::vector<std::uint8_t>(idx(n), 0)};
  for (int x : nodes) {
    if (x == t.top()) continue;
    const int a = out.node_base[idx(x)], b = slot[idx(x)];
    alpha[idx(a)] = b;
    alpha[idx(b)] = a;
    o.out[idx(a)] = 1;
  }
  std::vector<Mark> marks;
  for (const LeafPair& p : f.pairs) {
    const int a = slot[idx(p.opening)], b = slot[idx(p.closing)];
    alpha[idx(a)] = b;
    alpha[idx(b)] = a;
    o.out[idx(a)] = 1;
    if (p.marked) marks.push_back({a, b, p.mult});
  }
  std::vector<Color> colors;
  if (family == TreeFamily::kBipartite) {
    for (int x : nodes) colors.push_back(t.node_color(x));
  }
  out.map = CombMap::build(std::move(sigma), std::move(alpha), 0, std::move(colors), std::move(marks));
  for (int x : nodes) {
    if (x != t.top()) out.tree_edges.push_back(out.map.edge_of(out.node_base[idx(x)]));
  }
  std::sort(out.tree_edges.begin(), out.tree_edges.end());
  out.orientation = std::move(o);

  MinimalResult canon = canonical_marked_orientation(out.map, family_alpha(out.map, family, m));
  if (canon.orientation != out.orientation || canon.tree_edges != out.tree_edges) {
    fail(ErrorKind::kInvariant, "closure of " + t.to_text() + " is not the canonical orientation");
  }
  return out;
}

CombMap close_tree(const BlossomTree& t, const ForwardMatching& f, TreeFamily family, int m) {
  return close_raw(t, f, family, m).map.canonical();
}

CombMap close_tree(const BlossomTree& t, TreeFamily family, int m) {
  check_shape(t, family, m);
  return close_tree(t, indices_to_matching(t), family, m);
}

Opened open_map(const CombMap& input, TreeFamily family, int mdeg) {
  if (input.is_vertex_map()) {
    Opened o{BlossomTree::nodeless(0), {}};
    o.matching.pairs.push_back({0, 1, false, 1});
    return o;
  }
  CombMap m = input;
  if (family == TreeFamily::kEulerian) {
    if (!m.is_eulerian()) fail(ErrorKind::kDomain, "map is not Eulerian");
    if (m.has_marks() && !is_admissible_eulerian(m)) fail(ErrorKind::kPrecondition, "marked map is not admissible");
  } else {
    if (!m.is_bipartite_regular(mdeg)) fail(ErrorKind::kDomain, "map is not bipartite regular of the given degree");
    if (!m.has_colors()) m = m.with_bipartite_colors();
    if (m.has_marks() && !is_admissible_bipartite(m, mdeg)) fail(ErrorKind::kPrecondition, "marked map is not admissible");
  }
  MinimalResult canon = canonical_marked_orientation(m, family_alpha(m, family, mdeg));
  const Orientation& o = canon.orientation;
  if (!o.is_out(m.root())) fail(ErrorKind::kInvariant, "root dart is not outgoing in the canonical orientation");

  Opened res;
  BlossomTree& t = res.tree;
  std::vector<int> leaf_of(idx(m.n_darts()), -1);
  t.add(Kind::kOpening, -1);
  leaf_of[idx(m.root())] = 0;
  std::function<void(int, int)> grow = [&](int parent_slot, int parent_vertex) {
    const int x = t.add(Kind::kNode, parent_vertex);
    for (int d = m.sigma(parent_slot); d != parent_slot; d = m.sigma(d)) {
      if (canon.in_tree(m.edge_of(d))) {
        grow(m.alpha(d), x);
      } else {
        leaf_of[idx(d)] = t.add(o.is_out(d) ? Kind::kOpening : Kind::kClosing, x);
      }
    }
  };
  grow(m.root(), 0);
  for (int e = 0; e < m.num_edges(); ++e) {
    if (canon.in_tree(e)) continue;
    int d = m.edge_dart(e);
    if (!o.is_out(d)) d = m.alpha(d);
    const int k = m.mark_index(e);
    res.matching.pairs.push_back({leaf_of[idx(d)], leaf_of[idx(m.alpha(d))], k >= 0,
                                  k >= 0 ? m.marks()[idx(k)].mult : 1});
  }
  sort_pairs(t, res.matching);
  res.tree = matching_to_indices(t, res.matching);
  check_shape(res.tree, family, mdeg);
  return res;
}

// ------------------------------------------------------------ planar form

PlanarForm planar_close(const BlossomTree& t) {
  check_shape(t, TreeFamily::kEulerian, 0);
  if (t.num_marked() > 0) fail(ErrorKind::kDomain, "planar form takes unmarked trees");
  BlossomTree ext;
  std::vector<char> crossing;
  std::function<void(int, int)> copy = [&](int x, int parent) {
    const auto& v = t.at(x);
    if (v.kind == Kind::kClosing && v.iota > 0) {
      int p = parent;
      for (int j = 0; j < v.iota; ++j) {
        const int node = ext.add(Kind::kNode, p);
        if (static_cast<int>(crossing.size()) <= node) crossing.resize(idx(node + 1), 0);
        crossing[idx(node)] = 1;
        ext.at(ext.add(Kind::kClosing, node)).iota = 0;
        p = node;
      }
      ext.at(ext.add(Kind::kClosing, p)).iota = 0;
      // openings on the far side, innermost first in the walk
      for (int node = p; node != parent; node = ext.at(node).parent) ext.add(Kind::kOpening, node);
      return;
    }
    const int y = ext.add(v.kind, parent);
    ext.at(y).iota = v.kind == Kind::kClosing ? 0 : -1;
    for (int c : v.children) copy(c, y);
  };
  ext.add(Kind::kOpening, -1);
  copy(t.top(), 0);
  crossing.resize(idx(ext.size()), 0);

  PlanarForm out;
  for (char c : crossing) out.crossings += c;
  Closure cl = close_raw(ext, indices_to_matching(ext), TreeFamily::kEulerian);
  if (cl.map.genus() != 0) fail(ErrorKind::kInvariant, "leaf-extended closure is not planar");
  out.planar = cl.map.canonical();

  if (t.is_nodeless()) {
    out.reduced = out.planar;
  } else {
    const CombMap& pm = cl.map;
    std::vector<char> gone(idx(pm.n_darts()), 0);
    for (int x = 0; x < ext.size(); ++x) {
      if (!crossing[idx(x)]) continue;
      for (int j = 0; j < 4; ++j) gone[idx(cl.node_base[idx(x)] + j)] = 1;
    }
    std::vector<int> id(idx(pm.n_darts()), -1);
    int n = 0;
    for (int d = 0; d < pm.n_darts(); ++d) {
      if (!gone[idx(d)]) id[idx(d)] = n++;
    }
    std::vector<int> sigma(idx(n)), alpha(idx(n));
    for (int d = 0; d < pm.n_darts(); ++d) {
      if (gone[idx(d)]) continue;
      sigma[idx(id[idx(d)])] = id[idx(pm.sigma(d))];
      int e = pm.alpha(d);
      while (gone[idx(e)]) {
        const int x = pm.vertex_of(e);
        const int base = pm.darts_around(x).front();
        e = pm.alpha(base + (e - base + 2) % 4);
      }
      alpha[idx(id[idx(d)])] = id[idx(e)];
    }
    out.reduced = CombMap::build(std::move(sigma), std::move(alpha), 0).canonical();
  }
  if (out.reduced != close_tree(t, TreeFamily::kEulerian)) {
    fail(ErrorKind::kInvariant, "planar form of " + t.to_text() + " does not reduce to its closure");
  }
  return out;
}

// ----------------------------------------------------------- i-enrichment

BlossomTree i_enrich_to_marked(const BlossomTree& t, int i) {
  if (i < 1) fail(ErrorKind::kDomain, "i must be at least 1");
  if (t.num_marked() > 0) fail(ErrorKind::kDomain, "i-enriched trees carry no marks");
  if (!leaf_path(t, i).balanced) fail(ErrorKind::kDomain, "tree is not " + std::to_string(i) + "-balanced");
  // artificial opening at branch position p is -p
  std::vector<int> stack{0};
  for (int p = i - 1; p >= 1; --p) stack.push_back(-p);
  std::vector<char> skip(idx(t.size()), 0);
  std::vector<int> leftover;
  const auto partner = resolve_indices(t, stack, skip, &leftover);

  std::vector<std::pair<int, int>> art;  // (position, closing)
  ForwardMatching f;
  for (const auto& [c, o] : partner) {
    if (o < 0) {
      art.push_back({-o, c});
    } else {
      f.pairs.push_back({o, c, false, 1});
    }
  }
  std::sort(art.begin(), art.end());
  std::vector<int> free_open;  // o_r, ..., o_1
  for (int x : leftover) {
    if (x >= 0) free_open.push_back(x);
  }
  const std::size_t r = art.size();
  if (free_open.size() != r) fail(ErrorKind::kInvariant, "unmatched opening count differs from matched artificial count");
  for (std::size_t j = 0; j < r; ++j) {
    const int next = j + 1 < r ? art[j + 1].first : i;
    f.pairs.push_back({free_open[r - 1 - j], art[j].second, true, next - art[j].first});
  }
  sort_pairs(t, f);
  return matching_to_indices(t, f);
}

BlossomTree marked_to_i_enrich(const BlossomTree& t, int i) {
  if (i < 1) fail(ErrorKind::kDomain, "i must be at least 1");
  ForwardMatching f = indices_to_matching(t);
  const auto pos = walk_position(t);
  std::vector<LeafPair> marked;
  std::map<int, int> partner;
  for (const LeafPair& p : f.pairs) {
    if (p.marked) {
      marked.push_back(p);
    } else {
      partner[p.closing] = p.opening;
    }
  }
  // first opening in walk order is o_r
  std::sort(marked.begin(), marked.end(), [&](const LeafPair& a, const LeafPair& b) {
    return pos[idx(a.opening)] < pos[idx(b.opening)];
  });
  int position = i;
  for (const LeafPair& p : marked) {  // j = r, ..., 1
    position -= p.mult;
    if (position < 1) fail(ErrorKind::kDomain, "multiplicities must add up to less than i");
    partner[p.closing] = -position;
  }
  BlossomTree out = t;
  for (int x = 0; x < out.size(); ++x) {
    auto& v = out.at(x);
    if (v.kind == Kind::kClosing) {
      v.marked_with = -1;
      v.mult = 1;
    }
  }
  std::vector<int> stack{0};
  for (int p = i - 1; p >= 1; --p) stack.push_back(-p);
  write_indices(out, stack, std::vector<char>(idx(t.size()), 0), partner);
  return out;
}

// ------------------------------------------------------------- generators

namespace {

void combine_slots(const std::vector<std::vector<std::string>>& choices, std::size_t k, std::string& cur,
                   std::vector<std::string>& out, const std::string& close) {
  if (k == choices.size()) {
    out.push_back(cur + close);
    return;
  }
  const std::size_t len = cur.size();
  for (const auto& c : choices[k]) {
    cur += c;
    combine_slots(choices, k + 1, cur, out, close);
    cur.resize(len);
  }
}

// Node-rooted Eulerian subtrees of half-degree e.
const std::vector<std::string>& euler_subtrees(int e, int maxdeg,
                                               std::map<int, std::vector<std::string>>& memo) {
  auto it = memo.find(e);
  if (it != memo.end()) return it->second;
  std::vector<std::string> out;
  for (int k = 1; k <= e && 2 * k <= maxdeg; ++k) {
    const int slots = 2 * k - 1;
    // positions of the k-1 opening leaves
    std::vector<int> mask(idx(slots), 0);
    std::fill(mask.begin(), mask.begin() + (k - 1), 1);
    std::sort(mask.begin(), mask.end());
    do {
      // distribute e-k among the k other slots
      std::vector<int> sizes(idx(k), 0);
      std::function<void(int, int)> dist = [&](int slot, int left) {
        if (slot == k) {
          if (left != 0) return;
          std::vector<std::vector<std::string>> choices;
          int s = 0;
          for (int j = 0; j < slots; ++j) {
            if (mask[idx(j)]) {
              choices.push_back({"o"});
            } else {
              const int sz = sizes[idx(s++)];
              choices.push_back(sz == 0 ? std::vector<std::string>{"c"} : euler_subtrees(sz, maxdeg, memo));
            }
          }
          std::string cur = "(";
          combine_slots(choices, 0, cur, out, ")");
          return;
        }
        for (int sz = 0; sz <= left; ++sz) {
          sizes[idx(slot)] = sz;
          dist(slot + 1, left - sz);
        }
      };
      dist(0, e - k);
    } while (std::next_permutation(mask.begin(), mask.end()));
  }
  return memo[e] = std::move(out);
}

struct BipGen {
  int m;
  std::map<int, std::vector<std::string>> white, black;

  const std::vector<std::string>& whites(int n) {
    auto it = white.find(n);
    if (it != white.end()) return it->second;
    std::vector<std::string> out;
    for (const auto& b : blacks(n)) {
      for (int p = 0; p <= m - 2; ++p) {
        out.push_back("(" + std::string(idx(p), 'o') + b + std::string(idx(m - 2 - p), 'o') + ")");
      }
    }
    return white[n] = std::move(out);
  }
  const std::vector<std::string>& blacks(int n) {
    auto it = black.find(n);
    if (it != black.end()) return it->second;
    std::vector<std::string> out;
    std::vector<int> sizes(idx(m - 1), 0);
    std::function<void(int, int)> dist = [&](int slot, int left) {
      if (slot == m - 1) {
        if (left != 0) return;
        std::vector<std::vector<std::string>> choices;
        for (int s : sizes) choices.push_back(s == 0 ? std::vector<std::string>{"c"} : whites(s));
        std::string cur = "(";
        combine_slots(choices, 0, cur, out, ")");
        return;
      }
      for (int s = 0; s <= left; ++s) {
        sizes[idx(slot)] = s;
        dist(slot + 1, left - s);
      }
    };
    dist(0, n - 1);
    return black[n] = std::move(out);
  }
};

}  // namespace

std::vector<BlossomTree> eulerian_trees(int half_degree, int max_node_degree) {
  if (half_degree < 0) fail(ErrorKind::kDomain, "negative half-degree");
  if (half_degree == 0) return {BlossomTree::parse("c")};
  std::map<int, std::vector<std::string>> memo;
  std::vector<BlossomTree> out;
  for (const auto& w : euler_subtrees(half_degree, max_node_degree, memo)) out.push_back(BlossomTree::parse(w));
  return out;
}

std::vector<BlossomTree> bipartite_trees(int m, int black) {
  if (m < 2 || black < 0) fail(ErrorKind::kDomain, "bipartite trees need m >= 2 and black >= 0");
  if (black == 0) return {BlossomTree::parse("c")};
  BipGen gen{m, {}, {}};
  std::vector<BlossomTree> out;
  for (const auto& w : gen.whites(black)) out.push_back(BlossomTree::parse(w));
  return out;
}

std::vector<BlossomTree> enrichments(const BlossomTree& t, int i) {
  LeafPath lp = leaf_path(t, i);
  std::vector<BlossomTree> out;
  if (!lp.balanced) return out;
  BlossomTree cur = t;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == lp.closing_leaves.size()) {
      out.push_back(cur);
      return;
    }
    for (int iota = 0; iota < lp.heights[k]; ++iota) {
      cur.at(lp.closing_leaves[k]).iota = iota;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

long enrichment_count(const BlossomTree& t, int i) {
  LeafPath lp = leaf_path(t, i);
  if (!lp.balanced) return 0;
  long c = 1;
  for (int h : lp.heights) c *= h;
  return c;
}

}  // namespace mapgen
