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

#include "mapgen/cmap.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <sstream>

#include "mapgen/error.hpp"

namespace mapgen {

namespace {

std::size_t idx(int d) { return static_cast<std::size_t>(d); }

void check_permutation(const std::vector<int>& p, const char* what) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || idx(x) >= p.size() || seen[idx(x)]) {
      fail(ErrorKind::kStructural, std::string(what) + " is not a permutation");
    }
    seen[idx(x)] = 1;
  }
}

}  // namespace

CombMap CombMap::build(std::vector<int> sigma, std::vector<int> alpha, int root,
                       std::vector<Color> colors, std::vector<Mark> marks) {
  const std::size_t n = sigma.size();
  if (n == 0) fail(ErrorKind::kStructural, "a map needs at least one edge");
  if (alpha.size() != n) fail(ErrorKind::kStructural, "sigma and alpha differ in size");
  if (n % 2 != 0) fail(ErrorKind::kStructural, "odd number of darts");
  check_permutation(sigma, "sigma");
  check_permutation(alpha, "alpha");
  for (std::size_t d = 0; d < n; ++d) {
    if (alpha[d] == static_cast<int>(d)) fail(ErrorKind::kStructural, "alpha has a fixed point");
    if (alpha[idx(alpha[d])] != static_cast<int>(d)) {
      fail(ErrorKind::kStructural, "alpha is not an involution");
    }
  }
  if (root < 0 || idx(root) >= n) fail(ErrorKind::kStructural, "root dart out of range");

  CombMap m;
  m.sigma_ = std::move(sigma);
  m.alpha_ = std::move(alpha);
  m.root_ = root;
  m.derive();
  if (!colors.empty() && static_cast<int>(colors.size()) != m.num_vertices()) {
    fail(ErrorKind::kStructural, "one color per vertex expected");
  }
  m.colors_ = std::move(colors);
  m.marks_ = std::move(marks);
  m.mark_of_edge_.assign(idx(m.num_edges()), -1);
  for (std::size_t k = 0; k < m.marks_.size(); ++k) {
    const Mark& mk = m.marks_[k];
    if (mk.out < 0 || idx(mk.out) >= n || m.alpha(mk.out) != mk.in) {
      fail(ErrorKind::kStructural, "mark does not name the two darts of an edge");
    }
    if (mk.mult < 1) fail(ErrorKind::kStructural, "mark multiplicity must be >= 1");
    int e = m.edge_of(mk.out);
    if (m.mark_of_edge_[idx(e)] >= 0) fail(ErrorKind::kStructural, "edge marked twice");
    m.mark_of_edge_[idx(e)] = static_cast<int>(k);
  }
  return m;
}

void CombMap::derive() {
  const int n = n_darts();
  sigma_inv_.assign(idx(n), 0);
  for (int d = 0; d < n; ++d) sigma_inv_[idx(sigma(d))] = d;

  vertex_of_.assign(idx(n), -1);
  vertex_first_.clear();
  for (int d = 0; d < n; ++d) {
    if (vertex_of_[idx(d)] >= 0) continue;
    const int v = static_cast<int>(vertex_first_.size());
    vertex_first_.push_back(d);
    for (int x = d; vertex_of_[idx(x)] < 0; x = sigma(x)) vertex_of_[idx(x)] = v;
  }
  edge_of_.assign(idx(n), -1);
  edge_dart_.clear();
  for (int d = 0; d < n; ++d) {
    if (edge_of_[idx(d)] >= 0) continue;
    edge_of_[idx(d)] = edge_of_[idx(alpha(d))] = static_cast<int>(edge_dart_.size());
    edge_dart_.push_back(d);
  }
  std::vector<char> seen(idx(n), 0);
  num_faces_ = 0;
  for (int d = 0; d < n; ++d) {
    if (seen[idx(d)]) continue;
    ++num_faces_;
    for (int x = d; !seen[idx(x)]; x = face_next(x)) seen[idx(x)] = 1;
  }
  // connectivity
  std::vector<char> reached(idx(n), 0);
  std::vector<int> stack{root_};
  reached[idx(root_)] = 1;
  int count = 1;
  while (!stack.empty()) {
    int d = stack.back();
    stack.pop_back();
    for (int x : {sigma(d), alpha(d)}) {
      if (!reached[idx(x)]) {
        reached[idx(x)] = 1;
        ++count;
        stack.push_back(x);
      }
    }
  }
  if (count != n) fail(ErrorKind::kStructural, "map is not connected");
  const int chi = num_vertices() - num_edges() + num_faces_;
  if (chi > 2 || (2 - chi) % 2 != 0) {
    fail(ErrorKind::kInvariant, "Euler characteristic " + std::to_string(chi) + " is impossible");
  }
  genus_ = (2 - chi) / 2;
}

int CombMap::degree(int v) const {
  if (is_vertex_map()) return 0;
  int k = 0;
  const int start = vertex_first_[idx(v)];
  int d = start;
  do {
    ++k;
    d = sigma(d);
  } while (d != start);
  return k;
}

std::vector<int> CombMap::darts_around(int v) const {
  std::vector<int> out;
  if (is_vertex_map()) return out;
  const int start = vertex_first_[idx(v)];
  int d = start;
  do {
    out.push_back(d);
    d = sigma(d);
  } while (d != start);
  return out;
}

std::vector<int> CombMap::degree_profile() const {
  std::vector<int> out;
  for (int v = 0; v < num_vertices(); ++v) out.push_back(degree(v));
  std::sort(out.begin(), out.end());
  return out;
}

bool CombMap::is_eulerian() const {
  for (int v = 0; v < num_vertices(); ++v) {
    if (degree(v) % 2 != 0) return false;
  }
  return true;
}

bool CombMap::is_bipartite_regular(int m) const {
  if (is_vertex_map()) return false;
  std::vector<Color> cols = colors_;
  if (cols.empty()) {
    try {
      cols = with_bipartite_colors().colors_;
    } catch (const Error&) {
      return false;
    }
  }
  if (cols[idx(root_vertex())] != Color::kWhite) return false;
  for (int d = 0; d < n_darts(); ++d) {
    if (cols[idx(vertex_of(d))] == cols[idx(vertex_of(alpha(d)))]) return false;
  }
  for (int v = 0; v < num_vertices(); ++v) {
    if (degree(v) != m) return false;
  }
  return true;
}

std::vector<Mark> CombMap::sorted_marks() const {
  std::vector<Mark> out = marks_;
  std::sort(out.begin(), out.end(),
            [](const Mark& a, const Mark& b) { return a.out < b.out; });
  return out;
}

CombMap CombMap::relabeled(const std::vector<int>& perm) const {
  if (is_vertex_map()) return *this;
  const int n = n_darts();
  if (static_cast<int>(perm.size()) != n) fail(ErrorKind::kStructural, "relabeling size mismatch");
  check_permutation(perm, "relabeling");
  std::vector<int> s(idx(n)), a(idx(n));
  for (int d = 0; d < n; ++d) {
    s[idx(perm[idx(d)])] = perm[idx(sigma(d))];
    a[idx(perm[idx(d)])] = perm[idx(alpha(d))];
  }
  std::vector<Mark> mk;
  for (const Mark& x : marks_) mk.push_back({perm[idx(x.out)], perm[idx(x.in)], x.mult});
  CombMap out = build(std::move(s), std::move(a), perm[idx(root_)], {}, std::move(mk));
  if (!colors_.empty()) {
    std::vector<Color> c(idx(out.num_vertices()));
    for (int d = 0; d < n; ++d) c[idx(out.vertex_of(perm[idx(d)]))] = colors_[idx(vertex_of(d))];
    out.colors_ = std::move(c);
  }
  return out;
}

std::vector<int> CombMap::canonical_labels() const {
  const int n = n_darts();
  std::vector<int> label(idx(n), -1);
  if (n == 0) return label;
  std::queue<int> q;
  int next = 0;
  label[idx(root_)] = next++;
  q.push(root_);
  while (!q.empty()) {
    int d = q.front();
    q.pop();
    for (int x : {sigma(d), alpha(d)}) {
      if (label[idx(x)] < 0) {
        label[idx(x)] = next++;
        q.push(x);
      }
    }
  }
  return label;
}

CombMap CombMap::with_root(int d) const {
  return build(sigma_, alpha_, d, colors_, marks_);
}

CombMap CombMap::with_marks(std::vector<Mark> marks) const {
  if (is_vertex_map()) {
    if (!marks.empty()) fail(ErrorKind::kStructural, "the vertex map has no edges to mark");
    return *this;
  }
  return build(sigma_, alpha_, root_, colors_, std::move(marks));
}

CombMap CombMap::with_colors(std::vector<Color> colors) const {
  if (is_vertex_map()) {
    CombMap m = *this;
    m.colors_ = std::move(colors);
    return m;
  }
  return build(sigma_, alpha_, root_, std::move(colors), marks_);
}

CombMap CombMap::with_bipartite_colors() const {
  if (is_vertex_map()) return with_colors({Color::kWhite});
  std::vector<int> col(idx(num_vertices()), -1);
  col[idx(root_vertex())] = 0;
  std::vector<int> stack{root_vertex()};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int d : darts_around(v)) {
      int w = vertex_of(alpha(d));
      if (col[idx(w)] < 0) {
        col[idx(w)] = 1 - col[idx(v)];
        stack.push_back(w);
      } else if (col[idx(w)] == col[idx(v)]) {
        fail(ErrorKind::kDomain, "map is not bipartite");
      }
    }
  }
  std::vector<Color> c;
  for (int x : col) c.push_back(x == 0 ? Color::kWhite : Color::kBlack);
  return with_colors(std::move(c));
}

// ---------------------------------------------------------------- text form

std::string CombMap::to_text() const {
  std::ostringstream os;
  if (is_vertex_map()) {
    os << "0; -; -; -; " << (colors_.empty() ? "-" : "w") << "; -";
    return os.str();
  }
  os << n_darts() << "; ";
  for (int v = 0; v < num_vertices(); ++v) {
    os << '(';
    bool first = true;
    for (int d : darts_around(v)) {
      os << (first ? "" : " ") << d + 1;
      first = false;
    }
    os << ')';
  }
  os << "; ";
  for (int e = 0; e < num_edges(); ++e) {
    os << '(' << edge_dart(e) + 1 << ' ' << alpha(edge_dart(e)) + 1 << ')';
  }
  os << "; " << root_ + 1 << "; ";
  if (colors_.empty()) {
    os << '-';
  } else {
    for (Color c : colors_) os << (c == Color::kWhite ? 'w' : 'b');
  }
  os << "; ";
  if (marks_.empty()) {
    os << '-';
  } else {
    for (const Mark& mk : sorted_marks()) {
      os << '(' << mk.out + 1 << ',' << mk.in + 1 << ',' << mk.mult << ')';
    }
  }
  return os.str();
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

int to_int(const std::string& s) {
  if (s.empty()) fail(ErrorKind::kParse, "missing integer");
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      fail(ErrorKind::kParse, "bad integer '" + s + "'");
    }
  }
  if (s.size() > 9) fail(ErrorKind::kParse, "integer too large '" + s + "'");
  return std::stoi(s);
}

// "(1 2 3)(4 5)" or "(1,3,2)(...)" -> groups of integers
std::vector<std::vector<int>> parse_groups(const std::string& field) {
  std::vector<std::vector<int>> out;
  std::size_t i = 0;
  const std::string f = trim(field);
  while (i < f.size()) {
    if (std::isspace(static_cast<unsigned char>(f[i]))) {
      ++i;
      continue;
    }
    if (f[i] != '(') fail(ErrorKind::kParse, "expected '(' in '" + f + "'");
    auto close = f.find(')', i);
    if (close == std::string::npos) fail(ErrorKind::kParse, "unbalanced '(' in '" + f + "'");
    std::string body = f.substr(i + 1, close - i - 1);
    for (char& c : body) {
      if (c == ',') c = ' ';
    }
    std::istringstream is(body);
    std::vector<int> g;
    std::string tok;
    while (is >> tok) g.push_back(to_int(tok));
    out.push_back(std::move(g));
    i = close + 1;
  }
  return out;
}

}  // namespace

CombMap CombMap::parse(const std::string& text) {
  std::vector<std::string> fields;
  {
    std::string cur;
    for (char c : text) {
      if (c == ';') {
        fields.push_back(trim(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    fields.push_back(trim(cur));
  }
  if (fields.size() < 4 || fields.size() > 6) {
    fail(ErrorKind::kParse, "map text needs 4 to 6 ';'-separated fields");
  }
  const int n = to_int(fields[0]);
  auto optional_field = [&](std::size_t k) {
    return k < fields.size() && fields[k] != "-" && !fields[k].empty() ? fields[k]
                                                                        : std::string();
  };
  if (n == 0) {
    CombMap m;
    std::string c = optional_field(4);
    if (c == "w") m.colors_ = {Color::kWhite};
    return m;
  }
  auto dart = [&](int x) {
    if (x < 1 || x > n) fail(ErrorKind::kParse, "dart " + std::to_string(x) + " out of range");
    return x - 1;
  };
  std::vector<int> sigma(idx(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<char> used(idx(n), 0);
  for (const auto& cyc : parse_groups(fields[1])) {
    if (cyc.empty()) fail(ErrorKind::kParse, "empty sigma cycle");
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      int d = dart(cyc[j]);
      if (used[idx(d)]) fail(ErrorKind::kParse, "dart repeated in sigma");
      used[idx(d)] = 1;
      sigma[idx(d)] = dart(cyc[(j + 1) % cyc.size()]);
    }
  }
  std::vector<int> alpha(idx(n), -1);
  for (const auto& pr : parse_groups(fields[2])) {
    if (pr.size() != 2) fail(ErrorKind::kParse, "alpha cycles must be pairs");
    int a = dart(pr[0]), b = dart(pr[1]);
    if (alpha[idx(a)] >= 0 || alpha[idx(b)] >= 0) fail(ErrorKind::kParse, "dart repeated in alpha");
    alpha[idx(a)] = b;
    alpha[idx(b)] = a;
  }
  for (int x : alpha) {
    if (x < 0) fail(ErrorKind::kParse, "alpha leaves a dart unpaired");
  }
  const int root = dart(to_int(fields[3]));
  std::vector<Color> colors;
  for (char c : optional_field(4)) {
    if (c == 'w') {
      colors.push_back(Color::kWhite);
    } else if (c == 'b') {
      colors.push_back(Color::kBlack);
    } else {
      fail(ErrorKind::kParse, "colors must be w/b");
    }
  }
  std::vector<Mark> marks;
  const std::string mf = optional_field(5);
  if (!mf.empty()) {
    for (const auto& g : parse_groups(mf)) {
      if (g.size() != 3) fail(ErrorKind::kParse, "marks are (out,in,mult)");
      marks.push_back({dart(g[0]), dart(g[1]), g[2]});
    }
  }
  return build(std::move(sigma), std::move(alpha), root, std::move(colors), std::move(marks));
}

bool rooted_isomorphic(const CombMap& a, const CombMap& b) {
  if (a.n_darts() != b.n_darts()) return false;
  return a.canonical() == b.canonical();
}

// -------------------------------------------------------------- orientation

void Orientation::set_tail(const CombMap& m, int d) {
  out[idx(d)] = 1;
  out[idx(m.alpha(d))] = 0;
}

void Orientation::reverse(const CombMap& m, int d) {
  std::swap(out[idx(d)], out[idx(m.alpha(d))]);
}

bool is_valid_orientation(const CombMap& m, const Orientation& o) {
  if (static_cast<int>(o.out.size()) != m.n_darts()) return false;
  for (int d = 0; d < m.n_darts(); ++d) {
    if (o.is_out(d) == o.is_out(m.alpha(d))) return false;
  }
  return true;
}

std::vector<int> outdegrees(const CombMap& m, const Orientation& o) {
  std::vector<int> deg(idx(m.num_vertices()), 0);
  for (int d = 0; d < m.n_darts(); ++d) {
    if (o.is_out(d)) ++deg[idx(m.vertex_of(d))];
  }
  return deg;
}

bool respects_marks(const CombMap& m, const Orientation& o) {
  for (const Mark& mk : m.marks()) {
    if (!o.is_out(mk.out)) return false;
  }
  return true;
}

std::string orientation_to_text(const CombMap& m, const Orientation& o) {
  std::ostringstream os;
  bool first = true;
  for (int d = 0; d < m.n_darts(); ++d) {
    if (o.is_out(d)) {
      os << (first ? "" : " ") << d + 1;
      first = false;
    }
  }
  return os.str();
}

}  // namespace mapgen
