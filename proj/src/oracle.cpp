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

#include "mapgen/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "mapgen/error.hpp"
#include "mapgen/orient.hpp"

namespace mapgen {

namespace {

std::size_t idx(int d) { return static_cast<std::size_t>(d); }

void check_cap(int edges) {
  const int cap = oracle_edge_cap();
  if (edges > cap) {
    fail(ErrorKind::kCapExceeded, "oracle refuses " + std::to_string(edges) +
                                      " edges; the cap is " + std::to_string(cap) +
                                      " (set MAPGEN_MAX_EDGES to raise it)");
  }
}

// sigma and alpha relabeled by breadth-first search from the root, sigma
// first, concatenated.
std::vector<int> canonical_key(const std::vector<int>& sigma, const std::vector<int>& alpha,
                               int root) {
  const std::size_t n = sigma.size();
  std::vector<int> label(n, -1), order;
  order.reserve(n);
  label[idx(root)] = 0;
  order.push_back(root);
  for (std::size_t head = 0; head < order.size(); ++head) {
    int d = order[head];
    for (int x : {sigma[idx(d)], alpha[idx(d)]}) {
      if (label[idx(x)] < 0) {
        label[idx(x)] = static_cast<int>(order.size());
        order.push_back(x);
      }
    }
  }
  std::vector<int> key(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    int d = order[k];
    key[k] = label[idx(sigma[idx(d)])];
    key[n + k] = label[idx(alpha[idx(d)])];
  }
  return key;
}

CombMap from_key(const std::vector<int>& key) {
  const std::size_t n = key.size() / 2;
  std::vector<int> sigma(key.begin(), key.begin() + static_cast<long>(n));
  std::vector<int> alpha(key.begin() + static_cast<long>(n), key.end());
  return CombMap::build(std::move(sigma), std::move(alpha), 0);
}

bool connected(const std::vector<int>& vertex_of, int nv, const std::vector<int>& alpha) {
  std::vector<int> parent(idx(nv));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[idx(x)] == x ? x : parent[idx(x)] = find(parent[idx(x)]);
  };
  int comps = nv;
  for (std::size_t d = 0; d < alpha.size(); ++d) {
    int a = find(vertex_of[d]), b = find(vertex_of[idx(alpha[d])]);
    if (a != b) {
      parent[idx(a)] = b;
      --comps;
    }
  }
  return comps == 1;
}

BigInt factorial(int n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt power(int base, int e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

int oracle_edge_cap() {
  if (const char* env = std::getenv("MAPGEN_MAX_EDGES")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 64) return static_cast<int>(v);
    fail(ErrorKind::kParse, "MAPGEN_MAX_EDGES must be a positive integer");
  }
  return 6;
}

ProfileEnumeration enumerate_profile(const std::vector<int>& degrees) {
  ProfileEnumeration out;
  out.profile = degrees;
  std::sort(out.profile.begin(), out.profile.end());
  int n = 0;
  for (int d : out.profile) {
    if (d < 1) fail(ErrorKind::kDomain, "vertex degrees must be positive");
    n += d;
  }
  if (out.profile.empty() || n % 2 != 0) fail(ErrorKind::kDomain, "total degree must be even and positive");
  check_cap(n / 2);

  const int nv = static_cast<int>(out.profile.size());
  std::vector<int> sigma(idx(n)), vertex_of(idx(n)), roots;
  for (int v = 0, base = 0; v < nv; ++v) {
    const int d = out.profile[idx(v)];
    for (int j = 0; j < d; ++j) {
      sigma[idx(base + j)] = base + (j + 1) % d;
      vertex_of[idx(base + j)] = v;
    }
    if (v == 0 || d != out.profile[idx(v - 1)]) roots.push_back(base);
    base += d;
  }

  std::set<std::vector<int>> keys;
  std::vector<int> alpha(idx(n), -1);
  std::function<void()> pair_next = [&]() {
    int a = 0;
    while (a < n && alpha[idx(a)] >= 0) ++a;
    if (a == n) {
      ++out.gluings;
      if (!connected(vertex_of, nv, alpha)) return;
      ++out.connected_gluings;
      for (int r : roots) keys.insert(canonical_key(sigma, alpha, r));
      return;
    }
    for (int b = a + 1; b < n; ++b) {
      if (alpha[idx(b)] >= 0) continue;
      alpha[idx(a)] = b;
      alpha[idx(b)] = a;
      pair_next();
      alpha[idx(a)] = alpha[idx(b)] = -1;
    }
  };
  pair_next();
  for (const auto& k : keys) out.maps.push_back(from_key(k));

  BigInt denom = 1;
  for (std::size_t i = 0; i < out.profile.size();) {
    std::size_t j = i;
    while (j < out.profile.size() && out.profile[j] == out.profile[i]) ++j;
    const int count = static_cast<int>(j - i);
    denom *= power(out.profile[i], count) * factorial(count);
    i = j;
  }
  out.quotient_count = BigInt(n) * BigInt(out.connected_gluings) / denom;
  return out;
}

ProfileEnumeration enumerate_bipartite(int m, int black) {
  if (m < 1 || black < 1) fail(ErrorKind::kDomain, "bipartite enumeration needs m >= 1 and black >= 1");
  check_cap(m * black);
  ProfileEnumeration out;
  out.profile.assign(idx(2 * black), m);
  const int half = m * black, n = 2 * half, nv = 2 * black;
  std::vector<int> sigma(idx(n)), vertex_of(idx(n));
  for (int d = 0; d < n; ++d) {
    const int base = d - d % m;
    sigma[idx(d)] = base + (d % m + 1) % m;
    vertex_of[idx(d)] = d / m;
  }
  std::vector<int> perm(idx(half));
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::vector<int>> keys;
  std::vector<int> alpha(idx(n));
  do {
    for (int w = 0; w < half; ++w) {
      alpha[idx(w)] = half + perm[idx(w)];
      alpha[idx(half + perm[idx(w)])] = w;
    }
    ++out.gluings;
    if (!connected(vertex_of, nv, alpha)) continue;
    ++out.connected_gluings;
    keys.insert(canonical_key(sigma, alpha, 0));
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (const auto& k : keys) out.maps.push_back(from_key(k).with_bipartite_colors());
  out.quotient_count = BigInt(half) * BigInt(out.connected_gluings) /
                       (power(m, 2 * black) * factorial(black) * factorial(black));
  return out;
}

std::vector<std::vector<int>> profiles_for(OracleFamily family, int edges) {
  std::vector<std::vector<int>> out;
  if (family == OracleFamily::kBipartite) fail(ErrorKind::kDomain, "bipartite profiles are fixed by m");
  const int step = family == OracleFamily::kEulerian ? 2 : 1;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int min_part) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = min_part; p <= remaining; p += step) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(2 * edges, step);
  return out;
}

std::vector<CombMap> enumerate_rooted(const EnumSpec& spec) {
  std::vector<CombMap> out;
  auto keep = [&](std::vector<CombMap>&& maps) {
    for (auto& m : maps) {
      if (!spec.genus || m.genus() == *spec.genus) out.push_back(std::move(m));
    }
  };
  if (spec.family == OracleFamily::kBipartite) {
    check_cap(spec.max_edges);
    for (int b = 1; b * spec.m <= spec.max_edges; ++b) keep(enumerate_bipartite(spec.m, b).maps);
    return out;
  }
  if (spec.profile) {
    if (spec.family == OracleFamily::kEulerian) {
      for (int d : *spec.profile) {
        if (d % 2 != 0) fail(ErrorKind::kDomain, "Eulerian profiles have even degrees");
      }
    }
    keep(enumerate_profile(*spec.profile).maps);
    return out;
  }
  check_cap(spec.max_edges);
  for (int e = 1; e <= spec.max_edges; ++e) {
    for (const auto& p : profiles_for(spec.family, e)) keep(enumerate_profile(p).maps);
  }
  return out;
}

CountTable count_table(const std::vector<CombMap>& maps) {
  CountTable t;
  for (const CombMap& m : maps) {
    CountKey k{m.num_edges(), m.degree_profile(), m.genus(), m.num_faces(),
               static_cast<int>(m.marks().size())};
    t[k] += 1;
  }
  return t;
}

std::string count_table_tsv(const CountTable& table) {
  std::ostringstream os;
  os << "E\tprofile\tgenus\tF\tmarks\tvalue\n";
  for (const auto& [k, v] : table) {
    os << k.edges << '\t';
    for (std::size_t j = 0; j < k.profile.size(); ++j) os << (j ? "," : "") << k.profile[j];
    os << '\t' << k.genus << '\t' << k.faces << '\t' << k.marks << '\t' << v.get_str() << '\n';
  }
  return os.str();
}

Exponents profile_exponents(const std::vector<int>& profile, std::size_t arity) {
  Exponents e(arity, 0);
  for (int d : profile) {
    if (d % 2 != 0 || d / 2 < 1 || idx(d / 2) > arity) {
      fail(ErrorKind::kDomain, "degree " + std::to_string(d) + " has no weight indeterminate");
    }
    ++e[idx(d / 2 - 1)];
  }
  return e;
}

SeriesComparison compare_counts(const CountTable& table, const TruncatedSeries& series,
                                OracleFamily family, int m) {
  SeriesComparison rep;
  std::map<std::pair<int, std::vector<int>>, BigInt> by_profile;
  std::map<int, BigInt> by_size;
  for (const auto& [k, v] : table) {
    if (k.marks != 0) continue;
    int size = k.edges;
    if (family == OracleFamily::kBipartite) {
      if (k.edges % m != 0) continue;
      size = k.edges / m;
    }
    if (size > series.order()) continue;
    by_profile[{size, k.profile}] += v;
    by_size[size] += v;
  }
  auto record = [&](int size, const std::string& what, const Rational& want, const BigInt& got) {
    ++rep.checked;
    if (want != Rational(got)) {
      rep.passed = false;
      rep.mismatches.push_back("order " + std::to_string(size) + what + ": series " +
                               want.get_str() + ", oracle " + got.get_str());
    }
  };
  if (series.arity() == 0 || family == OracleFamily::kBipartite) {
    for (const auto& [size, v] : by_size) record(size, "", series[size].constant_term(), v);
  } else {
    for (const auto& [key, v] : by_profile) {
      const auto& [size, prof] = key;
      std::string tag = " profile ";
      for (std::size_t j = 0; j < prof.size(); ++j) tag += (j ? "," : "") + std::to_string(prof[j]);
      record(size, tag, series[size].coefficient(profile_exponents(prof, series.arity())), v);
    }
  }
  return rep;
}

std::vector<CombMap> enumerate_marked_admissible(const std::vector<CombMap>& base, int marks,
                                                 OracleFamily family, int m) {
  std::vector<CombMap> out;
  for (const CombMap& map : base) {
    const int ne = map.num_edges();
    if (marks > ne) continue;
    std::vector<int> pick(idx(ne), 0);
    std::fill(pick.end() - marks, pick.end(), 1);
    do {
      std::vector<int> edges;
      for (int e = 0; e < ne; ++e) {
        if (pick[idx(e)]) edges.push_back(e);
      }
      for (unsigned dirs = 0; dirs < (1u << marks); ++dirs) {
        std::vector<Mark> mk;
        for (int j = 0; j < marks; ++j) {
          int d = map.edge_dart(edges[idx(j)]);
          if (dirs >> j & 1u) d = map.alpha(d);
          mk.push_back({d, map.alpha(d), 1});
        }
        CombMap cand = map.with_marks(std::move(mk));
        bool ok = family == OracleFamily::kBipartite ? is_admissible_bipartite(cand, m)
                                                     : is_admissible_eulerian(cand);
        if (ok) out.push_back(std::move(cand));
      }
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return out;
}

int root_index(const CombMap& m) {
  if (m.is_vertex_map()) return 1;
  int d = m.root();
  const int deg = m.degree(m.root_vertex());
  for (int p = 1; p <= deg; ++p, d = m.sigma(d)) {
    if (!m.is_marked(m.edge_of(d))) return p;
  }
  return deg + 1;
}

MarkedCounts marked_counts(const std::vector<CombMap>& marked, OracleFamily family) {
  MarkedCounts c;
  for (const CombMap& m : marked) {
    ++c.total;
    const bool root_marked = !m.is_vertex_map() && m.is_marked(m.edge_of(m.root()));
    (root_marked ? c.root_marked : c.root_unmarked) += 1;
    c.weighted += family == OracleFamily::kBipartite ? root_index(m) : (root_marked ? 2 : 1);
  }
  return c;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt face_colorings(int faces, int N, bool surjective) {
  if (!surjective) return power(N, faces);
  BigInt total = 0;
  for (int j = 0; j <= N; ++j) {
    BigInt term = binomial(N, j) * power(N - j, faces);
    total += (j % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

BigInt face_colorings_explicit(int faces, int N, bool surjective) {
  if (N <= 0) return faces == 0 ? 1 : 0;
  long count = 0;
  std::vector<int> col(idx(faces), 0);
  for (;;) {
    if (surjective) {
      std::vector<char> used(idx(N), 0);
      int distinct = 0;
      for (int c : col) {
        if (!used[idx(c)]) {
          used[idx(c)] = 1;
          ++distinct;
        }
      }
      if (distinct == N) ++count;
    } else {
      ++count;
    }
    int j = 0;
    while (j < faces && ++col[idx(j)] == N) col[idx(j++)] = 0;
    if (j == faces) break;
  }
  return count;
}

BigInt face_colored_total(const std::vector<CombMap>& maps, int N, bool surjective) {
  BigInt total = 0;
  for (const CombMap& m : maps) total += face_colorings(m.num_faces(), N, surjective);
  return total;
}

BigInt harer_zagier(int n, int N) {
  BigInt dfact = 1;
  for (int k = 2 * n - 1; k > 1; k -= 2) dfact *= k;
  BigInt sum = 0;
  for (int a = 1; a <= N; ++a) sum += binomial(N, a) * binomial(n, a - 1) * power(2, a - 1);
  return dfact * sum;
}

BigInt two_vertex_bipartite(int m, int N) {
  BigInt sum = 0;
  for (int a = 1; a <= m; ++a) sum += binomial(N, a) * binomial(m, a - 1);
  return factorial(m) * sum;
}

}  // namespace mapgen
