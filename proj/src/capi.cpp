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

#include "mapgen/mapgen.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "mapgen/analytic.hpp"
#include "mapgen/blossom.hpp"
#include "mapgen/error.hpp"
#include "mapgen/oracle.hpp"
#include "mapgen/orient.hpp"
#include "mapgen/recursion.hpp"
#include "mapgen/verify.hpp"

struct mapgen_system {
  mapgen::SystemSolution sol;
};
struct mapgen_series {
  mapgen::TruncatedSeries s;
};
struct mapgen_map {
  mapgen::CombMap m;
};
struct mapgen_map_list {
  std::vector<mapgen_map> maps;
};
struct mapgen_tree {
  mapgen::BlossomTree t;
};

namespace {

using namespace mapgen;

thread_local std::string g_last_error;

struct ArgError {
  std::string what;
};

mapgen_status status_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::kStructural: return MAPGEN_E_STRUCTURAL;
    case ErrorKind::kDomain: return MAPGEN_E_DOMAIN;
    case ErrorKind::kRange: return MAPGEN_E_RANGE;
    case ErrorKind::kPrecondition: return MAPGEN_E_PRECONDITION;
    case ErrorKind::kParse: return MAPGEN_E_PARSE;
    case ErrorKind::kInvariant: return MAPGEN_E_INVARIANT;
    case ErrorKind::kCapExceeded: return MAPGEN_E_CAP;
  }
  return MAPGEN_E_INTERNAL;
}

template <typename F>
mapgen_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const ArgError& e) {
    g_last_error = e.what;
    return MAPGEN_E_ARG;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return MAPGEN_E_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MAPGEN_E_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return MAPGEN_E_INTERNAL;
  }
}

template <typename T>
void need(const T* p, const char* what) {
  if (p == nullptr) throw ArgError{std::string(what) + " is null"};
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Family parse_family(const std::string& f) {
  for (Family x : {Family::kEulerian, Family::kEulerianQ, Family::kPlanarR, Family::kBipartite,
                   Family::kThreeRegular}) {
    if (family_name(x) == f) return x;
  }
  throw ArgError{"unknown family '" + f + "'"};
}

OracleFamily parse_oracle_family(const std::string& f) {
  if (f == "eulerian") return OracleFamily::kEulerian;
  if (f == "bipartite") return OracleFamily::kBipartite;
  if (f == "general") return OracleFamily::kGeneral;
  throw ArgError{"unknown enumeration family '" + f + "'"};
}

TreeFamily tree_family(mapgen_tree_family f) {
  if (f == MAPGEN_TREE_EULERIAN) return TreeFamily::kEulerian;
  if (f == MAPGEN_TREE_BIPARTITE) return TreeFamily::kBipartite;
  throw ArgError{"unknown tree family"};
}

WeightSpec weights_of(const char* w) { return w && *w ? WeightSpec::parse(w) : WeightSpec::regular(4); }

mapgen_status put_series(TruncatedSeries s, mapgen_series** out) {
  need(out, "out");
  *out = new mapgen_series{std::move(s)};
  return MAPGEN_OK;
}

}  // namespace

extern "C" {

const char* mapgen_last_error(void) { return g_last_error.c_str(); }

const char* mapgen_status_name(mapgen_status status) {
  switch (status) {
    case MAPGEN_OK: return "ok";
    case MAPGEN_E_STRUCTURAL: return "structural";
    case MAPGEN_E_DOMAIN: return "domain";
    case MAPGEN_E_RANGE: return "range";
    case MAPGEN_E_PRECONDITION: return "precondition";
    case MAPGEN_E_PARSE: return "parse";
    case MAPGEN_E_INVARIANT: return "invariant";
    case MAPGEN_E_CAP: return "cap exceeded";
    case MAPGEN_E_VERIFY: return "verification failed";
    case MAPGEN_E_ARG: return "bad argument";
    case MAPGEN_E_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* mapgen_version(void) { return "0.1.0"; }

void mapgen_string_free(char* s) { std::free(s); }

// -------------------------------------------------------------- series

mapgen_status mapgen_system_solve(const mapgen_system_config* cfg, mapgen_system** out) {
  return guarded([&] {
    need(cfg, "cfg");
    need(out, "out");
    need(cfg->family, "family");
    const Family f = parse_family(cfg->family);
    auto sys = std::make_unique<mapgen_system>();
    switch (f) {
      case Family::kEulerian: sys->sol = solve_eulerian(weights_of(cfg->weights), cfg->order, cfg->i_max); break;
      case Family::kEulerianQ:
        sys->sol = solve_eulerian(weights_of(cfg->weights), cfg->order, cfg->i_max, LeafWeight::kQAnalog);
        break;
      case Family::kPlanarR:
        sys->sol = solve_eulerian(weights_of(cfg->weights), cfg->order, cfg->i_max, LeafWeight::kPlanarOne);
        break;
      case Family::kBipartite: sys->sol = solve_bipartite(cfg->m, cfg->order, cfg->i_max); break;
      case Family::kThreeRegular: sys->sol = solve_threeregular(cfg->order, cfg->i_max); break;
    }
    *out = sys.release();
    return MAPGEN_OK;
  });
}

void mapgen_system_free(mapgen_system* sys) { delete sys; }

mapgen_status mapgen_system_series(const mapgen_system* sys, const char* which, int i, mapgen_series** out) {
  return guarded([&] {
    need(sys, "sys");
    need(which, "which");
    const std::string w = which;
    if (w == "r") return put_series(sys->sol.r_at(i), out);
    if (w == "q") {
      if (sys->sol.family != Family::kBipartite) fail(ErrorKind::kDomain, "q_i exists for bipartite systems");
      return put_series(sys->sol.q_at(i), out);
    }
    if (w == "s") {
      if (sys->sol.family != Family::kThreeRegular) fail(ErrorKind::kDomain, "s_i exists for 3-regular systems");
      return put_series(sys->sol.s_at(i), out);
    }
    if (w == "m3") {
      if (!sys->sol.m3) fail(ErrorKind::kDomain, "M_3 exists for 3-regular systems");
      return put_series(*sys->sol.m3, out);
    }
    throw ArgError{"unknown series '" + w + "'"};
  });
}

mapgen_status mapgen_system_face_colored(const mapgen_system* sys, int N, int fully, mapgen_series** out) {
  return guarded([&] {
    need(sys, "sys");
    if (fully) {
      if (N < 1) fail(ErrorKind::kDomain, "the fully colored series needs N >= 1");
      return put_series(face_colored_T_tilde(sys->sol, N), out);
    }
    if (N < 0) fail(ErrorKind::kDomain, "N must be >= 0");
    return put_series(face_colored_T(sys->sol, N == 0 ? std::nullopt : std::optional<int>(N)), out);
  });
}

mapgen_status mapgen_face_colored_i_max(const char* family, int m, int order, int* out) {
  return guarded([&] {
    need(family, "family");
    need(out, "out");
    *out = face_colored_required_i_max(parse_family(family), m, order);
    return MAPGEN_OK;
  });
}

mapgen_status mapgen_riccati(int p, int order, mapgen_series** out) {
  return guarded([&] { return put_series(solve_riccati(p, order), out); });
}

mapgen_status mapgen_contfrac(int p, int depth, int order, mapgen_series** out) {
  return guarded([&] { return put_series(contfrac_convergent(p, depth, order), out); });
}

mapgen_status mapgen_ode(const char* family, int order, mapgen_series** out) {
  return guarded([&] {
    need(family, "family");
    return put_series(solve_family_ode(parse_ode_family(family), order), out);
  });
}

mapgen_status mapgen_series_text(const mapgen_series* s, char** out) {
  return guarded([&] {
    need(s, "series");
    need(out, "out");
    *out = dup(s->s.to_text());
    return MAPGEN_OK;
  });
}

mapgen_status mapgen_series_json(const mapgen_series* s, char** out) {
  return guarded([&] {
    need(s, "series");
    need(out, "out");
    *out = dup(s->s.to_json());
    return MAPGEN_OK;
  });
}

mapgen_status mapgen_series_order(const mapgen_series* s, int* out) {
  return guarded([&] {
    need(s, "series");
    need(out, "out");
    *out = s->s.order();
    return MAPGEN_OK;
  });
}

mapgen_status mapgen_series_coefficient(const mapgen_series* s, int n, char** out) {
  return guarded([&] {
    need(s, "series");
    need(out, "out");
    *out = dup(s->s[n].to_string(s->s.indeterminates()));
    return MAPGEN_OK;
  });
}

void mapgen_series_free(mapgen_series* s) { delete s; }

// ---------------------------------------------------------------- maps

mapgen_status mapgen_map_parse(const char* text, mapgen_map** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new mapgen_map{CombMap::parse(text)};
    return MAPGEN_OK;
  });
}

mapgen_status mapgen_map_text(const mapgen_map* map, char** out) {
  return guarded([&] {
    need(map, "map");
    need(out, "out");
    *out = dup(map->m.to_text());
    return MAPGEN_OK;
  });
}

mapgen_status mapgen_map_info_get(const mapgen_map* map, mapgen_map_info* out) {
  return guarded([&] {
    need(map, "map");
    need(out, "out");
    const CombMap& m = map->m;
    *out = {m.n_darts(), m.num_vertices(), m.num_edges(), m.num_faces(), m.genus(),
            static_cast<int>(m.marks().size())};
    return MAPGEN_OK;
  });
}

mapgen_status mapgen_map_canonical(const mapgen_map* map, mapgen_map** out) {
  return guarded([&] {
    need(map, "map");
    need(out, "out");
    *out = new mapgen_map{map->m.canonical()};
    return MAPGEN_OK;
  });
}

mapgen_status mapgen_map_equal(const mapgen_map* a, const mapgen_map* b, int* out) {
  return guarded([&] {
    need(a, "a");
    need(b, "b");
    need(out, "out");
    *out = a->m == b->m;
    return MAPGEN_OK;
  });
}

void mapgen_map_free(mapgen_map* map) { delete map; }

mapgen_status mapgen_minimal_orientation(const mapgen_map* map, const int* alpha, size_t n_alpha, int m,
                                         char** out) {
  return guarded([&] {
    need(map, "map");
    need(out, "out");
    const CombMap& cm = map->m;
    Outdegrees a;
    if (alpha != nullptr) {
      a.assign(alpha, alpha + n_alpha);
    } else if (m > 0) {
      a = one_orientation_alpha(cm, m);
    } else {
      a = eulerian_alpha(cm);
    }
    if (static_cast<int>(a.size()) != cm.num_vertices()) {
      fail(ErrorKind::kDomain, "alpha needs one value per vertex");
    }
    MinimalResult r = cm.has_marks() ? canonical_marked_orientation(cm, a) : bernardi_minimal(cm, a);
    std::ostringstream os;
    os << "tails (";
    for (int e = 0; e < cm.num_edges(); ++e) {
      const int d = cm.edge_dart(e);
      os << (e ? " " : "") << (r.orientation.is_out(d) ? d : cm.alpha(d)) + 1;
    }
    os << "); tree (";
    for (std::size_t k = 0; k < r.tree_edges.size(); ++k) os << (k ? " " : "") << r.tree_edges[k] + 1;
    os << ")";
    *out = dup(os.str());
    return MAPGEN_OK;
  });
}

// --------------------------------------------------------- enumeration

mapgen_status mapgen_enumerate(const mapgen_enum_config* cfg, mapgen_map_list** out) {
  return guarded([&] {
    need(cfg, "cfg");
    need(out, "out");
    need(cfg->family, "family");
    EnumSpec spec;
    spec.family = parse_oracle_family(cfg->family);
    spec.m = cfg->m;
    spec.max_edges = cfg->max_edges;
    if (cfg->profile != nullptr && cfg->profile_len > 0) {
      spec.profile = std::vector<int>(cfg->profile, cfg->profile + cfg->profile_len);
    }
    if (cfg->genus >= 0) spec.genus = cfg->genus;
    if (cfg->marks < 0) fail(ErrorKind::kDomain, "mark count must be >= 0");
    std::vector<CombMap> maps = enumerate_rooted(spec);
    if (cfg->marks > 0) {
      if (spec.family == OracleFamily::kGeneral) fail(ErrorKind::kDomain, "marked maps need the eulerian or bipartite family");
      maps = enumerate_marked_admissible(maps, cfg->marks, spec.family, cfg->m);
    }
    auto list = std::make_unique<mapgen_map_list>();
    list->maps.reserve(maps.size());
    for (auto& m : maps) list->maps.push_back({std::move(m)});
    *out = list.release();
    return MAPGEN_OK;
  });
}

size_t mapgen_map_list_size(const mapgen_map_list* list) { return list ? list->maps.size() : 0; }

const mapgen_map* mapgen_map_list_at(const mapgen_map_list* list, size_t k) {
  if (list == nullptr || k >= list->maps.size()) return nullptr;
  return &list->maps[k];
}

void mapgen_map_list_free(mapgen_map_list* list) { delete list; }

mapgen_status mapgen_counts_tsv(const mapgen_map_list* list, char** out) {
  return guarded([&] {
    need(list, "list");
    need(out, "out");
    std::vector<CombMap> maps;
    maps.reserve(list->maps.size());
    for (const auto& m : list->maps) maps.push_back(m.m);
    *out = dup(count_table_tsv(count_table(maps)));
    return MAPGEN_OK;
  });
}

// --------------------------------------------------------------- trees

mapgen_status mapgen_tree_parse(const char* text, mapgen_tree** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new mapgen_tree{BlossomTree::parse(text)};
    return MAPGEN_OK;
  });
}

mapgen_status mapgen_tree_text(const mapgen_tree* tree, char** out) {
  return guarded([&] {
    need(tree, "tree");
    need(out, "out");
    *out = dup(tree->t.to_text());
    return MAPGEN_OK;
  });
}

void mapgen_tree_free(mapgen_tree* tree) { delete tree; }

mapgen_status mapgen_open(const mapgen_map* map, mapgen_tree_family family, int m, mapgen_tree** out) {
  return guarded([&] {
    need(map, "map");
    need(out, "out");
    *out = new mapgen_tree{open_map(map->m, tree_family(family), m).tree};
    return MAPGEN_OK;
  });
}

mapgen_status mapgen_close(const mapgen_tree* tree, mapgen_tree_family family, int m, mapgen_map** out) {
  return guarded([&] {
    need(tree, "tree");
    need(out, "out");
    *out = new mapgen_map{close_tree(tree->t, tree_family(family), m)};
    return MAPGEN_OK;
  });
}

mapgen_status mapgen_planar_close(const mapgen_tree* tree, mapgen_map** planar, mapgen_map** reduced,
                                  int* crossings) {
  return guarded([&] {
    need(tree, "tree");
    PlanarForm p = planar_close(tree->t);
    if (crossings) *crossings = p.crossings;
    if (planar) *planar = new mapgen_map{std::move(p.planar)};
    if (reduced) *reduced = new mapgen_map{std::move(p.reduced)};
    return MAPGEN_OK;
  });
}

mapgen_status mapgen_i_enrich_to_marked(const mapgen_tree* tree, int i, mapgen_tree** out) {
  return guarded([&] {
    need(tree, "tree");
    need(out, "out");
    *out = new mapgen_tree{i_enrich_to_marked(tree->t, i)};
    return MAPGEN_OK;
  });
}

mapgen_status mapgen_marked_to_i_enrich(const mapgen_tree* tree, int i, mapgen_tree** out) {
  return guarded([&] {
    need(tree, "tree");
    need(out, "out");
    *out = new mapgen_tree{marked_to_i_enrich(tree->t, i)};
    return MAPGEN_OK;
  });
}

// -------------------------------------------------------------- verify

void mapgen_verify_defaults(mapgen_verify_config* cfg) {
  if (cfg == nullptr) return;
  VerifyConfig d;
  *cfg = {"eulerian", "regular:4", d.m, d.order, d.i_max, d.N, d.max_edges, d.max_black, d.max_marks};
}

mapgen_status mapgen_verify(const char* suite, const mapgen_verify_config* cfg, int json, int timings,
                            char** report) {
  return guarded([&] {
    need(suite, "suite");
    need(report, "report");
    VerifyConfig vc;
    if (cfg != nullptr) {
      if (cfg->family) vc.family = parse_family(cfg->family);
      vc.weights = weights_of(cfg->weights);
      vc.m = cfg->m;
      vc.order = cfg->order;
      vc.i_max = cfg->i_max;
      vc.N = cfg->N;
      vc.max_edges = cfg->max_edges;
      vc.max_black = cfg->max_black;
      vc.max_marks = cfg->max_marks;
    }
    SuiteReport rep = run_suite(suite, vc);
    *report = dup(json ? rep.to_json() : rep.to_text(timings != 0));
    return rep.passed() ? MAPGEN_OK : MAPGEN_E_VERIFY;
  });
}

mapgen_status mapgen_acceptance(int criterion, int json, int timings, char** report) {
  return guarded([&] {
    need(report, "report");
    SuiteReport rep = acceptance(criterion);
    *report = dup(json ? rep.to_json() : rep.to_text(timings != 0));
    return rep.passed() ? MAPGEN_OK : MAPGEN_E_VERIFY;
  });
}

}  // extern "C"
