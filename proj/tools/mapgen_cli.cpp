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

// Command-line front end. Everything goes through the C interface.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mapgen/mapgen.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int exit_code(mapgen_status s) {
  switch (s) {
    case MAPGEN_OK: return kExitOk;
    case MAPGEN_E_VERIFY:
    case MAPGEN_E_INVARIANT:
    case MAPGEN_E_INTERNAL: return kExitFail;
    default: return kExitUsage;
  }
}

std::string take(char* s) {
  std::string out = s ? s : "";
  mapgen_string_free(s);
  return out;
}

std::string describe(mapgen_status s) { return std::string(mapgen_status_name(s)) + ": " + mapgen_last_error(); }

struct Failure {
  mapgen_status status;
};

void check(mapgen_status s) {
  if (s != MAPGEN_OK) throw Failure{s};
}

template <typename T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
  T** out() { return &p; }
};
using Series = Handle<mapgen_series, mapgen_series_free>;
using System = Handle<mapgen_system, mapgen_system_free>;
using Map = Handle<mapgen_map, mapgen_map_free>;
using Tree = Handle<mapgen_tree, mapgen_tree_free>;
using MapList = Handle<mapgen_map_list, mapgen_map_list_free>;

std::string series_output(const mapgen_series* s, const std::string& format) {
  char* out = nullptr;
  check(format == "json" ? mapgen_series_json(s, &out) : mapgen_series_text(s, &out));
  return take(out);
}

std::vector<int> int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw CLI::ValidationError("expected a comma-separated integer list: " + text);
    out.push_back(v);
  }
  return out;
}

// Reads records, one per non-blank line not starting with '#', and writes
// one output line per record. Failed records print "error: line K: ...".
int transform(const std::string& input, const std::function<std::string(const std::string&)>& f) {
  std::ifstream file;
  if (!input.empty() && input != "-") {
    file.open(input);
    if (!file) {
      std::cerr << "error: cannot read " << input << "\n";
      return kExitUsage;
    }
  }
  std::istream& in = file.is_open() ? static_cast<std::istream&>(file) : std::cin;
  std::string line;
  int lineno = 0, rc = kExitOk;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      std::cout << f(line) << "\n";
    } catch (const Failure& e) {
      std::cout << "error: line " << lineno << ": " << describe(e.status) << "\n";
      const int code = e.status == MAPGEN_E_PARSE || e.status == MAPGEN_E_ARG ? kExitUsage : kExitFail;
      rc = std::max(rc, code);
    }
  }
  return rc;
}

mapgen_tree_family tree_family(const std::string& f) {
  return f == "bipartite" ? MAPGEN_TREE_BIPARTITE : MAPGEN_TREE_EULERIAN;
}

bool looks_like_map(const std::string& line) { return line.find(';') != std::string::npos; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mapgen: exact counts of rooted maps from recursive series, tree bijections and brute force"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(mapgen_version()));

  // series
  std::string family = "eulerian", weights, kind = "r", format = "text";
  int regular = 0, m = 3, order = 8, index = 1, N = 0, p = 4;
  auto* series = app.add_subcommand("series", "print r_i, q_i, s_i, M_3, T, T-tilde or a Riccati series");
  series->add_option("--family", family, "eulerian, eulerian-q, planar-r, bipartite or three-regular")
      ->check(CLI::IsMember({"eulerian", "eulerian-q", "planar-r", "bipartite", "three-regular"}));
  series->add_option("--regular", regular, "2k-regular weights (g_k = 1)")->check(CLI::PositiveNumber);
  series->add_option("--weights", weights, "regular:2k, symbolic:b or k=value,...");
  series->add_option("--m", m, "bipartite degree");
  series->add_option("--order", order, "truncation order")->check(CLI::NonNegativeNumber);
  series->add_option("--i", index, "series index");
  series->add_option("--kind", kind, "r, q, s, m3, T, Ttilde or riccati")
      ->check(CLI::IsMember({"r", "q", "s", "m3", "T", "Ttilde", "riccati"}));
  series->add_option("--N", N, "number of colors; 0 keeps N symbolic in T")->check(CLI::NonNegativeNumber);
  series->add_option("--p", p, "Riccati parameter");
  series->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  // enumerate / counts
  std::string efamily = "eulerian", profile;
  int max_edges = 4, max_black = 0, genus = -1, marks = 0;
  auto add_enum_options = [&](CLI::App* sub) {
    sub->add_option("--family", efamily, "eulerian, bipartite or general")
        ->check(CLI::IsMember({"eulerian", "bipartite", "general"}));
    sub->add_option("--m", m, "bipartite degree");
    sub->add_option("--max-edges", max_edges, "largest edge count");
    sub->add_option("--max-black", max_black, "bipartite: largest black vertex count (sets --max-edges)");
    sub->add_option("--profile", profile, "comma-separated vertex degrees");
    sub->add_option("--genus", genus, "keep one genus");
    sub->add_option("--marks", marks, "admissible marked maps with this many marks");
  };
  auto* enumerate = app.add_subcommand("enumerate", "list rooted maps, one per line, in map text");
  add_enum_options(enumerate);
  auto* counts = app.add_subcommand("counts", "count rooted maps as a TSV table");
  add_enum_options(counts);

  // verify
  std::string suite;
  int i_max = 5, max_marks = 2, criterion = 0;
  bool timings = false;
  auto* verify = app.add_subcommand("verify", "run a verification suite; exit 0 iff every check passes");
  verify->add_option("--suite", suite, "identities, roundtrip, face-colored, contfrac or all")
      ->required()
      ->check(CLI::IsMember({"identities", "roundtrip", "face-colored", "contfrac", "all"}));
  verify->add_option("--family", family, "eulerian, bipartite or three-regular")
      ->check(CLI::IsMember({"eulerian", "bipartite", "three-regular"}));
  verify->add_option("--regular", regular, "2k-regular weights")->check(CLI::PositiveNumber);
  verify->add_option("--weights", weights, "regular:2k, symbolic:b or k=value,...");
  verify->add_option("--m", m, "bipartite degree");
  verify->add_option("--order", order, "truncation order");
  verify->add_option("--i-max", i_max, "largest index checked");
  verify->add_option("--N", N, "largest number of colors");
  verify->add_option("--max-edges", max_edges, "Eulerian size bound");
  verify->add_option("--max-black", max_black, "bipartite size bound");
  verify->add_option("--max-marks", max_marks, "largest mark count in round trips");
  verify->add_option("--criterion", criterion, "with --suite all: run one acceptance criterion");
  verify->add_flag("--timings", timings, "print run times");
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  // transforms
  std::string input, tfamily = "eulerian", alpha;
  auto add_transform_options = [&](CLI::App* sub, bool with_family) {
    sub->add_option("--input", input, "input file, default stdin");
    if (with_family) {
      sub->add_option("--family", tfamily, "eulerian or bipartite")->check(CLI::IsMember({"eulerian", "bipartite"}));
      sub->add_option("--m", m, "bipartite degree");
    }
  };
  auto* open = app.add_subcommand("open", "map text -> tree word");
  add_transform_options(open, true);
  auto* close = app.add_subcommand("close", "tree word -> map text");
  add_transform_options(close, true);
  auto* planar = app.add_subcommand("planar-form", "Eulerian map or tree word -> crossing count and planar map");
  add_transform_options(planar, false);
  auto* minimal = app.add_subcommand("minimal-orientation", "map text -> minimal orientation and its tree");
  add_transform_options(minimal, false);
  minimal->add_option("--alpha", alpha, "comma-separated outdegrees, vertices by smallest dart");
  int orient_m = 0;
  minimal->add_option("--m", orient_m, "1-orientation of an m-regular bipartite map");

  // analytic
  int depth = 8;
  auto* contfrac = app.add_subcommand("contfrac", "continued fraction convergent");
  contfrac->add_option("--p", p, "parameter")->required();
  contfrac->add_option("--depth", depth, "levels");
  contfrac->add_option("--order", order, "truncation order");
  contfrac->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  std::string ode_family;
  auto* ode = app.add_subcommand("ode", "series solution of m4, m3b, m3 or m6");
  ode->add_option("--family", ode_family, "m4, m3b, m3 or m6")->required()->check(CLI::IsMember({"m4", "m3b", "m3", "m6"}));
  ode->add_option("--order", order, "truncation order");
  ode->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }
  if (regular > 0 && weights.empty()) weights = "regular:" + std::to_string(regular);

  try {
    if (series->parsed()) {
      Series s;
      if (kind == "riccati") {
        check(mapgen_riccati(p, order, s.out()));
      } else {
        int need = std::max(index + m + 1, N + m + 2);
        if (kind == "T" && N == 0) {
          int sym = 0;
          check(mapgen_face_colored_i_max(family.c_str(), m, order, &sym));
          need = std::max(need, sym);
        }
        mapgen_system_config cfg{family.c_str(), weights.c_str(), m, order, need};
        System sys;
        check(mapgen_system_solve(&cfg, sys.out()));
        if (kind == "T" || kind == "Ttilde") {
          check(mapgen_system_face_colored(sys.p, N, kind == "Ttilde", s.out()));
        } else {
          check(mapgen_system_series(sys.p, kind.c_str(), index, s.out()));
        }
      }
      std::cout << series_output(s.p, format) << "\n";
      return kExitOk;
    }
    if (enumerate->parsed() || counts->parsed()) {
      std::vector<int> prof = int_list(profile);
      if (efamily == "bipartite" && max_black > 0) max_edges = m * max_black;
      mapgen_enum_config cfg{efamily.c_str(), m, max_edges, prof.empty() ? nullptr : prof.data(), prof.size(), genus, marks};
      MapList list;
      check(mapgen_enumerate(&cfg, list.out()));
      if (counts->parsed()) {
        char* out = nullptr;
        check(mapgen_counts_tsv(list.p, &out));
        std::cout << take(out);
      } else {
        for (std::size_t k = 0; k < mapgen_map_list_size(list.p); ++k) {
          char* out = nullptr;
          check(mapgen_map_text(mapgen_map_list_at(list.p, k), &out));
          std::cout << take(out) << "\n";
        }
      }
      return kExitOk;
    }
    if (verify->parsed()) {
      char* out = nullptr;
      mapgen_status st;
      if (suite == "all") {
        st = mapgen_acceptance(criterion, format == "json", timings, &out);
      } else {
        mapgen_verify_config cfg;
        mapgen_verify_defaults(&cfg);
        cfg.family = family.c_str();
        if (!weights.empty()) cfg.weights = weights.c_str();
        cfg.m = m;
        cfg.order = order;
        cfg.i_max = i_max;
        if (N > 0) cfg.N = N;
        cfg.max_edges = max_edges;
        if (max_black > 0) cfg.max_black = max_black;
        cfg.max_marks = max_marks;
        st = mapgen_verify(suite.c_str(), &cfg, format == "json", timings, &out);
      }
      if (out == nullptr) throw Failure{st};
      std::cout << take(out);
      if (format == "json") std::cout << "\n";
      return exit_code(st);
    }
    if (open->parsed()) {
      return transform(input, [&](const std::string& line) {
        Map map;
        check(mapgen_map_parse(line.c_str(), map.out()));
        Tree tree;
        check(mapgen_open(map.p, tree_family(tfamily), m, tree.out()));
        char* out = nullptr;
        check(mapgen_tree_text(tree.p, &out));
        return take(out);
      });
    }
    if (close->parsed()) {
      return transform(input, [&](const std::string& line) {
        Tree tree;
        check(mapgen_tree_parse(line.c_str(), tree.out()));
        Map map;
        check(mapgen_close(tree.p, tree_family(tfamily), m, map.out()));
        char* out = nullptr;
        check(mapgen_map_text(map.p, &out));
        return take(out);
      });
    }
    if (planar->parsed()) {
      return transform(input, [&](const std::string& line) {
        Tree tree;
        if (looks_like_map(line)) {
          Map map;
          check(mapgen_map_parse(line.c_str(), map.out()));
          check(mapgen_open(map.p, MAPGEN_TREE_EULERIAN, 0, tree.out()));
        } else {
          check(mapgen_tree_parse(line.c_str(), tree.out()));
        }
        Map pm, rm;
        int crossings = 0;
        check(mapgen_planar_close(tree.p, pm.out(), rm.out(), &crossings));
        char *a = nullptr, *b = nullptr;
        check(mapgen_map_text(pm.p, &a));
        std::string planar_text = take(a);
        check(mapgen_map_text(rm.p, &b));
        return "crossing_count=" + std::to_string(crossings) + "; planar=" + planar_text + "; reduced=" + take(b);
      });
    }
    if (minimal->parsed()) {
      const std::vector<int> a = int_list(alpha);
      return transform(input, [&](const std::string& line) {
        Map map;
        check(mapgen_map_parse(line.c_str(), map.out()));
        char* out = nullptr;
        check(mapgen_minimal_orientation(map.p, alpha.empty() ? nullptr : a.data(), a.size(), orient_m, &out));
        return take(out);
      });
    }
    if (contfrac->parsed()) {
      Series s;
      check(mapgen_contfrac(p, depth, order, s.out()));
      std::cout << series_output(s.p, format) << "\n";
      return kExitOk;
    }
    if (ode->parsed()) {
      Series s;
      check(mapgen_ode(ode_family.c_str(), order, s.out()));
      std::cout << series_output(s.p, format) << "\n";
      return kExitOk;
    }
  } catch (const Failure& e) {
    std::cerr << "error: " << describe(e.status) << "\n";
    return exit_code(e.status);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
