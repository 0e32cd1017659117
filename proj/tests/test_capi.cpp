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

#include <cstring>
#include <string>

#include "doctest.h"
#include "mapgen/mapgen.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  mapgen_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("series through the C interface") {
  mapgen_system_config cfg{"eulerian", "regular:4", 3, 8, 2};
  mapgen_system* sys = nullptr;
  REQUIRE(mapgen_system_solve(&cfg, &sys) == MAPGEN_OK);
  mapgen_series* r1 = nullptr;
  REQUIRE(mapgen_system_series(sys, "r", 1, &r1) == MAPGEN_OK);
  char* text = nullptr;
  REQUIRE(mapgen_series_text(r1, &text) == MAPGEN_OK);
  CHECK(take(text) == "1 + 3*t^2 + 24*t^4 + 297*t^6 + 4896*t^8 + O(t^9)");
  char* c = nullptr;
  REQUIRE(mapgen_series_coefficient(r1, 6, &c) == MAPGEN_OK);
  CHECK(take(c) == "297");
  int order = 0;
  CHECK(mapgen_series_order(r1, &order) == MAPGEN_OK);
  CHECK(order == 8);
  char* json = nullptr;
  REQUIRE(mapgen_series_json(r1, &json) == MAPGEN_OK);
  CHECK(take(json).find("\"format_version\":1") != std::string::npos);
  mapgen_series_free(r1);

  mapgen_series* q = nullptr;
  CHECK(mapgen_system_series(sys, "q", 1, &q) == MAPGEN_E_DOMAIN);
  CHECK(std::strlen(mapgen_last_error()) > 0);
  CHECK(mapgen_system_series(sys, "z", 1, &q) == MAPGEN_E_ARG);
  CHECK(mapgen_system_series(sys, "r", 9, &q) == MAPGEN_E_RANGE);

  mapgen_series* t = nullptr;
  REQUIRE(mapgen_system_face_colored(sys, 1, 0, &t) == MAPGEN_OK);
  mapgen_series_free(t);
  mapgen_system_free(sys);

  cfg.family = "nonsense";
  CHECK(mapgen_system_solve(&cfg, &sys) == MAPGEN_E_ARG);
  CHECK(mapgen_system_solve(nullptr, &sys) == MAPGEN_E_ARG);
  cfg.family = "eulerian";
  cfg.weights = "k=oops";
  CHECK(mapgen_system_solve(&cfg, &sys) == MAPGEN_E_PARSE);

  mapgen_series* s = nullptr;
  REQUIRE(mapgen_contfrac(4, 2, 2, &s) == MAPGEN_OK);
  REQUIRE(mapgen_series_text(s, &text) == MAPGEN_OK);
  CHECK(take(text) == "1 + 3*x + 24*x^2 + O(x^3)");
  mapgen_series_free(s);
  CHECK(mapgen_ode("m5", 3, &s) != MAPGEN_OK);
}

TEST_CASE("maps and trees through the C interface") {
  mapgen_map* loop = nullptr;
  REQUIRE(mapgen_map_parse("2; (1 2); (1 2); 1", &loop) == MAPGEN_OK);
  mapgen_map_info info{};
  REQUIRE(mapgen_map_info_get(loop, &info) == MAPGEN_OK);
  CHECK(info.edges == 1);
  CHECK(info.faces == 2);
  CHECK(info.genus == 0);

  mapgen_tree* tree = nullptr;
  REQUIRE(mapgen_open(loop, MAPGEN_TREE_EULERIAN, 0, &tree) == MAPGEN_OK);
  char* text = nullptr;
  REQUIRE(mapgen_tree_text(tree, &text) == MAPGEN_OK);
  CHECK(take(text) == "(c0)");
  mapgen_map* back = nullptr;
  REQUIRE(mapgen_close(tree, MAPGEN_TREE_EULERIAN, 0, &back) == MAPGEN_OK);
  int equal = 0;
  REQUIRE(mapgen_map_equal(loop, back, &equal) == MAPGEN_OK);
  CHECK(equal == 1);
  mapgen_map_free(back);
  mapgen_tree_free(tree);

  CHECK(mapgen_open(loop, MAPGEN_TREE_BIPARTITE, 3, &tree) == MAPGEN_E_DOMAIN);
  mapgen_map* bad = nullptr;
  CHECK(mapgen_map_parse("4; (1 2)(3 4); (1 2)(3 4); 1", &bad) == MAPGEN_E_STRUCTURAL);
  CHECK(mapgen_map_parse("nonsense", &bad) == MAPGEN_E_PARSE);

  char* orient = nullptr;
  REQUIRE(mapgen_minimal_orientation(loop, nullptr, 0, 0, &orient) == MAPGEN_OK);
  CHECK(take(orient) == "tails (1); tree ()");
  const int alpha[] = {2};
  CHECK(mapgen_minimal_orientation(loop, alpha, 1, 0, &orient) == MAPGEN_E_PRECONDITION);
  mapgen_map_free(loop);

  mapgen_tree* toral = nullptr;
  REQUIRE(mapgen_tree_parse("(oc1c0)", &toral) == MAPGEN_OK);
  mapgen_map* reduced = nullptr;
  int crossings = -1;
  REQUIRE(mapgen_planar_close(toral, nullptr, &reduced, &crossings) == MAPGEN_OK);
  CHECK(crossings == 1);
  REQUIRE(mapgen_map_info_get(reduced, &info) == MAPGEN_OK);
  CHECK(info.genus == 1);
  mapgen_map_free(reduced);

  mapgen_tree* marked = nullptr;
  mapgen_tree* node = nullptr;
  REQUIRE(mapgen_tree_parse("c0", &node) == MAPGEN_OK);
  REQUIRE(mapgen_i_enrich_to_marked(node, 3, &marked) == MAPGEN_OK);
  REQUIRE(mapgen_tree_text(marked, &text) == MAPGEN_OK);
  CHECK(take(text) == "c*0x2");
  mapgen_tree* again = nullptr;
  REQUIRE(mapgen_marked_to_i_enrich(marked, 3, &again) == MAPGEN_OK);
  REQUIRE(mapgen_tree_text(again, &text) == MAPGEN_OK);
  CHECK(take(text) == "c0");
  mapgen_tree_free(again);
  mapgen_tree_free(marked);
  mapgen_tree_free(node);
  mapgen_tree_free(toral);
  CHECK(mapgen_tree_parse("(oc", &toral) == MAPGEN_E_PARSE);
}

TEST_CASE("enumeration through the C interface") {
  const int prof[] = {4, 4};
  mapgen_enum_config cfg{"eulerian", 3, 4, prof, 2, -1, 0};
  mapgen_map_list* list = nullptr;
  REQUIRE(mapgen_enumerate(&cfg, &list) == MAPGEN_OK);
  CHECK(mapgen_map_list_size(list) == 24);
  CHECK(mapgen_map_list_at(list, 24) == nullptr);
  char* tsv = nullptr;
  REQUIRE(mapgen_counts_tsv(list, &tsv) == MAPGEN_OK);
  CHECK(take(tsv).rfind("E\tprofile\tgenus\tF\tmarks\tvalue\n", 0) == 0);
  mapgen_map_list_free(list);

  const int big[] = {14};
  cfg.profile = big;
  cfg.profile_len = 1;
  cfg.max_edges = 7;
  CHECK(mapgen_enumerate(&cfg, &list) == MAPGEN_E_CAP);

  mapgen_enum_config marked{"eulerian", 3, 1, nullptr, 0, -1, 1};
  REQUIRE(mapgen_enumerate(&marked, &list) == MAPGEN_OK);
  CHECK(mapgen_map_list_size(list) == 1);
  mapgen_map_list_free(list);
}

TEST_CASE("verification through the C interface") {
  mapgen_verify_config cfg;
  mapgen_verify_defaults(&cfg);
  char* report = nullptr;
  CHECK(mapgen_verify("contfrac", &cfg, 0, 0, &report) == MAPGEN_OK);
  CHECK(take(report).find("contfrac: pass") != std::string::npos);
  CHECK(mapgen_verify("nope", &cfg, 0, 0, &report) == MAPGEN_E_DOMAIN);
  REQUIRE(mapgen_acceptance(11, 1, 0, &report) == MAPGEN_OK);
  const std::string j = take(report);
  CHECK(j.find("\"expected_divergence\": true") != std::string::npos);
  CHECK(mapgen_acceptance(12, 0, 0, &report) == MAPGEN_E_RANGE);
  CHECK(std::string(mapgen_status_name(MAPGEN_E_VERIFY)) == "verification failed");
}
