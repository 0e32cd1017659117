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

#include "mapgen/recursion.hpp"

#include <algorithm>
#include <sstream>

#include "mapgen/error.hpp"

namespace mapgen {

// ---------------------------------------------------------------- Dyck paths

int DyckPath::end_height() const {
  int h = start_height;
  for (int s : steps) h += s;
  return h;
}

std::vector<int> DyckPath::descent_heights() const {
  std::vector<int> out;
  int h = start_height;
  for (int s : steps) {
    if (s < 0) out.push_back(h);
    h += s;
  }
  return out;
}

bool DyckPath::nonnegative() const {
  int h = start_height;
  if (h < 0) return false;
  for (int s : steps) {
    h += s;
    if (h < 0) return false;
  }
  return true;
}

namespace {

void extend_dyck(int remaining, int height, int target, DyckPath& cur,
                 std::vector<DyckPath>& out) {
  if (remaining == 0) {
    if (height == target) out.push_back(cur);
    return;
  }
  // Height must be able to come back down to target.
  if (height - remaining > target) return;
  if (height + remaining < target) return;
  cur.steps.push_back(+1);
  extend_dyck(remaining - 1, height + 1, target, cur, out);
  cur.steps.back() = -1;
  if (height > 0) extend_dyck(remaining - 1, height - 1, target, cur, out);
  cur.steps.pop_back();
}

}  // namespace

std::vector<DyckPath> enumerate_dyck(int k, int i) {
  if (k < 1 || i < 1) {
    fail(ErrorKind::kPrecondition, "enumerate_dyck needs k >= 1 and i >= 1");
  }
  std::vector<DyckPath> out;
  DyckPath cur;
  cur.start_height = i;
  extend_dyck(2 * k - 1, i, i - 1, cur, out);
  return out;
}

// ------------------------------------------------------------------- weights

int WeightSpec::max_k() const {
  int k = 0;
  for (const auto& [kk, v] : g) {
    if (!v.is_zero()) k = std::max(k, kk);
  }
  return k;
}

WeightSpec WeightSpec::regular(int degree) {
  if (degree < 2 || degree % 2 != 0) {
    fail(ErrorKind::kDomain, "regular weights need an even degree >= 2");
  }
  WeightSpec w;
  w.g[degree / 2] = PolyCoeff::constant(0, Rational(1));
  return w;
}

WeightSpec WeightSpec::symbolic(int b) {
  if (b < 1) fail(ErrorKind::kDomain, "symbolic weights need b >= 1");
  WeightSpec w;
  for (int k = 1; k <= b; ++k) w.names.push_back("g" + std::to_string(k));
  for (int k = 1; k <= b; ++k) {
    w.g[k] = PolyCoeff::variable(static_cast<std::size_t>(b),
                                 static_cast<std::size_t>(k - 1));
  }
  return w;
}

namespace {

int parse_int(const std::string& s, const std::string& context) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(ErrorKind::kParse, "bad integer '" + s + "' in " + context);
  }
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

WeightSpec WeightSpec::parse(const std::string& text) {
  const std::string t = trim(text);
  if (t.rfind("regular:", 0) == 0) return regular(parse_int(t.substr(8), t));
  if (t.rfind("symbolic:", 0) == 0) return symbolic(parse_int(t.substr(9), t));
  WeightSpec w;
  std::stringstream ss(t);
  std::string item;
  bool any = false;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    auto eq = item.find('=');
    if (eq == std::string::npos) {
      fail(ErrorKind::kParse, "weight entry '" + item + "' is not k=value");
    }
    int k = parse_int(trim(item.substr(0, eq)), item);
    if (k < 1) fail(ErrorKind::kDomain, "weight index must be >= 1");
    Rational v;
    const std::string vs = trim(item.substr(eq + 1));
    if (v.set_str(vs, 10) != 0) {
      fail(ErrorKind::kParse, "bad rational '" + vs + "'");
    }
    v.canonicalize();
    w.g[k] = PolyCoeff::constant(0, v);
    any = true;
  }
  if (!any) fail(ErrorKind::kParse, "empty weight specification");
  return w;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::kEulerian: return "eulerian";
    case Family::kEulerianQ: return "eulerian-q";
    case Family::kPlanarR: return "planar-r";
    case Family::kBipartite: return "bipartite";
    case Family::kThreeRegular: return "three-regular";
  }
  return "?";
}

// ------------------------------------------------------------ SystemSolution

TruncatedSeries SystemSolution::zero() const {
  return TruncatedSeries(var, order, names);
}

TruncatedSeries SystemSolution::one() const { return zero().plus_constant(Rational(1)); }

const TruncatedSeries& SystemSolution::r_at(int i) const {
  if (i < 0) i = 0;
  if (i > i_max) {
    fail(ErrorKind::kRange, "r_" + std::to_string(i) + " past i_max " +
                                std::to_string(i_max));
  }
  return r[static_cast<std::size_t>(i)];
}

TruncatedSeries SystemSolution::q_at(int i) const {
  if (family != Family::kBipartite) {
    fail(ErrorKind::kPrecondition, "q_i only exists for bipartite systems");
  }
  if (i <= 0) return zero();
  if (i > i_max) {
    fail(ErrorKind::kRange, "q_" + std::to_string(i) + " past i_max " +
                                std::to_string(i_max));
  }
  return q[static_cast<std::size_t>(i)];
}

const TruncatedSeries& SystemSolution::s_at(int i) const {
  if (family != Family::kThreeRegular) {
    fail(ErrorKind::kPrecondition, "s_i only exists for 3-regular systems");
  }
  if (i < 0 || i > i_max) {
    fail(ErrorKind::kRange, "s_" + std::to_string(i) + " outside 0.." +
                                std::to_string(i_max));
  }
  return s[static_cast<std::size_t>(i)];
}

// ------------------------------------------------------------------ solvers

SystemSolution solve_eulerian(const WeightSpec& weights, int order, int i_max,
                              LeafWeight leaf_weight) {
  if (order < 0) fail(ErrorKind::kDomain, "order must be >= 0");
  if (i_max < 1) fail(ErrorKind::kDomain, "i_max must be >= 1");
  SystemSolution sol;
  sol.family = leaf_weight == LeafWeight::kIntegerHeight ? Family::kEulerian
               : leaf_weight == LeafWeight::kQAnalog     ? Family::kEulerianQ
                                                         : Family::kPlanarR;
  sol.order = order;
  sol.i_max = i_max;
  sol.weights = weights;
  sol.var = "t";
  sol.names = weights.names;
  std::size_t q_index = 0;
  if (leaf_weight == LeafWeight::kQAnalog) {
    if (std::find(sol.names.begin(), sol.names.end(), "q") != sol.names.end()) {
      fail(ErrorKind::kDomain, "weight indeterminates already use 'q'");
    }
    q_index = sol.names.size();
    sol.names.push_back("q");
  }
  const std::size_t arity = sol.names.size();
  std::vector<std::size_t> embed_map(weights.names.size());
  for (std::size_t j = 0; j < embed_map.size(); ++j) embed_map[j] = j;

  auto z = [&](int h) {
    switch (leaf_weight) {
      case LeafWeight::kIntegerHeight:
        return PolyCoeff::constant(arity, Rational(h));
      case LeafWeight::kPlanarOne:
        return PolyCoeff::constant(arity, Rational(1));
      case LeafWeight::kQAnalog: {
        PolyCoeff p(arity);
        for (int j = 0; j < h; ++j) p += PolyCoeff::variable(arity, q_index, j);
        return p;
      }
    }
    return PolyCoeff(arity);
  };

  const int I = i_max + order + 1;
  const TruncatedSeries base(sol.var, order, sol.names);
  std::vector<TruncatedSeries> zc;  // constant z_h series, h = 0..I + max height
  const int kmax = std::min(weights.max_k(), order);
  const int h_cap = I + std::max(kmax, 1);
  for (int h = 0; h <= h_cap; ++h) {
    zc.push_back(h == 0 ? base : base.plus_constant(z(h)));
  }
  std::vector<std::pair<int, PolyCoeff>> gk;
  for (const auto& [k, v] : weights.g) {
    if (k >= 1 && k <= order && !v.is_zero()) {
      gk.emplace_back(k, v.embed(embed_map, arity));
    }
  }
  // descents[k][i] = descent-height lists of the paths in P_k^(i)
  std::map<int, std::vector<std::vector<std::vector<int>>>> descents;
  for (const auto& [k, v] : gk) {
    auto& per_i = descents[k];
    per_i.resize(static_cast<std::size_t>(I) + 1);
    for (int i = 1; i <= I; ++i) {
      for (const auto& p : enumerate_dyck(k, i)) {
        per_i[static_cast<std::size_t>(i)].push_back(p.descent_heights());
      }
    }
  }

  std::vector<TruncatedSeries> r(zc.begin(), zc.begin() + I + 1);
  for (int pass = 0; pass < order; ++pass) {
    std::vector<TruncatedSeries> next(r);
    for (int i = 1; i <= I; ++i) {
      TruncatedSeries acc = zc[static_cast<std::size_t>(i)];
      for (const auto& [k, gv] : gk) {
        TruncatedSeries sum = base;
        for (const auto& hs : descents[k][static_cast<std::size_t>(i)]) {
          TruncatedSeries prod = base.plus_constant(Rational(1));
          for (int h : hs) {
            prod = prod * (h <= I ? r[static_cast<std::size_t>(h)]
                                  : zc[static_cast<std::size_t>(std::min(h, h_cap))]);
          }
          sum += prod;
        }
        acc += sum.scaled(gv).shifted(k);
      }
      next[static_cast<std::size_t>(i)] = std::move(acc);
    }
    r = std::move(next);
  }
  r.resize(static_cast<std::size_t>(i_max) + 1, base);
  sol.r = std::move(r);
  return sol;
}

SystemSolution solve_bipartite(int m, int order, int i_max, bool allow_degenerate) {
  if (order < 0) fail(ErrorKind::kDomain, "order must be >= 0");
  if (i_max < 1) fail(ErrorKind::kDomain, "i_max must be >= 1");
  if (m < 2 || (m == 2 && !allow_degenerate)) {
    fail(ErrorKind::kDomain, "bipartite systems need m >= 3");
  }
  SystemSolution sol;
  sol.family = Family::kBipartite;
  sol.m = m;
  sol.order = order;
  sol.i_max = i_max;
  sol.degenerate = (m == 2);
  sol.var = "g";
  const int I = i_max + (m - 2) * (order + 1) + 1;
  const TruncatedSeries base(sol.var, order, {});
  auto zc = [&](int h) { return base.plus_constant(Rational(h)); };

  std::vector<TruncatedSeries> r, q;
  for (int i = 0; i <= I; ++i) {
    r.push_back(zc(i));
    q.push_back(base);
  }
  auto r_of = [&](int h) { return h <= I ? r[static_cast<std::size_t>(h)] : zc(h); };
  for (int pass = 0; pass <= order; ++pass) {
    for (int i = 1; i <= I; ++i) {
      TruncatedSeries prod = base.plus_constant(Rational(1));
      for (int a = 0; a <= m - 2; ++a) prod = prod * r_of(i + a);
      q[static_cast<std::size_t>(i)] = prod.shifted(1);
    }
    for (int i = 1; i <= I; ++i) {
      TruncatedSeries acc = zc(i);
      for (int a = 0; a <= m - 2; ++a) {
        if (i - a >= 1) acc += q[static_cast<std::size_t>(i - a)];
      }
      r[static_cast<std::size_t>(i)] = std::move(acc);
    }
  }
  r.resize(static_cast<std::size_t>(i_max) + 1, base);
  q.resize(static_cast<std::size_t>(i_max) + 1, base);
  sol.r = std::move(r);
  sol.q = std::move(q);
  return sol;
}

SystemSolution solve_threeregular(int order, int i_max) {
  if (order < 0) fail(ErrorKind::kDomain, "order must be >= 0");
  if (i_max < 1) fail(ErrorKind::kDomain, "i_max must be >= 1");
  SystemSolution sol;
  sol.family = Family::kThreeRegular;
  sol.order = order;
  sol.i_max = i_max;
  sol.var = "g";
  const int I = i_max + order + 2;
  const TruncatedSeries base(sol.var, order, {});
  auto zc = [&](int h) { return base.plus_constant(Rational(h)); };
  std::vector<TruncatedSeries> r, s;
  for (int i = 0; i <= I; ++i) {
    r.push_back(zc(i));
    s.push_back(base);
  }
  auto r_of = [&](int h) { return h <= I ? r[static_cast<std::size_t>(h)] : zc(h); };
  for (int pass = 0; pass <= order; ++pass) {
    std::vector<TruncatedSeries> nr(r), ns(s);
    for (int i = 0; i <= I; ++i) {
      const auto& si = s[static_cast<std::size_t>(i)];
      ns[static_cast<std::size_t>(i)] = (r_of(i + 1) + r_of(i) + si * si).shifted(1);
    }
    for (int i = 1; i <= I; ++i) {
      nr[static_cast<std::size_t>(i)] =
          zc(i) + (r[static_cast<std::size_t>(i)] *
                   (s[static_cast<std::size_t>(i)] + s[static_cast<std::size_t>(i - 1)]))
                      .shifted(1);
    }
    r = std::move(nr);
    s = std::move(ns);
  }
  r.resize(static_cast<std::size_t>(i_max) + 1, base);
  s.resize(static_cast<std::size_t>(i_max) + 1, base);
  sol.r = std::move(r);
  sol.s = std::move(s);
  sol.m3 = (sol.r[1] + sol.s[0] * sol.s[0]).plus_constant(Rational(-1));
  return sol;
}

// ---------------------------------------------------------------- identities

std::string identity_name(Identity id) {
  switch (id) {
    case Identity::kEulerianDerivative: return "eulerian-derivative";
    case Identity::kEulerianLogDerivative: return "eulerian-log-derivative";
    case Identity::kCountingF: return "counting-f";
    case Identity::kBipartiteDerivative: return "bipartite-derivative";
    case Identity::kBipartiteQDerivative: return "bipartite-q-derivative";
    case Identity::kThreeRegularR: return "three-regular-r";
    case Identity::kThreeRegularS: return "three-regular-s";
  }
  return "?";
}

std::string IdentityReport::summary() const {
  std::ostringstream os;
  os << name << " i=" << first_index << ".." << last_index << ": "
     << (passed ? "ok" : "FAIL");
  for (const auto& [i, n] : mismatches) os << " [i=" << i << " order " << n << "]";
  return os.str();
}

std::vector<Identity> identities_for(const SystemSolution& sol) {
  switch (sol.family) {
    case Family::kEulerian:
      return {Identity::kEulerianDerivative, Identity::kEulerianLogDerivative,
              Identity::kCountingF};
    case Family::kBipartite:
      return {Identity::kBipartiteDerivative, Identity::kBipartiteQDerivative};
    case Family::kThreeRegular:
      return {Identity::kThreeRegularR, Identity::kThreeRegularS};
    default:
      return {};
  }
}

namespace {

void require_family(const SystemSolution& sol, Identity id, Family f) {
  if (sol.family != f) {
    fail(ErrorKind::kPrecondition, identity_name(id) + " does not apply to a " +
                                       family_name(sol.family) + " system");
  }
}

}  // namespace

IdentityReport check_identity(const SystemSolution& sol, Identity id, int i_hi) {
  IdentityReport rep;
  rep.identity = id;
  rep.name = identity_name(id);
  rep.first_index = 1;
  int reach = 1;  // largest index used at i, minus i
  switch (id) {
    case Identity::kEulerianDerivative:
    case Identity::kEulerianLogDerivative:
    case Identity::kCountingF:
      require_family(sol, id, Family::kEulerian);
      break;
    case Identity::kBipartiteDerivative:
      require_family(sol, id, Family::kBipartite);
      break;
    case Identity::kBipartiteQDerivative:
      require_family(sol, id, Family::kBipartite);
      reach = sol.m - 1;
      break;
    case Identity::kThreeRegularR:
      require_family(sol, id, Family::kThreeRegular);
      break;
    case Identity::kThreeRegularS:
      require_family(sol, id, Family::kThreeRegular);
      rep.first_index = 0;
      break;
  }
  const int limit = sol.i_max - reach;
  if (i_hi < 0) i_hi = limit;
  if (i_hi > limit || i_hi < rep.first_index) {
    fail(ErrorKind::kRange, rep.name + " up to i=" + std::to_string(i_hi) +
                                " needs i_max >= " + std::to_string(i_hi + reach));
  }
  rep.last_index = i_hi;
  const TruncatedSeries two = sol.zero().plus_constant(Rational(2));

  for (int i = rep.first_index; i <= i_hi; ++i) {
    TruncatedSeries lhs = sol.zero(), rhs = sol.zero();
    switch (id) {
      case Identity::kEulerianDerivative:
        lhs = theta_derivative(sol.r_at(i), Rational(2));
        rhs = sol.r_at(i) * (sol.r_at(i + 1) - sol.r_at(i - 1) - two);
        break;
      case Identity::kEulerianLogDerivative:
        lhs = theta_derivative(sol.r_at(i), Rational(2)) * invert(sol.r_at(i));
        rhs = sol.r_at(i + 1) - sol.r_at(i - 1) - two;
        break;
      case Identity::kCountingF: {
        auto it = sol.weights.g.find(2);
        PolyCoeff g2(sol.names.size());
        if (it != sol.weights.g.end()) {
          std::vector<std::size_t> map(sol.weights.names.size());
          for (std::size_t j = 0; j < map.size(); ++j) map[j] = j;
          g2 = it->second.embed(map, sol.names.size());
        }
        lhs = (sol.r_at(i) * (sol.r_at(i + 1) - sol.r_at(i - 1) - two))
                  .scaled(g2).shifted(2);
        rhs = (sol.r_at(i) *
               (theta_derivative(sol.r_at(i), Rational(2)) * invert(sol.r_at(i))))
                  .scaled(g2).shifted(2);
        break;
      }
      case Identity::kBipartiteDerivative:
        lhs = theta_derivative(sol.r_at(i), Rational(sol.m));
        rhs = sol.r_at(i) * (sol.q_at(i + 1) - sol.q_at(i - sol.m + 1));
        break;
      case Identity::kBipartiteQDerivative: {
        auto pi = [&](int j) {
          if (j <= 0) return sol.zero();
          TruncatedSeries p = sol.one();
          for (int a = 0; a < sol.m; ++a) p = p * sol.r_at(j + a);
          return p;
        };
        lhs = theta_derivative(sol.q_at(i), Rational(sol.m));
        rhs = (pi(i) - pi(i - 1)).shifted(1);
        break;
      }
      case Identity::kThreeRegularR: {
        const auto& si = sol.s_at(i);
        const auto& sp = sol.s_at(i - 1);
        lhs = theta_derivative(sol.r_at(i), Rational(3));
        rhs = sol.r_at(i) *
              ((sol.r_at(i + 1) - sol.r_at(i - 1) - two) + (si * si - sp * sp));
        break;
      }
      case Identity::kThreeRegularS:
        lhs = theta_derivative(sol.s_at(i), Rational(3)).shifted(1);
        rhs = (sol.r_at(i + 1) - sol.r_at(i)).plus_constant(Rational(-1)) -
              sol.s_at(i).shifted(1);
        break;
    }
    int d = lhs.first_difference(rhs);
    if (d >= 0) {
      rep.passed = false;
      rep.mismatches.emplace_back(i, d);
    }
  }
  return rep;
}

// -------------------------------------------------------------- face colors

int face_colored_degree_bound(const SystemSolution& sol) {
  switch (sol.family) {
    case Family::kEulerian: return sol.order + 1;
    case Family::kBipartite: return (sol.m - 2) * sol.order + 2;
    case Family::kThreeRegular: return sol.order / 2 + 2;
    default:
      fail(ErrorKind::kPrecondition,
           "face-colored series need an Eulerian, bipartite or 3-regular system");
  }
}

int face_colored_required_i_max(Family family, int m, int order) {
  SystemSolution probe;
  probe.family = family;
  probe.m = m;
  probe.order = order;
  const int points = face_colored_degree_bound(probe) + 2;
  return points + (family == Family::kBipartite ? m - 2 : 0);
}

std::pair<TruncatedSeries, TruncatedSeries> face_colored_T_both(
    const SystemSolution& sol, int N) {
  if (N < 1) fail(ErrorKind::kDomain, "N must be >= 1");
  const Rational c = sol.family == Family::kEulerian    ? Rational(2)
                     : sol.family == Family::kBipartite ? Rational(sol.m)
                                                        : Rational(3);
  face_colored_degree_bound(sol);  // family check
  TruncatedSeries a = sol.zero(), b = sol.zero();
  // Log-derivative form.
  TruncatedSeries head = sol.r_at(1).plus_constant(Rational(-1));
  if (sol.family == Family::kThreeRegular) head = *sol.m3;
  a = head * Rational(N);
  for (int i = 1; i < N; ++i) {
    a += (theta_derivative(sol.r_at(i), c) * invert(sol.r_at(i))) * Rational(N - i);
  }
  // Partial-sum form.
  switch (sol.family) {
    case Family::kEulerian: {
      auto S = [&](int n) {
        TruncatedSeries acc = sol.zero();
        for (int i = 1; i <= n; ++i) acc += sol.r_at(i).plus_constant(Rational(-i));
        return acc;
      };
      b = S(N) + S(N - 1);
      break;
    }
    case Family::kBipartite: {
      auto S = [&](int n) {
        TruncatedSeries acc = sol.zero();
        for (int i = 1; i <= n; ++i) acc += sol.q_at(i);
        return acc;
      };
      for (int j = 0; j < sol.m; ++j) b += S(N - j);
      break;
    }
    default: {
      b = sol.r_at(N).plus_constant(Rational(-N));
      for (int i = 1; i < N; ++i) b += sol.r_at(i).plus_constant(Rational(-i)) * Rational(2);
      for (int i = 0; i < N; ++i) b += sol.s_at(i) * sol.s_at(i);
      break;
    }
  }
  return {a, b};
}

namespace {

TruncatedSeries face_colored_integer(const SystemSolution& sol, int N) {
  auto [a, b] = face_colored_T_both(sol, N);
  int d = a.first_difference(b);
  if (d >= 0) {
    fail(ErrorKind::kInvariant, "face-colored formulas disagree at N=" +
                                    std::to_string(N) + ", order " + std::to_string(d));
  }
  return a;
}

// Coefficients (in N^0, N^1, ...) of the Lagrange basis polynomial for node
// index j over nodes 1..P.
std::vector<Rational> lagrange_basis(int P, int j) {
  std::vector<Rational> poly{Rational(1)};
  Rational denom(1);
  for (int l = 1; l <= P; ++l) {
    if (l == j) continue;
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] -= poly[d] * l;
    }
    poly = std::move(next);
    denom *= (j - l);
  }
  for (auto& c : poly) c /= denom;
  return poly;
}

}  // namespace

TruncatedSeries face_colored_T(const SystemSolution& sol, std::optional<int> N) {
  if (N) return face_colored_integer(sol, *N);
  if (std::find(sol.names.begin(), sol.names.end(), "N") != sol.names.end()) {
    fail(ErrorKind::kDomain, "indeterminate 'N' already in use");
  }
  const int P = face_colored_degree_bound(sol) + 1;
  const int need = face_colored_required_i_max(sol.family, sol.m, sol.order);
  if (sol.i_max < need) {
    fail(ErrorKind::kRange, "symbolic N needs i_max >= " + std::to_string(need));
  }
  std::vector<std::string> names = sol.names;
  names.push_back("N");
  const std::size_t arity = names.size();
  const std::size_t nidx = arity - 1;
  std::vector<std::size_t> map(sol.names.size());
  for (std::size_t j = 0; j < map.size(); ++j) map[j] = j;

  TruncatedSeries out(sol.var, sol.order, names);
  for (int j = 1; j <= P; ++j) {
    TruncatedSeries v = face_colored_integer(sol, j);
    auto basis = lagrange_basis(P, j);
    PolyCoeff L(arity);
    for (std::size_t d = 0; d < basis.size(); ++d) {
      if (basis[d] != 0) {
        L += PolyCoeff::variable(arity, nidx, static_cast<int>(d)) * basis[d];
      }
    }
    for (int n = 0; n <= sol.order; ++n) {
      out.coeff(n).add_product(v[n].embed(map, arity), L);
    }
  }
  // One point past the interpolation nodes must agree too.
  const int check = P + 1;
  TruncatedSeries direct = face_colored_integer(sol, check);
  TruncatedSeries at = out.substitute("N", Rational(check));
  if (at.with_indeterminates(sol.names).first_difference(direct) >= 0) {
    fail(ErrorKind::kInvariant, "interpolated T(N) misses the check point N=" +
                                    std::to_string(check));
  }
  return out;
}

TruncatedSeries face_colored_T_tilde(const SystemSolution& sol, int N) {
  if (N < 1) fail(ErrorKind::kDomain, "N must be >= 1");
  TruncatedSeries out = sol.zero();
  BigInt binom = 1;  // C(N, j)
  for (int j = 1; j <= N; ++j) {
    binom = binom * (N - j + 1) / j;
    Rational c(binom);
    if ((N - j) % 2 != 0) c = -c;
    out += face_colored_integer(sol, j) * c;
  }
  return out;
}

// ------------------------------------------------------------ Φ on sequences

bool MarkedSequence::in_P() const {
  for (std::size_t j = 1; j < values.size(); ++j) {
    if (values[j] < values[j - 1] - 1) return false;
  }
  return true;
}

namespace {

void require_marked(const MarkedSequence& u) {
  if (u.mark < 0 || u.mark >= static_cast<int>(u.values.size())) {
    fail(ErrorKind::kPrecondition, "sequence has no marked element");
  }
  if (!u.in_P()) {
    fail(ErrorKind::kPrecondition, "sequence violates u_{j+1} >= u_j - 1");
  }
}

}  // namespace

MarkedSequence phi_bijection(const MarkedSequence& u) {
  require_marked(u);
  MarkedSequence out = u;
  int s = u.mark;
  while (s > 0 && u.values[static_cast<std::size_t>(s - 1)] ==
                      u.values[static_cast<std::size_t>(s)] + 1) {
    --s;
  }
  for (int j = s; j <= u.mark; ++j) --out.values[static_cast<std::size_t>(j)];
  out.mark = s;
  return out;
}

MarkedSequence phi_inverse(const MarkedSequence& u) {
  require_marked(u);
  MarkedSequence out = u;
  const int n = static_cast<int>(u.values.size());
  int e = u.mark;
  while (e + 1 < n && u.values[static_cast<std::size_t>(e + 1)] ==
                          u.values[static_cast<std::size_t>(e)] - 1) {
    ++e;
  }
  for (int j = u.mark; j <= e; ++j) ++out.values[static_cast<std::size_t>(j)];
  out.mark = e;
  return out;
}

}  // namespace mapgen
