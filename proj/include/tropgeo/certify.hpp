#pragma once

#include <set>
#include <string>
#include <vector>

#include "tropgeo/paths.hpp"
#include "tropgeo/saturation.hpp"

namespace tropgeo {

/// One audited comparison, with exact operands rendered as strings.
struct Check {
  std::string name;
  std::string lhs;
  std::string op;
  std::string rhs;
  bool pass;
};

/// Bound report for |w_e^i| <= A/delta and the boundary intersection count
/// I <= A/delta.
struct WeightBoundsReport {
  Rat limit;             // A/delta
  Int max_component;     // max |w_e^i| over edges of the restriction
  bool weights_ok;
  Int crossing_points;   // I, distinct points, no multiplicity
  bool crossings_ok;
};

inline WeightBoundsReport weight_bounds(const TropicalCurve& G, const Rat& delta,
                                        const Rat& area_budget) {
  require(delta > 0, errc::precondition_violated, "delta must be positive");
  const int n = G.dim;
  Region K = standard_simplex(n);
  WeightBoundsReport rep;
  rep.limit = area_budget / delta;
  rep.max_component = 0;
  TropicalCurve G_K = restrict_to(G, K);
  for (const auto& e : G_K.edges) {
    IntVec wv = e.weight.vec();
    for (int i = 0; i < n; ++i) rep.max_component = std::max(rep.max_component, int_abs(wv[i]));
  }
  rep.weights_ok = Rat(rep.max_component) <= rep.limit;
  // distinct intersection points of G with the simplex boundary
  std::set<RatVec> points;
  for (const auto& e : G.edges) {
    auto ext = clipped_extent(e, G.region);
    if (!ext || ext->len == 0) continue;
    for (const auto& h : K.halfspaces()) {
      Int nd = dot(h.normal, ext->dir);
      if (nd == 0) continue;
      Rat t = (h.offset - dot(h.normal, ext->base)) / Rat(nd);
      if (t < 0 || t > ext->len) continue;
      RatVec p = ext->at(t);
      if (K.contains(p)) points.insert(p);
    }
  }
  rep.crossing_points = Int(points.size());
  rep.crossings_ok = Rat(rep.crossing_points) <= rep.limit;
  return rep;
}

struct BettiReport {
  int components;
  int b1;
  int internal_edges;
  int vertex_count;
};

/// First Betti number of the vertex / internal-edge graph via the Euler
/// relation b1 = E - V + C.
inline BettiReport first_betti(const TropicalCurve& G) {
  const int V = int(G.vertices.size());
  std::vector<int> parent(V);
  for (int v = 0; v < V; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int internal = 0;
  for (const auto& e : G.edges) {
    if (e.kind != Edge::Kind::segment) continue;
    auto a = G.vertex_at(e.tail), b = G.vertex_at(e.head);
    if (!a || !b) continue;
    ++internal;
    parent[find(*a)] = find(*b);
  }
  std::set<int> roots;
  for (int v = 0; v < V; ++v) roots.insert(find(v));
  int C = int(roots.size());
  return {C, internal - V + C, internal, V};
}

/// The conjectural Castelnuovo-type vertex bound 2 pi(d,n) + (n+1)d - 2 with
/// pi(d,n) = m(m-1)/2 (n-1) + m eps, m = floor((d-1)/(n-1)),
/// eps = d-1-m(n-1). Reported as conjectural, never asserted.
inline Int castelnuovo_bound(const Int& d, int n) {
  require(d >= 1 && n >= 2, errc::bad_dimension, "requires d >= 1, n >= 2");
  Int m = (d - 1) / (n - 1);
  Int eps = d - 1 - m * (n - 1);
  Int pi = m * (m - 1) / 2 * (n - 1) + m * eps;
  return 2 * pi + (n + 1) * d - 2;
}

/// Full audit record of the vertex-bound pipeline.
struct Certificate {
  int n = 0;
  Rat delta;
  Rat area_budget;
  Rat area_total;
  int restricted_vertex_count = 0;
  Int degree;
  Rat saturated_area;
  int saturated_vertex_count = 0;
  struct DirectionStats {
    int direction;  // 0-based
    std::vector<Int> v0_counts;
    Int v0_bound;
  };
  std::vector<DirectionStats> per_direction;
  std::vector<int> cover_misses;
  Int degree_bound;   // 2 (n-1)^2 d^2
  Rat apriori_bound;  // 2 (n-1)^2 (A + n (A/delta)^2)^2
  std::vector<Check> checks;
  bool pass = true;

  void record(std::string name, const Rat& lhs, std::string op, const Rat& rhs, bool ok) {
    checks.push_back({std::move(name), format_rat(lhs), std::move(op), format_rat(rhs), ok});
    pass = pass && ok;
  }
  void record_bool(std::string name, bool ok) {
    checks.push_back({std::move(name), ok ? "true" : "false", "==", "true", ok});
    pass = pass && ok;
  }
};

/// Runs the whole pipeline restrict -> saturate -> degree/area -> path
/// families -> vertex bounds, recording every exact comparison. Structural
/// errors (collar failure etc.) propagate; check failures are report
/// entries.
inline Certificate certify(const TropicalCurve& G, const Rat& delta, const Rat& area_budget,
                           TieRule tie = TieRule::smallest_id) {
  require(delta > 0 && area_budget > 0, errc::precondition_violated,
          "delta and area budget must be positive");
  const int n = G.dim;
  Certificate cert;
  cert.n = n;
  cert.delta = delta;
  cert.area_budget = area_budget;

  cert.area_total = curve_area(G);
  cert.record("area_budget", cert.area_total, "<=", area_budget,
              cert.area_total <= area_budget);

  Region K = standard_simplex(n);
  TropicalCurve G_K = restrict_to(G, K);
  cert.restricted_vertex_count = int(G_K.vertices.size());
  Rat area_K = G_K.edges.empty() ? Rat(0) : curve_area(G_K);

  auto wb = weight_bounds(G, delta, area_budget);
  cert.record("weight_component_bound", Rat(wb.max_component), "<=", wb.limit, wb.weights_ok);
  cert.record("crossing_count_bound", Rat(wb.crossing_points), "<=", wb.limit, wb.crossings_ok);

  auto [Gp, log] = saturate(G, delta);
  cert.saturated_vertex_count = int(Gp.vertices.size());
  cert.record("vertex_monotone", Rat(cert.restricted_vertex_count), "<=",
              Rat(cert.saturated_vertex_count),
              cert.restricted_vertex_count <= cert.saturated_vertex_count);

  auto sat = is_saturated(Gp);
  cert.record_bool("saturated", sat.saturated);
  require(sat.saturated, errc::not_saturated, "surgery output failed saturation check");

  std::vector<Int> degrees(n + 1, 0);
  for (const auto& en : sat.entries) degrees[en.facet] += en.multiplicity;
  bool degrees_equal = true;
  for (const auto& di : degrees) degrees_equal = degrees_equal && di == degrees[0];
  cert.record_bool("face_degrees_equal", degrees_equal);
  cert.degree = degrees[0];
  cert.saturated_area = Gp.edges.empty() ? Rat(0) : curve_area(Gp);
  cert.record("area_equals_degree", cert.saturated_area, "==", Rat(cert.degree),
              cert.saturated_area == Rat(cert.degree));

  Rat ratio = area_budget / delta;
  Rat inflation = Rat(n) * ratio * ratio;
  cert.record("area_inflation", cert.saturated_area, "<=", area_K + inflation,
              cert.saturated_area <= area_K + inflation);

  std::vector<PathFamily> families;
  Int v0_bound = 2 * cert.degree * (n - 1);
  for (int i = 0; i + 1 < n; ++i) {
    PathFamily fam = path_family_for_face(Gp, i, tie);
    Certificate::DirectionStats stats;
    stats.direction = i;
    stats.v0_bound = v0_bound;
    bool all_ok = true;
    for (const auto& p : fam.paths) {
      auto chk = v0_bound_check(p, Gp, cert.degree);
      stats.v0_counts.push_back(chk.count);
      all_ok = all_ok && chk.pass;
    }
    cert.record_bool("v0_bound_dir" + std::to_string(i + 1), all_ok);
    cert.per_direction.push_back(std::move(stats));
    families.push_back(std::move(fam));
  }
  auto cover = cover_check(Gp, families);
  cert.cover_misses.assign(cover.misses.begin(), cover.misses.end());
  cert.record_bool("v0_cover", cover.covered);

  cert.degree_bound = 2 * Int(n - 1) * Int(n - 1) * cert.degree * cert.degree;
  cert.record("vertex_bound_degree", Rat(cert.saturated_vertex_count), "<=",
              Rat(cert.degree_bound),
              Rat(cert.saturated_vertex_count) <= Rat(cert.degree_bound));
  cert.record("vertex_bound_restricted", Rat(cert.restricted_vertex_count), "<=",
              Rat(cert.degree_bound),
              Rat(cert.restricted_vertex_count) <= Rat(cert.degree_bound));
  Rat budget_total = area_budget + inflation;
  cert.apriori_bound = 2 * Rat(n - 1) * Rat(n - 1) * budget_total * budget_total;
  cert.record("vertex_bound_apriori", Rat(cert.restricted_vertex_count), "<=",
              cert.apriori_bound, Rat(cert.restricted_vertex_count) <= cert.apriori_bound);
  return cert;
}

}  // namespace tropgeo
