#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "tropgeo/curve.hpp"

namespace tropgeo {

/// A transversal intersection of the curve with the boundary of a region.
struct BoundaryHit {
  int edge_id;
  int facet;        // facet index of the region (FaceId for simplexes)
  RatVec point;
  IntVec outward;   // weight representative pointing inside -> outside
  bool on_skeleton; // point lies on >= 2 facet hyperplanes
  Int multiplicity; // multiplicity of the crossing edge
};

namespace detail {

inline BoundaryHit make_hit(const TropicalCurve& G, const Edge& e, const Region& W,
                            const RatVec& point, const IntVec& outward) {
  auto tight = W.tight_facets(point);
  require(!tight.empty(), errc::precondition_violated, "hit point not on boundary");
  return BoundaryHit{e.id, tight.front(), point, outward, tight.size() >= 2,
                     e.weight.multiplicity};
}

}  // namespace detail

/// All transversal crossings of G with the boundary of W, for W a polytope
/// whose closure sits strictly inside G's region. Outward representatives
/// point from the inside of W to the outside.
inline std::vector<BoundaryHit> boundary_crossings(const TropicalCurve& G, const Region& W) {
  require(G.region.strictly_contains_region(W), errc::precondition_violated,
          "closure of W must lie in the interior of the ambient region");
  for (std::size_t v = 0; v < G.vertices.size(); ++v)
    require(!W.on_boundary(G.vertices[v]), errc::vertex_on_boundary,
            "vertex " + std::to_string(v) + " lies on the boundary of W");
  std::vector<BoundaryHit> hits;
  for (const auto& e : G.edges) {
    auto full = clipped_extent(e, G.region);
    if (!full || full->len == 0) continue;
    for (const auto& h : W.halfspaces())
      require(!(dot(h.normal, full->dir) == 0 && dot(h.normal, full->base) == h.offset),
              errc::non_transversal,
              "edge " + std::to_string(e.id) + " lies in a facet hyperplane of W");
    auto iv = W.clip_line(full->base, full->dir, Rat(0), full->len);
    if (!iv) continue;
    if (iv->lo == iv->hi)
      fail(errc::non_transversal,
           "edge " + std::to_string(e.id) + " touches the boundary of W in a point");
    // an edge endpoint resting exactly on the boundary of W is not transversal
    for (const Rat& t : {Rat(0), full->len})
      if (W.on_boundary(full->at(t)))
        fail(errc::non_transversal,
             "edge " + std::to_string(e.id) + " ends on the boundary of W");
    if (iv->lo > 0)
      hits.push_back(detail::make_hit(G, e, W, full->at(iv->lo), negate(full->dir)));
    if (iv->hi < full->len)
      hits.push_back(detail::make_hit(G, e, W, full->at(iv->hi), full->dir));
  }
  return hits;
}

/// Exact sum of outward representatives over all crossings of the boundary
/// of W; zero for every balanced curve (the global balancing lemma).
inline IntVec global_balance(const TropicalCurve& G, const Region& W) {
  IntVec sum(G.dim, 0);
  for (const auto& hit : boundary_crossings(G, W)) sum = add(sum, hit.outward);
  return sum;
}

/// Intersections of the closure of G with the boundary of its own region:
/// the extent endpoints that land on facet hyperplanes. Outward points out
/// of the region.
inline std::vector<BoundaryHit> closure_boundary_hits(const TropicalCurve& G) {
  std::vector<BoundaryHit> hits;
  for (const auto& e : G.edges) {
    auto ext = clipped_extent(e, G.region);
    if (!ext) continue;
    require(ext->len > 0, errc::degenerate_edge,
            "edge " + std::to_string(e.id) + " clips to a point");
    for (const auto& h : G.region.halfspaces())
      require(!(dot(h.normal, ext->dir) == 0 && dot(h.normal, ext->base) == h.offset),
              errc::degenerate_curve,
              "edge " + std::to_string(e.id) + " lies in a boundary facet");
    if (G.region.on_boundary(ext->base))
      hits.push_back(detail::make_hit(G, e, G.region, ext->base, negate(ext->dir)));
    if (G.region.on_boundary(ext->end()))
      hits.push_back(detail::make_hit(G, e, G.region, ext->end(), ext->dir));
  }
  return hits;
}

struct SaturationReport {
  struct Entry {
    int edge_id;
    int facet;
    RatVec point;
    bool on_skeleton;
    bool perpendicular;
    Int multiplicity;
  };
  std::vector<Entry> entries;
  bool saturated = true;
};

namespace detail {

/// Facet normal of the standard simplex as a primitive canonical direction:
/// (1,...,1) for the sum-facet, e_i for facet i.
inline IntVec simplex_facet_direction(int n, int facet) {
  return facet == 0 ? ones_vec(n) : unit_vec(n, facet - 1, 1);
}

}  // namespace detail

/// Checks the saturation conditions for a curve in the open standard
/// simplex: the closure avoids the (n-2)-skeleton and meets each facet
/// perpendicularly.
inline SaturationReport is_saturated(const TropicalCurve& G) {
  require(G.region == standard_simplex(G.dim), errc::precondition_violated,
          "saturation is defined for curves in the standard simplex");
  for (std::size_t v = 0; v < G.vertices.size(); ++v)
    require(G.region.strictly_contains(G.vertices[v]), errc::precondition_violated,
            "vertex " + std::to_string(v) + " is not in the open simplex");
  SaturationReport rep;
  for (const auto& hit : closure_boundary_hits(G)) {
    const Edge& e = G.edge_by_id(hit.edge_id);
    bool perp = e.weight.direction == detail::simplex_facet_direction(G.dim, hit.facet);
    rep.entries.push_back(
        {hit.edge_id, hit.facet, hit.point, hit.on_skeleton, perp, hit.multiplicity});
    if (hit.on_skeleton || !perp) rep.saturated = false;
  }
  return rep;
}

/// Per-facet sums of crossing multiplicities of a saturated curve, indexed
/// by FaceId (entry 0 is the sum-facet). The balancing condition forces all
/// entries equal; callers assert this.
inline std::vector<Int> face_degrees(const TropicalCurve& G) {
  auto rep = is_saturated(G);
  require(rep.saturated, errc::not_saturated, "face degrees need a saturated curve");
  std::vector<Int> d(G.dim + 1, 0);
  for (const auto& en : rep.entries) d[en.facet] += en.multiplicity;
  return d;
}

struct SaturatedAreaCheck {
  Rat area;
  Int degree;
  bool equal;
};

/// Exact check of Area(G) = d for saturated curves.
inline SaturatedAreaCheck saturated_area_check(const TropicalCurve& G) {
  auto d = face_degrees(G);
  for (const auto& di : d)
    require(di == d[0], errc::not_saturated, "face degrees disagree");
  Rat area = curve_area(G);
  return {area, d[0], area == Rat(d[0])};
}

/// Density of the area measure of a saturated curve along the i-th axis at
/// height zeta: the sum of |w_e^i| over edges whose i-th coordinate span
/// strictly contains zeta. i is 0-based.
inline Int measure_density(const TropicalCurve& G, int i, const Rat& zeta) {
  require(i >= 0 && i < G.dim, errc::bad_dimension, "direction out of range");
  require(zeta > 0 && zeta < 1, errc::degenerate_slice, "slice must lie in (0,1)");
  for (const auto& v : G.vertices)
    require(v[i] != zeta, errc::degenerate_slice, "slice hits a vertex coordinate");
  for (const auto& hit : closure_boundary_hits(G))
    if (hit.facet == 0)
      require(hit.point[i] != zeta, errc::degenerate_slice,
              "slice hits a boundary crossing coordinate");
  Int density = 0;
  for (const auto& e : G.edges) {
    auto ext = clipped_extent(e, G.region);
    if (!ext || ext->dir[i] == 0) continue;
    Rat a = ext->base[i], b = ext->end()[i];
    if (a > b) std::swap(a, b);
    if (a < zeta && zeta < b) density += int_abs(ext->dir[i]);
  }
  return density;
}

/// The crossing-sum prediction d - sum of multiplicities of sum-facet
/// crossings with i-th coordinate below zeta (the inner lemma of the
/// area-equals-degree proposition).
inline Int density_prediction(const TropicalCurve& G, int i, const Rat& zeta) {
  auto d = face_degrees(G);
  Int pred = d[0];
  for (const auto& hit : closure_boundary_hits(G))
    if (hit.facet == 0 && hit.point[i] < zeta) pred -= hit.multiplicity;
  return pred;
}

}  // namespace tropgeo
