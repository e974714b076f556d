#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "tropgeo/boundary.hpp"
#include "tropgeo/curve.hpp"

namespace tropgeo {

/// The unique non-negative coefficients of w over the spanning set
/// e'_0 = (1,...,1), e'_j = -e_j, with at least one coefficient zero.
struct Decomposition {
  std::vector<Int> a;  // size n+1; a[0] multiplies (1,...,1)

  IntVec reconstruct(int n) const {
    IntVec w(n, 0);
    for (int j = 0; j < n; ++j) w[j] = a[0] - a[j + 1];
    return w;
  }
};

inline Decomposition decompose(const IntVec& w) {
  const int n = int(w.size());
  Int a0 = 0;
  for (const auto& x : w) a0 = std::max(a0, x);
  Decomposition d;
  d.a.resize(n + 1);
  d.a[0] = a0;
  for (int j = 0; j < n; ++j) d.a[j + 1] = a0 - w[j];
  return d;
}

/// Per-facet inward offsets for the collar: vertices of the curve stay
/// strictly inside the shrunken simplex, every edge crosses its boundary
/// transversally, and no crossing lands on a collar corner. Offsets are
/// halved (up to 64 times) until the last two conditions hold.
inline std::vector<Rat> choose_collar(const TropicalCurve& G_K) {
  const Region& K = G_K.region;
  const int n = G_K.dim;
  require(K == standard_simplex(n), errc::precondition_violated,
          "collar construction expects the standard simplex");
  std::vector<std::optional<Extent>> extents;
  for (const auto& e : G_K.edges) {
    for (const auto& h : K.halfspaces())
      require(!(dot(h.normal, edge_dirvec(e)) == 0 && dot(h.normal, e.tail) == h.offset),
              errc::degenerate_curve,
              "edge " + std::to_string(e.id) + " lies in a facet hyperplane of K");
    extents.push_back(clipped_extent(e, K));
  }
  std::vector<Rat> offsets(K.halfspaces().size());
  if (!G_K.vertices.empty()) {
    for (std::size_t f = 0; f < K.halfspaces().size(); ++f) {
      const auto& h = K.halfspaces()[f];
      Rat margin;
      bool first = true;
      for (const auto& v : G_K.vertices) {
        Rat m = h.offset - dot(h.normal, v);
        if (first || m < margin) margin = m;
        first = false;
      }
      require(margin > 0, errc::precondition_violated, "vertex on the simplex boundary");
      offsets[f] = margin / 2;
    }
  } else {
    std::fill(offsets.begin(), offsets.end(), Rat(1, 4 * (n + 1)));
  }
  // Break the symmetry between facets: with equal offsets, an edge through a
  // corner of K in a symmetric direction (e.g. a diagonal chord through the
  // origin) hits the corresponding collar corner at every offset scale, and
  // halving can never repair that. Distinct per-facet factors put the collar
  // corners in general position relative to such edges.
  for (std::size_t f = 0; f < offsets.size(); ++f)
    offsets[f] *= Rat(Int(101), Int(101 + 2 * f));
  for (int attempt = 0; attempt < 64; ++attempt) {
    Region collar = K.shrink(offsets);
    bool ok = true;
    for (std::size_t idx = 0; idx < G_K.edges.size() && ok; ++idx) {
      if (!extents[idx]) continue;
      const auto& ext = *extents[idx];
      for (const auto& h : collar.halfspaces())
        if (dot(h.normal, ext.dir) == 0 && dot(h.normal, ext.base) == h.offset) ok = false;
      if (!ok) break;
      auto iv = collar.clip_line(ext.base, ext.dir, Rat(0), ext.len);
      if (!iv) continue;
      if (iv->lo == iv->hi) {
        ok = false;
        break;
      }
      for (const Rat& t : {iv->lo, iv->hi}) {
        if (t == 0 || t == ext.len) continue;  // endpoint inside the collar region
        if (collar.tight_facets(ext.at(t)).size() >= 2) ok = false;
      }
    }
    if (ok) return offsets;
    for (auto& o : offsets) o /= 2;
  }
  fail(errc::collar_failure, "no admissible collar offset found");
}

/// Audit record of the saturation surgery.
struct SurgeryLog {
  struct AddedRay {
    int edge_id;
    int direction_index;  // 0 = diagonal (1,...,1), j >= 1 = -e_j
    Int multiplicity;
  };
  struct Truncation {
    int edge_id;
    RatVec point;          // new vertex on the collar boundary
    RatVec deleted_from;   // removed extent, point -> deleted_to
    RatVec deleted_to;
    IntVec outward;        // representative pointing out of the collar
    std::vector<AddedRay> rays;
  };
  std::vector<Rat> collar_offsets;
  std::vector<Truncation> truncations;
  std::vector<int> dropped_edges;  // collar-only edges removed entirely
  int retries = 0;
};

namespace detail {

/// Whether a closure endpoint of an extent is an admissible saturated end:
/// on exactly one facet, perpendicular to it.
inline bool good_boundary_end(const Region& K, const Weight& w, const RatVec& p) {
  auto tight = K.tight_facets(p);
  if (tight.size() != 1) return false;
  return w.direction == simplex_facet_direction(K.dim(), tight.front());
}

}  // namespace detail

/// The saturation trick: restrict G to the standard simplex, truncate every
/// boundary-misbehaving edge at the collar, and rebalance each truncation
/// point with axis/diagonal rays per the coordinate decomposition of the
/// outward representative. Returns the saturated curve and the surgery log.
inline std::pair<TropicalCurve, SurgeryLog> saturate(const TropicalCurve& G,
                                                     const Rat& delta) {
  (void)delta;  // the area bounds involving delta are checked by certify
  const int n = G.dim;
  Region K = standard_simplex(n);
  TropicalCurve G_K = restrict_to(G, K);
  std::vector<Rat> offsets = choose_collar(G_K);

  for (int attempt = 0; attempt < 64; ++attempt) {
    Region collar = K.shrink(offsets);
    TropicalCurve out(n, K);
    out.vertices = G_K.vertices;
    out.unbalanced_ok = G_K.unbalanced_ok;
    SurgeryLog log;
    log.collar_offsets = offsets;
    log.retries = attempt;
    int next_id = G_K.next_edge_id();
    bool skeleton_hit = false;

    for (const auto& e : G_K.edges) {
      auto ext_opt = clipped_extent(e, K);
      require(ext_opt.has_value() && ext_opt->len > 0, errc::degenerate_edge,
              "edge " + std::to_string(e.id) + " has degenerate extent");
      const Extent& ext = *ext_opt;
      RatVec p_lo = ext.base, p_hi = ext.end();
      bool lo_boundary = K.on_boundary(p_lo), hi_boundary = K.on_boundary(p_hi);
      bool lo_bad = lo_boundary && !detail::good_boundary_end(K, e.weight, p_lo);
      bool hi_bad = hi_boundary && !detail::good_boundary_end(K, e.weight, p_hi);
      if (!lo_bad && !hi_bad) {
        out.edges.push_back(e);
        continue;
      }
      auto iv = collar.clip_line(ext.base, ext.dir, Rat(0), ext.len);
      if (!iv || iv->lo == iv->hi) {
        // the edge never enters the collar interior: it lives entirely in
        // the boundary strip, carries no vertices, and is removed whole
        require(!G_K.vertex_at(p_lo) && !G_K.vertex_at(p_hi), errc::collar_failure,
                "vertex-bearing edge trapped in the collar strip");
        log.dropped_edges.push_back(e.id);
        continue;
      }
      Rat keep_lo = lo_bad ? iv->lo : Rat(0);
      Rat keep_hi = hi_bad ? iv->hi : ext.len;
      RatVec q_lo = ext.at(keep_lo), q_hi = ext.at(keep_hi);
      out.edges.push_back(Edge::segment(e.id, q_lo, q_hi, e.weight));
      struct End {
        bool bad;
        RatVec point;
        RatVec deleted_to;
        IntVec outward;
      };
      std::vector<End> ends;
      if (lo_bad) ends.push_back({true, q_lo, p_lo, negate(ext.dir)});
      if (hi_bad) ends.push_back({true, q_hi, p_hi, ext.dir});
      for (const auto& end : ends) {
        SurgeryLog::Truncation tr;
        tr.edge_id = e.id;
        tr.point = end.point;
        tr.deleted_from = end.point;
        tr.deleted_to = end.deleted_to;
        tr.outward = end.outward;
        Decomposition dec = decompose(end.outward);
        for (int idx = 0; idx <= n; ++idx) {
          if (dec.a[idx] == 0) continue;
          IntVec geo = idx == 0 ? ones_vec(n) : unit_vec(n, idx - 1, -1);
          Weight w = canonical_weight(geo);
          w.multiplicity = dec.a[idx];
          int sign = idx == 0 ? 1 : -1;
          Edge ray = Edge::ray(next_id++, end.point, sign, w);
          auto rext = clipped_extent(ray, K);
          require(rext.has_value() && rext->len > 0, errc::skeleton_ray,
                  "added ray has empty extent");
          if (K.tight_facets(rext->end()).size() >= 2) skeleton_hit = true;
          out.edges.push_back(ray);
          tr.rays.push_back({ray.id, idx, dec.a[idx]});
        }
        if (!out.vertex_at(end.point)) out.add_vertex(end.point);
        log.truncations.push_back(std::move(tr));
      }
    }
    if (!skeleton_hit) return {std::move(out), std::move(log)};
    for (auto& o : offsets) o /= 2;
  }
  fail(errc::skeleton_ray, "added rays kept hitting the skeleton");
}

}  // namespace tropgeo
