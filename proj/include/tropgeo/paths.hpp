#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tropgeo/boundary.hpp"
#include "tropgeo/curve.hpp"

namespace tropgeo {

enum class TieRule { smallest_id, lex_direction };

/// One clipped edge traversal inside a path, oriented so that the i-th
/// coordinate increases from `from` to `to`. The carried weight is
/// w_e / |w_e^i| as a rational weight class.
struct PathSegment {
  int edge_id;
  RatVec from;
  RatVec to;
  QWeight weight;
};

/// A capacity-respecting monotone chain of weighted segments in direction i.
struct Path {
  int direction;  // 0-based axis
  int entry_edge;
  std::vector<PathSegment> segments;
  std::vector<int> interior_vertices;  // vertex ids at segment junctions
  RatVec exit_point;
};

struct PathFamily {
  int direction;
  std::vector<Path> paths;
  std::map<int, Int> usage;  // edge id -> number of paths through it

  Int usage_of(int edge_id) const {
    auto it = usage.find(edge_id);
    return it == usage.end() ? Int(0) : it->second;
  }
};

namespace detail {

inline Int capacity_of(const Edge& e, int i) { return int_abs(e.weight.vec()[i]); }

inline QWeight path_weight(const Edge& e, int i) {
  return QWeight{e.weight, Rat(1, capacity_of(e, i))};
}

/// Traces one path from entry_edge through R, consuming shared capacity
/// (usage counts). Junctions must be declared vertices of H.
inline Path trace_path(const TropicalCurve& H, const Region& R, int entry_edge, int i,
                       TieRule tie, std::map<int, Int>& usage) {
  Path path;
  path.direction = i;
  path.entry_edge = entry_edge;

  const Edge* cur = &H.edge_by_id(entry_edge);
  usage[cur->id] += 1;

  // total capacity bounds the number of steps; guards against cycles
  Int guard = 0;
  for (const auto& e : H.edges) guard += capacity_of(e, i);

  // orient the entry edge with increasing x_i
  auto clip_oriented = [&](const Edge& e, RatVec* from, RatVec* to) {
    auto full = clipped_extent(e, H.region);
    require(full.has_value(), errc::precondition_violated,
            "edge " + std::to_string(e.id) + " has empty extent");
    auto iv = R.clip_line(full->base, full->dir, Rat(0), full->len);
    require(iv.has_value() && iv->lo < iv->hi, errc::precondition_violated,
            "edge " + std::to_string(e.id) + " does not cross R");
    RatVec a = full->at(iv->lo), b = full->at(iv->hi);
    if (full->dir[i] > 0) {
      *from = a;
      *to = b;
    } else {
      *from = b;
      *to = a;
    }
  };

  RatVec from, to;
  clip_oriented(*cur, &from, &to);
  for (Int step = 0;; ++step) {
    require(step <= guard, errc::stuck_vertex, "path tracing did not terminate");
    path.segments.push_back({cur->id, from, to, path_weight(*cur, i)});
    if (R.on_boundary(to)) {
      path.exit_point = to;
      return path;
    }
    auto v = H.vertex_at(to);
    require(v.has_value(), errc::stuck_vertex,
            "edge " + std::to_string(cur->id) + " dangles at " + format_vec(to));
    path.interior_vertices.push_back(*v);
    // onward candidates: incident edges gaining x_i, with remaining capacity
    auto incidences = incident_edges_at(H, to);
    const Incidence* best = nullptr;
    for (const auto& inc : incidences) {
      if (inc.outward[i] <= 0) continue;
      const Edge& cand = H.edge_by_id(inc.edge_id);
      Int used = usage.count(cand.id) ? usage[cand.id] : Int(0);
      if (used >= capacity_of(cand, i)) continue;
      if (!best) {
        best = &inc;
        continue;
      }
      bool better = false;
      if (tie == TieRule::smallest_id) {
        better = inc.edge_id < best->edge_id;
      } else {
        better = inc.outward < best->outward ||
                 (inc.outward == best->outward && inc.edge_id < best->edge_id);
      }
      if (better) best = &inc;
    }
    require(best != nullptr, errc::stuck_vertex,
            "no onward edge with capacity at vertex " + std::to_string(*v));
    cur = &H.edge_by_id(best->edge_id);
    usage[cur->id] += 1;
    clip_oriented(*cur, &from, &to);
    require(from == path.segments.back().to, errc::stuck_vertex,
            "onward edge does not start at the junction");
  }
}

inline void check_extract_preconditions(const TropicalCurve& H, const Region& R,
                                        const Edge& e0, int i) {
  require(i >= 0 && i < H.dim, errc::precondition_violated, "direction out of range");
  require(H.region.contains_region(R), errc::precondition_violated,
          "R must be contained in the ambient region");
  // R needs a facet on {x_i = c} with R in {x_i >= c}
  int facet = -1;
  for (std::size_t f = 0; f < R.halfspaces().size(); ++f) {
    const auto& h = R.halfspaces()[f];
    bool axis = h.normal[i] < 0;
    for (int j = 0; j < H.dim && axis; ++j)
      if (j != i && h.normal[j] != 0) axis = false;
    if (axis) {
      facet = int(f);
      break;
    }
  }
  require(facet >= 0, errc::precondition_violated,
          "R has no lower facet orthogonal to the chosen direction");
  for (std::size_t v = 0; v < H.vertices.size(); ++v)
    require(!R.on_boundary(H.vertices[v]), errc::precondition_violated,
            "vertex " + std::to_string(v) + " lies on the boundary of R");
  require(capacity_of(e0, i) > 0, errc::precondition_violated,
          "entry edge has zero weight component in the chosen direction");
  // the entry edge must meet the relative interior of the lower facet
  auto full = clipped_extent(e0, H.region);
  require(full.has_value() && full->len > 0, errc::precondition_violated,
          "entry edge has empty extent");
  auto iv = R.clip_line(full->base, full->dir, Rat(0), full->len);
  require(iv.has_value() && iv->lo < iv->hi, errc::precondition_violated,
          "entry edge does not cross R");
  Rat t_entry = full->dir[i] > 0 ? iv->lo : iv->hi;
  auto tight = R.tight_facets(full->at(t_entry));
  require(tight.size() == 1 && tight.front() == facet, errc::precondition_violated,
          "entry edge does not cross the relative interior of the lower facet");
}

}  // namespace detail

/// The capacity-greedy path decomposition: |w_{e0}^i| paths starting from
/// e0 in direction i, sharing one capacity table. A StuckVertex error means
/// the input violates the balancing condition.
inline PathFamily extract_paths(const TropicalCurve& H, const Region& R, int e0_id, int i,
                                TieRule tie = TieRule::smallest_id) {
  const Edge& e0 = H.edge_by_id(e0_id);
  detail::check_extract_preconditions(H, R, e0, i);
  PathFamily fam;
  fam.direction = i;
  Int m = detail::capacity_of(e0, i);
  for (Int k = 0; k < m; ++k)
    fam.paths.push_back(detail::trace_path(H, R, e0_id, i, tie, fam.usage));
  return fam;
}

/// Per-edge union weights k * w_e / |w_e^i| of a path family. The scalar
/// k / |w_e^i| never exceeds 1 when capacities are respected.
inline std::map<int, QWeight> union_weights(const TropicalCurve& H, const PathFamily& F) {
  std::map<int, QWeight> out;
  for (const auto& [id, k] : F.usage) {
    const Edge& e = H.edge_by_id(id);
    out.emplace(id, QWeight{e.weight, Rat(k, detail::capacity_of(e, F.direction))});
  }
  return out;
}

/// For a saturated curve of degree d: the d paths entering through facet
/// {x_i = 0}, one per crossing multiplicity, sharing capacities across the
/// whole family. i is 0-based.
inline PathFamily path_family_for_face(const TropicalCurve& G, int i,
                                       TieRule tie = TieRule::smallest_id) {
  auto rep = is_saturated(G);
  require(rep.saturated, errc::not_saturated, "path families need a saturated curve");
  std::vector<std::pair<int, Int>> entries;  // edge id, multiplicity
  for (const auto& en : rep.entries)
    if (en.facet == i + 1) entries.push_back({en.edge_id, en.multiplicity});
  std::sort(entries.begin(), entries.end());
  PathFamily fam;
  fam.direction = i;
  for (const auto& [eid, mult] : entries) {
    detail::check_extract_preconditions(G, G.region, G.edge_by_id(eid), i);
    for (Int k = 0; k < mult; ++k)
      fam.paths.push_back(detail::trace_path(G, G.region, eid, i, tie, fam.usage));
  }
  return fam;
}

/// Vertices on P having an off-path incident edge with a nonzero weight
/// component transverse to the path direction.
inline std::set<int> v0_set(const Path& P, const TropicalCurve& G, int i) {
  std::set<int> hosts;
  for (const auto& s : P.segments) hosts.insert(s.edge_id);
  std::set<int> v0;
  for (int q : P.interior_vertices) {
    for (const auto& inc : incident_edges_at(G, G.vertices[q])) {
      if (hosts.count(inc.edge_id)) continue;
      bool transverse = false;
      for (int j = 0; j < G.dim; ++j)
        if (j != i && inc.outward[j] != 0) transverse = true;
      if (transverse) {
        v0.insert(q);
        break;
      }
    }
  }
  return v0;
}

struct V0BoundCheck {
  Int count;
  Int bound;
  bool pass;
};

/// #V0(P) <= 2 d (n-1).
inline V0BoundCheck v0_bound_check(const Path& P, const TropicalCurve& G, const Int& d) {
  Int count = Int(v0_set(P, G, P.direction).size());
  Int bound = 2 * d * (G.dim - 1);
  return {count, bound, count <= bound};
}

struct CoverCheck {
  bool covered;
  std::set<int> misses;
};

/// Whether the union of V0 sets over the families for directions 1..n-1
/// covers every vertex of G. Misses are reported rather than asserted away.
inline CoverCheck cover_check(const TropicalCurve& G, const std::vector<PathFamily>& families) {
  std::set<int> covered;
  for (const auto& fam : families)
    for (const auto& p : fam.paths)
      for (int q : v0_set(p, G, fam.direction)) covered.insert(q);
  CoverCheck out;
  for (std::size_t v = 0; v < G.vertices.size(); ++v)
    if (!covered.count(int(v))) out.misses.insert(int(v));
  out.covered = out.misses.empty();
  return out;
}

struct FlowBound {
  Rat area_restriction;
  Int component;  // m = |w_{e0}^i|
  bool pass;
};

/// The flow lower bound Area(H restricted to the unit flow box around an
/// interior point of e0) >= |w_{e0}^i|. The box is [z_i, z_i+1] in the flow
/// direction and [z_j-1, z_j+1] transversally, centered at the midpoint z
/// of e0's extent.
inline FlowBound flow_lower_bound(const TropicalCurve& H, int e0_id, int i) {
  require(i >= 0 && i < H.dim, errc::precondition_violated, "direction out of range");
  const Edge& e0 = H.edge_by_id(e0_id);
  auto ext = clipped_extent(e0, H.region);
  require(ext.has_value() && ext->len > 0, errc::precondition_violated,
          "entry edge has empty extent");
  RatVec z = ext->at(ext->len / 2);
  RatVec lo(H.dim), hi(H.dim);
  for (int j = 0; j < H.dim; ++j) {
    lo[j] = j == i ? z[j] : z[j] - 1;
    hi[j] = z[j] + 1;
  }
  Region R = box_region(lo, hi);
  require(H.region.contains_region(R), errc::precondition_violated,
          "flow box exceeds the ambient region");
  Rat area = 0;
  for (const auto& e : H.edges) {
    auto full = clipped_extent(e, H.region);
    if (!full || full->len == 0) continue;
    auto iv = R.clip_line(full->base, full->dir, Rat(0), full->len);
    if (!iv || iv->lo == iv->hi) continue;
    area += (iv->hi - iv->lo) * Rat(e.weight.norm_sq());
  }
  Int m = detail::capacity_of(e0, i);
  return {area, m, area >= Rat(m)};
}

}  // namespace tropgeo
