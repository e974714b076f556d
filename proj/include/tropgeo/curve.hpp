#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tropgeo/region.hpp"
#include "tropgeo/weight.hpp"

namespace tropgeo {

/// A weighted segment or ray. Segments carry an explicit head; rays extend
/// from the tail along ray_sign * (multiplicity * direction) and are clipped
/// by the ambient region wherever geometry is needed.
struct Edge {
  enum class Kind { segment, ray };

  int id = 0;
  RatVec tail;
  Kind kind = Kind::segment;
  RatVec head;       // segment only
  int ray_sign = 1;  // ray only, +1 or -1
  Weight weight;

  static Edge segment(int id, RatVec tail, RatVec head, Weight w) {
    Edge e;
    e.id = id;
    e.tail = std::move(tail);
    e.kind = Kind::segment;
    e.head = std::move(head);
    e.weight = std::move(w);
    return e;
  }

  static Edge ray(int id, RatVec tail, int sign, Weight w) {
    Edge e;
    e.id = id;
    e.tail = std::move(tail);
    e.kind = Kind::ray;
    e.ray_sign = sign;
    e.weight = std::move(w);
    return e;
  }
};

/// Geometric extent of an edge: points base + t * dir for t in [0, len].
/// dir is an integer representative of the weight (possibly negated so the
/// parameterization runs tail -> head, resp. along the ray).
struct Extent {
  RatVec base;
  IntVec dir;  // = ±(multiplicity * direction)
  Rat len;     // >= 0

  RatVec at(const Rat& t) const { return axpy(base, t, dir); }
  RatVec end() const { return at(len); }
};

/// Oriented direction vector of an edge: for a segment, the integer weight
/// representative pointing tail -> head; for a ray, along its geometric
/// direction. Throws if a segment is not parallel to its weight.
inline IntVec edge_dirvec(const Edge& e) {
  IntVec wv = e.weight.vec();
  if (e.kind == Edge::Kind::ray) {
    if (e.ray_sign < 0) wv = negate(wv);
    return wv;
  }
  // head - tail = lambda * wv with lambda a nonzero rational
  std::size_t k = 0;
  while (k < wv.size() && wv[k] == 0) ++k;
  Rat lambda = (e.head[k] - e.tail[k]) / Rat(wv[k]);
  for (std::size_t i = 0; i < wv.size(); ++i)
    require(e.head[i] - e.tail[i] == lambda * Rat(wv[i]), errc::degenerate_edge,
            "edge " + std::to_string(e.id) + " not parallel to its weight");
  require(lambda != 0, errc::degenerate_edge,
          "edge " + std::to_string(e.id) + " has zero length");
  return lambda > 0 ? wv : negate(wv);
}

/// The rational parameter lambda with head - tail = lambda * weight.vec().
inline Rat segment_lambda(const Edge& e) {
  IntVec wv = e.weight.vec();
  std::size_t k = 0;
  while (k < wv.size() && wv[k] == 0) ++k;
  return (e.head[k] - e.tail[k]) / Rat(wv[k]);
}

/// Extent of e clipped against region. nullopt when the clip is empty;
/// a zero-length result is returned as-is (callers decide whether a point
/// extent is an error).
inline std::optional<Extent> clipped_extent(const Edge& e, const Region& region) {
  IntVec dir = edge_dirvec(e);
  std::optional<Rat> hi;
  if (e.kind == Edge::Kind::segment) hi = rat_abs(segment_lambda(e));
  auto iv = region.clip_line(e.tail, dir, Rat(0), hi);
  if (!iv) return std::nullopt;
  return Extent{axpy(e.tail, iv->lo, dir), dir, iv->hi - iv->lo};
}

/// A tropical curve: declared vertices plus weighted edges in an ambient
/// region. Adjacency is recovered geometrically from exact endpoint matches.
/// Vertices listed in unbalanced_ok are exempt from balancing checks
/// (used by deliberately truncated generator output).
struct TropicalCurve {
  int dim;
  Region region;
  std::vector<RatVec> vertices;
  std::vector<Edge> edges;
  std::vector<int> unbalanced_ok;
  std::map<std::string, std::string> metadata;

  TropicalCurve(int n, Region r) : dim(n), region(std::move(r)) {}

  int add_vertex(RatVec p) {
    vertices.push_back(std::move(p));
    return int(vertices.size()) - 1;
  }

  int next_edge_id() const {
    int m = 0;
    for (const auto& e : edges) m = std::max(m, e.id + 1);
    return m;
  }

  const Edge& edge_by_id(int id) const {
    for (const auto& e : edges)
      if (e.id == id) return e;
    fail(errc::unknown_vertex, "no edge with id " + std::to_string(id));
  }

  std::optional<int> vertex_at(const RatVec& p) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == p) return int(i);
    return std::nullopt;
  }

  bool balancing_exempt(int v) const {
    return std::find(unbalanced_ok.begin(), unbalanced_ok.end(), v) != unbalanced_ok.end();
  }
};

struct Incidence {
  int edge_id;
  IntVec outward;  // weight representative pointing away from the vertex
};

/// Edges having the given point as an endpoint of their (unclipped) extent,
/// with outward-pointing weight representatives.
inline std::vector<Incidence> incident_edges_at(const TropicalCurve& G, const RatVec& p) {
  std::vector<Incidence> out;
  for (const auto& e : G.edges) {
    IntVec dir = edge_dirvec(e);
    if (e.tail == p) out.push_back({e.id, dir});
    if (e.kind == Edge::Kind::segment && e.head == p) out.push_back({e.id, negate(dir)});
  }
  return out;
}

/// Tropical area of one edge, clipped to the region: |lambda| * normSq of the
/// weight, which equals Euclidean length times weight norm exactly.
inline Rat edge_area(const Edge& e, const Region& region) {
  auto ext = clipped_extent(e, region);
  require(ext.has_value(), errc::degenerate_edge,
          "edge " + std::to_string(e.id) + " has empty extent in region");
  require(ext->len > 0, errc::degenerate_edge,
          "edge " + std::to_string(e.id) + " clips to a point");
  return ext->len * Rat(e.weight.norm_sq());
}

inline Rat curve_area(const TropicalCurve& G) {
  Rat a = 0;
  for (const auto& e : G.edges) a += edge_area(e, G.region);
  return a;
}

/// Exact sum of outward weight representatives at a declared vertex;
/// the zero vector iff the vertex is balanced.
inline IntVec check_balancing(const TropicalCurve& G, int v) {
  require(v >= 0 && v < int(G.vertices.size()), errc::unknown_vertex,
          "vertex " + std::to_string(v));
  IntVec sum(G.dim, 0);
  for (const auto& inc : incident_edges_at(G, G.vertices[v])) sum = add(sum, inc.outward);
  return sum;
}

enum class ValidationLevel { strict, lenient };

struct ValidationReport {
  struct Item {
    std::string kind;
    std::string detail;
  };
  std::vector<Item> violations;

  bool pass() const { return violations.empty(); }
  void flag(std::string kind, std::string detail) {
    violations.push_back({std::move(kind), std::move(detail)});
  }
};

namespace detail {

// Exact segment/segment intersection: true when the two extents meet
// anywhere other than a shared endpoint of both.
inline bool improper_intersection(const Extent& a, const Extent& b) {
  const std::size_t n = a.base.size();
  // parallel test: all 2x2 minors of (a.dir, b.dir) vanish
  bool parallel = true;
  std::size_t r0 = 0, r1 = 0;
  for (std::size_t i = 0; i < n && parallel; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a.dir[i] * b.dir[j] - a.dir[j] * b.dir[i] != 0) {
        parallel = false;
        r0 = i;
        r1 = j;
        break;
      }
  if (parallel) {
    // collinear iff base difference is parallel to the common direction
    RatVec d = sub(b.base, a.base);
    std::size_t k = 0;
    while (k < n && a.dir[k] == 0) ++k;
    Rat t0 = d[k] / Rat(a.dir[k]);
    for (std::size_t i = 0; i < n; ++i)
      if (d[i] != t0 * Rat(a.dir[i])) return false;
    // b's extent in a's parameter: [t0, t0 + s*len_b] with s = b.dir / a.dir
    Rat s = Rat(b.dir[k]) / Rat(a.dir[k]);
    Rat u0 = t0, u1 = t0 + s * b.len;
    if (u0 > u1) std::swap(u0, u1);
    Rat lo = std::max(Rat(0), u0), hi = std::min(a.len, u1);
    if (lo > hi) return false;
    if (lo < hi) return true;  // overlap with positive length
    // single touch point: fine only if it is an endpoint of both extents
    bool end_a = (lo == 0 || lo == a.len);
    bool end_b = (lo == u0 || lo == u1);
    return !(end_a && end_b);
  }
  // solve a.base + t a.dir = b.base + s b.dir on rows r0, r1
  Rat det = Rat(a.dir[r0]) * Rat(-b.dir[r1]) - Rat(-b.dir[r0]) * Rat(a.dir[r1]);
  Rat c0 = b.base[r0] - a.base[r0], c1 = b.base[r1] - a.base[r1];
  Rat t = (c0 * Rat(-b.dir[r1]) - Rat(-b.dir[r0]) * c1) / det;
  Rat s = (Rat(a.dir[r0]) * c1 - c0 * Rat(a.dir[r1])) / det;
  if (t < 0 || t > a.len || s < 0 || s > b.len) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (a.base[i] + t * Rat(a.dir[i]) != b.base[i] + s * Rat(b.dir[i])) return false;
  bool end_a = (t == 0 || t == a.len);
  bool end_b = (s == 0 || s == b.len);
  return !(end_a && end_b);
}

}  // namespace detail

/// Lenient mode checks weight-parallelism, region containment and balancing
/// at declared vertices; strict mode additionally enforces the full complex
/// conditions: declared >=3-valent vertices, no undeclared interior
/// endpoints, interior vertices, and pairwise intersections only at shared
/// endpoints.
inline ValidationReport validate(const TropicalCurve& G, ValidationLevel level) {
  ValidationReport rep;
  std::vector<std::optional<Extent>> extents(G.edges.size());
  for (std::size_t i = 0; i < G.edges.size(); ++i) {
    const Edge& e = G.edges[i];
    try {
      IntVec dir = edge_dirvec(e);  // throws on bad parallelism / zero length
      if (e.kind == Edge::Kind::segment) {
        if (!G.region.contains(e.tail) || !G.region.contains(e.head))
          rep.flag("CONTAINMENT", "e" + std::to_string(e.id));
      } else {
        if (!G.region.contains(e.tail)) rep.flag("CONTAINMENT", "e" + std::to_string(e.id));
      }
      auto ext = clipped_extent(e, G.region);
      if (!ext || ext->len == 0)
        rep.flag("EMPTY_EXTENT", "e" + std::to_string(e.id));
      else
        extents[i] = ext;
      (void)dir;
    } catch (const trop_error& err) {
      rep.flag("BAD_EDGE", "e" + std::to_string(e.id) + " " + err.what());
    }
  }
  for (std::size_t v = 0; v < G.vertices.size(); ++v) {
    if (!G.region.contains(G.vertices[v])) {
      rep.flag("VERTEX_OUTSIDE", "v" + std::to_string(v));
      continue;
    }
    if (!G.balancing_exempt(int(v))) {
      IntVec defect = check_balancing(G, int(v));
      if (!is_zero(defect))
        rep.flag("UNBALANCED", "v" + std::to_string(v) + " " + format_ivec(defect));
    }
  }
  if (level == ValidationLevel::lenient) return rep;

  // strict: closedness — every edge endpoint strictly inside the region must
  // be a declared vertex
  for (const auto& e : G.edges) {
    std::vector<RatVec> ends{e.tail};
    if (e.kind == Edge::Kind::segment) ends.push_back(e.head);
    for (const auto& p : ends)
      if (G.region.strictly_contains(p) && !G.vertex_at(p))
        rep.flag("UNDECLARED_VERTEX", "e" + std::to_string(e.id) + " at " + format_vec(p));
  }
  for (std::size_t v = 0; v < G.vertices.size(); ++v) {
    if (!G.region.strictly_contains(G.vertices[v]))
      rep.flag("VERTEX_ON_BOUNDARY", "v" + std::to_string(v));
    auto inc = incident_edges_at(G, G.vertices[v]);
    if (inc.size() < 3) rep.flag("LOW_VALENCE", "v" + std::to_string(v));
  }
  for (std::size_t i = 0; i < G.edges.size(); ++i) {
    if (!extents[i]) continue;
    for (std::size_t j = i + 1; j < G.edges.size(); ++j) {
      if (!extents[j]) continue;
      if (detail::improper_intersection(*extents[i], *extents[j]))
        rep.flag("CROSSING", "e" + std::to_string(G.edges[i].id) + " e" +
                                 std::to_string(G.edges[j].id));
    }
  }
  return rep;
}

/// Restriction of G to a sub-polytope V: clips every edge, keeps vertices in
/// V's interior, and preserves edge records that are untouched by the clip
/// (so restricting to the full region is the identity).
inline TropicalCurve restrict_to(const TropicalCurve& G, const Region& V) {
  require(G.region.contains_region(V), errc::precondition_violated,
          "restriction target not contained in the ambient region");
  TropicalCurve out(G.dim, V);
  out.metadata = G.metadata;
  std::map<int, int> vmap;
  for (std::size_t v = 0; v < G.vertices.size(); ++v) {
    if (V.strictly_contains(G.vertices[v])) {
      vmap[int(v)] = out.add_vertex(G.vertices[v]);
    } else if (V.on_boundary(G.vertices[v])) {
      fail(errc::vertex_on_boundary,
           "vertex " + std::to_string(v) + " lies on the restriction boundary");
    }
  }
  for (int v : G.unbalanced_ok)
    if (auto it = vmap.find(v); it != vmap.end()) out.unbalanced_ok.push_back(it->second);
  for (const auto& e : G.edges) {
    IntVec dir = edge_dirvec(e);
    // an edge inside a facet hyperplane of V cannot be clipped transversally
    for (const auto& h : V.halfspaces())
      if (dot(h.normal, dir) == 0 && dot(h.normal, e.tail) == h.offset)
        fail(errc::non_transversal,
             "edge " + std::to_string(e.id) + " lies in a facet hyperplane");
    auto full = clipped_extent(e, G.region);
    if (!full) continue;
    auto iv = V.clip_line(full->base, full->dir, Rat(0), full->len);
    if (!iv || iv->lo == iv->hi) continue;  // outside V, or touches in a point
    if (iv->lo == 0 && iv->hi == full->len) {
      out.edges.push_back(e);  // untouched: keep the original record
      continue;
    }
    out.edges.push_back(
        Edge::segment(e.id, full->at(iv->lo), full->at(iv->hi), e.weight));
  }
  return out;
}

}  // namespace tropgeo
