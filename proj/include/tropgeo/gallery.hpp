#pragma once

#include <random>
#include <string>
#include <vector>

#include "tropgeo/curve.hpp"

namespace tropgeo {

/// The degree-1 saturated model curve: one vertex with rays -e_1,...,-e_n
/// and (1,...,1) in the standard simplex.
inline TropicalCurve gen_tropical_line(int n, const RatVec& apex, const Int& multiplicity = 1) {
  Region K = standard_simplex(n);
  require(apex.size() == std::size_t(n), errc::bad_dimension, "apex dimension mismatch");
  require(K.strictly_contains(apex), errc::apex_outside, "apex must lie in the open simplex");
  TropicalCurve G(n, K);
  int v = G.add_vertex(apex);
  (void)v;
  int id = 0;
  for (int j = 0; j < n; ++j) {
    Weight w = canonical_weight(unit_vec(n, j, 1));
    w.multiplicity = multiplicity;
    G.edges.push_back(Edge::ray(id++, apex, -1, w));
  }
  Weight diag = canonical_weight(ones_vec(n));
  diag.multiplicity = multiplicity;
  G.edges.push_back(Edge::ray(id++, apex, 1, diag));
  return G;
}

/// Disjoint union of curves sharing one ambient region; edge ids are
/// re-issued, vertex ids concatenated.
inline TropicalCurve superpose(const std::vector<TropicalCurve>& parts) {
  require(!parts.empty(), errc::precondition_violated, "nothing to superpose");
  TropicalCurve out(parts.front().dim, parts.front().region);
  int id = 0;
  for (const auto& part : parts) {
    require(part.region == out.region, errc::precondition_violated,
            "superposed curves must share a region");
    int voffset = int(out.vertices.size());
    for (const auto& v : part.vertices) out.add_vertex(v);
    for (int u : part.unbalanced_ok) out.unbalanced_ok.push_back(u + voffset);
    for (Edge e : part.edges) {
      e.id = id++;
      out.edges.push_back(std::move(e));
    }
  }
  return out;
}

/// The quadratically accumulating example curve in the open unit square,
/// truncated to its first `levels` levels. Level k contributes the diagonal
/// segment [(4^-k,4^-k),(4^-(k-1),4^-(k-1))] with multiplicity 2^(k-1) and
/// four rays with multiplicities 2^(k-1), 2^(k-1), 2^k, 2^k. The deepest
/// vertex of the truncation is deliberately unbalanced and flagged.
inline TropicalCurve gen_example7(int levels) {
  require(levels >= 1, errc::precondition_violated, "need at least one level");
  const int n = 2;
  Region C = box_region({Rat(0), Rat(0)}, {Rat(1), Rat(1)});
  TropicalCurve G(n, C);
  G.metadata["generator"] = "example7";
  G.metadata["levels"] = std::to_string(levels);
  int id = 0;
  Int pow2 = 1;   // 2^(k-1)
  Rat pow4(1, 4); // 4^-k
  for (int k = 1; k <= levels; ++k) {
    RatVec apex{pow4, pow4};
    RatVec prev{pow4 * 4, pow4 * 4};
    int v = G.add_vertex(apex);
    if (k == levels) G.unbalanced_ok.push_back(v);

    Weight diag = canonical_weight(ones_vec(n));
    diag.multiplicity = pow2;
    G.edges.push_back(Edge::segment(id++, apex, prev, diag));

    Weight left = canonical_weight(unit_vec(n, 0, 1));
    left.multiplicity = pow2;
    G.edges.push_back(Edge::ray(id++, apex, -1, left));

    Weight down = canonical_weight(unit_vec(n, 1, 1));
    down.multiplicity = pow2;
    G.edges.push_back(Edge::ray(id++, apex, -1, down));

    Weight up_left = canonical_weight(IntVec{-1, 2});
    up_left.multiplicity = pow2 * 2;
    G.edges.push_back(Edge::ray(id++, apex, up_left.direction == IntVec{-1, 2} ? 1 : -1, up_left));

    Weight down_right = canonical_weight(IntVec{2, -1});
    down_right.multiplicity = pow2 * 2;
    G.edges.push_back(
        Edge::ray(id++, apex, down_right.direction == IntVec{2, -1} ? 1 : -1, down_right));

    pow2 *= 2;
    pow4 /= 4;
  }
  return G;
}

/// Seed-deterministic saturated instances: superposed translated tropical
/// lines with random apexes and multiplicities in {1, 2}. Apexes are
/// resampled until no coordinate collides and no two differ by a multiple
/// of (1,...,1), which keeps all boundary crossings distinct.
inline TropicalCurve gen_random_balanced(int n, std::uint64_t seed, int complexity) {
  require(complexity >= 1, errc::precondition_violated, "complexity must be >= 1");
  std::mt19937_64 rng(seed);
  const int denominators[] = {97, 101, 103, 107, 109, 113, 127, 131, 137, 139};
  std::vector<RatVec> apexes;
  std::vector<TropicalCurve> parts;
  auto admissible = [&](const RatVec& p) {
    for (const auto& q : apexes) {
      for (int j = 0; j < n; ++j)
        if (p[j] == q[j]) return false;
      RatVec diff = sub(p, q);
      bool diagonal = true;
      for (int j = 1; j < n; ++j)
        if (diff[j] != diff[0]) diagonal = false;
      if (diagonal) return false;
    }
    return true;
  };
  for (int k = 0; k < complexity; ++k) {
    Int mult = 1 + Int(rng() % 2);
    RatVec apex;
    for (int tries = 0;; ++tries) {
      require(tries < 1000, errc::precondition_violated, "apex sampling failed");
      int q = denominators[rng() % 10];
      apex.assign(n, Rat(0));
      Int total = 0;
      bool ok = true;
      for (int j = 0; j < n; ++j) {
        Int p = 1 + Int(rng() % (q - 1));
        apex[j] = Rat(p, q);
        total += p;
      }
      ok = total < q;
      if (ok && admissible(apex)) break;
    }
    apexes.push_back(apex);
    parts.push_back(gen_tropical_line(n, apex, mult));
  }
  TropicalCurve G = superpose(parts);
  G.metadata["generator"] = "random";
  G.metadata["seed"] = std::to_string(seed);
  G.metadata["complexity"] = std::to_string(complexity);
  return G;
}

}  // namespace tropgeo
