#include <catch_amalgamated.hpp>

#include <random>

#include "tropgeo/gallery.hpp"
#include "tropgeo/saturation.hpp"

using namespace tropgeo;

namespace {

bool throws_code(errc expected, const std::function<void()>& f) {
  try {
    f();
  } catch (const trop_error& e) {
    return e.code() == expected;
  }
  return false;
}

// full chord of `U` through `anchor` in direction `dirv` (a single balanced
// strand with both endpoints on the region boundary)
Edge chord(const Region& U, int id, const RatVec& anchor, const IntVec& dirv) {
  Weight w = canonical_weight(dirv);
  auto iv = U.clip_line(anchor, w.vec(), Rat(-1000000), Rat(1000000));
  REQUIRE(iv.has_value());
  return Edge::segment(id, axpy(anchor, iv->lo, w.vec()), axpy(anchor, iv->hi, w.vec()), w);
}

// brute-force count of valid decompositions with a_0 in [0, cap]
int count_decompositions(const IntVec& w, int cap) {
  int n = int(w.size());
  int found = 0;
  for (int a0 = 0; a0 <= cap; ++a0) {
    IntVec a(n + 1);
    a[0] = a0;
    bool ok = true;
    Int mn = a0;
    for (int j = 1; j <= n; ++j) {
      a[j] = Int(a0) - w[j - 1];
      if (a[j] < 0) ok = false;
      mn = std::min(mn, a[j]);
    }
    if (ok && mn == 0) ++found;
  }
  return found;
}

}  // namespace

TEST_CASE("decompose hand values") {
  auto d1 = decompose({2, -1});
  CHECK(d1.a == IntVec{2, 0, 3});
  CHECK(d1.reconstruct(2) == IntVec{2, -1});

  auto d2 = decompose({1, 1, 1});
  CHECK(d2.a == IntVec{1, 0, 0, 0});

  auto d3 = decompose({-1, -2});
  CHECK(d3.a == IntVec{0, 1, 2});
  CHECK(d3.reconstruct(2) == IntVec{-1, -2});

  auto z = decompose({0, 0});
  CHECK(z.a == IntVec{0, 0, 0});
}

TEST_CASE("decompose properties and brute-force uniqueness on small vectors") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 + int(rng() % 3);
    IntVec w(n);
    for (auto& c : w) c = Int(rng() % 101) - 50;
    auto d = decompose(w);
    REQUIRE(d.a.size() == std::size_t(n + 1));
    Int mn = d.a[0];
    for (const auto& ai : d.a) {
      CHECK(ai >= 0);
      mn = std::min(mn, ai);
    }
    CHECK(mn == 0);
    CHECK(d.reconstruct(n) == w);
  }
  // exhaustive uniqueness oracle, n = 2, entries in [-5, 5]
  for (int x = -5; x <= 5; ++x)
    for (int y = -5; y <= 5; ++y) {
      IntVec w{x, y};
      CHECK(count_decompositions(w, 15) == 1);
      auto d = decompose(w);
      CHECK(d.reconstruct(2) == w);
    }
}

TEST_CASE("choose_collar keeps vertices strictly inside") {
  TropicalCurve line = gen_tropical_line(2, {Rat(1, 3), Rat(1, 3)});
  auto offsets = choose_collar(line);
  REQUIRE(offsets.size() == 3);
  for (const auto& off : offsets) {
    CHECK(off > 0);
    CHECK(off <= Rat(1, 6));
  }
  Region collar = standard_simplex(2).shrink(offsets);
  CHECK(collar.strictly_contains({Rat(1, 3), Rat(1, 3)}));
}

TEST_CASE("choose_collar works without vertices and rejects facet-parallel strands") {
  Region K = standard_simplex(2);
  TropicalCurve G(2, K);
  G.edges.push_back(Edge::segment(0, {Rat(1, 8), Rat(1, 8)}, {Rat(3, 8), Rat(3, 8)},
                                  canonical_weight({1, 1})));
  auto offsets = choose_collar(G);
  for (const auto& off : offsets) CHECK(off > 0);

  TropicalCurve bad(2, K);
  bad.edges.push_back(Edge::segment(0, {Rat(0), Rat(1, 4)}, {Rat(0), Rat(3, 4)},
                                    canonical_weight({0, 1})));
  CHECK(throws_code(errc::degenerate_curve, [&] { choose_collar(bad); }));
}

TEST_CASE("saturate rebalances an oblique chord") {
  Rat delta(1, 4);
  Region U = dilated_simplex(2, delta);
  TropicalCurve G(2, U);
  G.edges.push_back(chord(U, 0, {Rat(1, 4), Rat(1, 4)}, {1, 2}));
  auto [Gp, log] = saturate(G, delta);
  CHECK(is_saturated(Gp).saturated);
  CHECK(log.truncations.size() == 2);
  CHECK(validate(Gp, ValidationLevel::lenient).pass());
  auto sac = saturated_area_check(Gp);
  CHECK(sac.equal);
  CHECK(sac.area == Rat(sac.degree));

  // local balance at each truncation point: -outward + sum a_i e'_i = 0
  for (const auto& tr : log.truncations) {
    auto v = Gp.vertex_at(tr.point);
    REQUIRE(v.has_value());
    CHECK(check_balancing(Gp, *v) == IntVec{0, 0});
    for (const auto& ray : tr.rays) CHECK(ray.multiplicity > 0);
  }
}

TEST_CASE("saturate leaves a saturated curve untouched") {
  TropicalCurve line = gen_tropical_line(2, {Rat(1, 3), Rat(1, 3)});
  auto [Gp, log] = saturate(line, Rat(1, 4));
  CHECK(log.truncations.empty());
  CHECK(log.dropped_edges.empty());
  CHECK(Gp.vertices == line.vertices);
  REQUIRE(Gp.edges.size() == line.edges.size());
  for (std::size_t k = 0; k < line.edges.size(); ++k) {
    CHECK(Gp.edges[k].weight.direction == line.edges[k].weight.direction);
    CHECK(Gp.edges[k].weight.multiplicity == line.edges[k].weight.multiplicity);
  }
  CHECK(curve_area(Gp) == curve_area(line));
}

TEST_CASE("saturate removes a corner-exiting strand from the skeleton") {
  Rat delta(1, 4);
  Region U = dilated_simplex(2, delta);
  TropicalCurve G(2, U);
  // chord through the corner (0,0) of K
  G.edges.push_back(chord(U, 0, {Rat(0), Rat(0)}, {2, 1}));
  auto rep_before = is_saturated(restrict_to(G, standard_simplex(2)));
  CHECK_FALSE(rep_before.saturated);
  auto [Gp, log] = saturate(G, delta);
  auto rep = is_saturated(Gp);
  CHECK(rep.saturated);
  for (const auto& en : rep.entries) CHECK_FALSE(en.on_skeleton);
  CHECK(saturated_area_check(Gp).equal);
}

TEST_CASE("saturate monotonicity and area inflation on random chords") {
  std::mt19937_64 rng(23);
  Region K2 = standard_simplex(2);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + int(rng() % 2);
    Rat delta(1, 4 + int(rng() % 4));
    Region U = dilated_simplex(n, delta);
    Region K = standard_simplex(n);
    TropicalCurve G(n, U);
    int chords = 1 + int(rng() % 2);
    for (int c = 0; c < chords; ++c) {
      RatVec anchor(n);
      for (auto& x : anchor) x = Rat(1 + Int(rng() % 23), 97 + 2 * int(rng() % 3));
      IntVec d(n);
      bool zero = true;
      for (auto& x : d) {
        x = Int(rng() % 7) - 3;
        if (x != 0) zero = false;
      }
      if (zero) d[0] = 1;
      G.edges.push_back(chord(U, c, anchor, d));
    }
    TropicalCurve G_K = restrict_to(G, K);
    Rat A = curve_area(G);
    auto [Gp, log] = saturate(G, delta);
    CHECK(is_saturated(Gp).saturated);
    CHECK(Gp.vertices.size() >= G_K.vertices.size());
    Rat inflation = Rat(n) * (A / delta) * (A / delta);
    CHECK(curve_area(Gp) <= curve_area(G_K) + inflation);
  }
  (void)K2;
}
