#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "tropgeo/boundary.hpp"
#include "tropgeo/gallery.hpp"

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

}  // namespace

TEST_CASE("standard_simplex facet layout") {
  Region K = standard_simplex(2);
  REQUIRE(K.halfspaces().size() == 3);
  CHECK(K.halfspaces()[0].normal == IntVec{1, 1});
  CHECK(K.halfspaces()[0].offset == Rat(1));
  CHECK(K.halfspaces()[1].normal == IntVec{-1, 0});
  CHECK(K.halfspaces()[2].normal == IntVec{0, -1});
  CHECK(K.contains({Rat(1, 3), Rat(1, 3)}));
  CHECK_FALSE(K.contains({Rat(2, 3), Rat(2, 3)}));
  CHECK(throws_code(errc::bad_dimension, [] { standard_simplex(1); }));
}

TEST_CASE("dilated simplex strictly contains the standard simplex for n in {2,3}") {
  for (int n : {2, 3}) {
    for (Rat delta : {Rat(1, 4), Rat(1, 10), Rat(3)}) {
      Region K = standard_simplex(n);
      Region U = dilated_simplex(n, delta);
      CHECK(U.strictly_contains_region(K));
      // and the listed extreme points really generate U's facets
      RatVec low(n, -delta);
      CHECK(U.contains(low));
      CHECK_FALSE(U.strictly_contains(low));
    }
  }
  // n = 4: containment still holds (the sum-facet touches K's)
  CHECK(dilated_simplex(4, Rat(1, 5)).contains_region(standard_simplex(4)));
}

TEST_CASE("region vertex enumeration of the simplex") {
  Region K = standard_simplex(2);
  auto vs = K.vertices();
  std::set<RatVec> got(vs.begin(), vs.end());
  std::set<RatVec> want{{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  CHECK(got == want);
}

TEST_CASE("boundary_crossings of a tropical line around its apex") {
  TropicalCurve line = gen_tropical_line(2, {Rat(1, 3), Rat(1, 3)});
  Region W = box_region({Rat(1, 4), Rat(1, 4)}, {Rat(5, 12), Rat(5, 12)});
  auto hits = boundary_crossings(line, W);
  REQUIRE(hits.size() == 3);
  std::set<IntVec> outward;
  for (const auto& h : hits) outward.insert(h.outward);
  std::set<IntVec> want{{-1, 0}, {0, -1}, {1, 1}};
  CHECK(outward == want);

  Region far = box_region({Rat(1, 2), Rat(1, 16)}, {Rat(5, 8), Rat(1, 8)});
  CHECK(boundary_crossings(line, far).empty());

  Region through = box_region({Rat(1, 3), Rat(1, 4)}, {Rat(5, 12), Rat(5, 12)});
  CHECK(throws_code(errc::vertex_on_boundary, [&] { boundary_crossings(line, through); }));
}

TEST_CASE("global_balance vanishes for balanced curves") {
  TropicalCurve line = gen_tropical_line(2, {Rat(1, 3), Rat(1, 3)});
  Region W = box_region({Rat(1, 5), Rat(1, 5)}, {Rat(2, 5), Rat(2, 5)});
  CHECK(global_balance(line, W) == IntVec{0, 0});

  // random admissible boxes around the apex
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    Rat lox(1 + Int(rng() % 20), 97);
    Rat loy(1 + Int(rng() % 20), 101);
    Rat hix = Rat(1, 3) + Rat(1 + Int(rng() % 5), 97);
    Rat hiy = Rat(1, 3) + Rat(1 + Int(rng() % 5), 101);
    Region box = box_region({lox, loy}, {hix, hiy});
    CHECK(global_balance(line, box) == IntVec{0, 0});
  }

  Region away = box_region({Rat(1, 2), Rat(1, 16)}, {Rat(5, 8), Rat(1, 8)});
  CHECK(global_balance(line, away) == IntVec{0, 0});
}

TEST_CASE("global_balance reports the defect of an unbalanced star") {
  Region B = box_region({Rat(-1), Rat(-1)}, {Rat(1), Rat(1)});
  TropicalCurve G(2, B);
  RatVec o{Rat(0), Rat(0)};
  G.add_vertex(o);
  G.unbalanced_ok.push_back(0);
  G.edges.push_back(Edge::ray(0, o, 1, canonical_weight({1, 0})));
  G.edges.push_back(Edge::ray(1, o, -1, canonical_weight({1, 0})));
  G.edges.push_back(Edge::ray(2, o, 1, canonical_weight({0, 1})));
  Region W = box_region({Rat(-1, 3), Rat(-1, 3)}, {Rat(1, 3), Rat(1, 3)});
  CHECK(global_balance(G, W) == IntVec{0, 1});
  CHECK(global_balance(G, W) == check_balancing(G, 0));
}

TEST_CASE("monotone containment: nested admissible regions both balance") {
  TropicalCurve G = gen_random_balanced(2, 5, 2);
  Region W1 = box_region({Rat(1, 11), Rat(1, 11)}, {Rat(2, 5), Rat(2, 5)});
  Region W2 = box_region({Rat(1, 13), Rat(1, 13)}, {Rat(5, 12), Rat(5, 12)});
  CHECK(global_balance(G, W1) == IntVec{0, 0});
  CHECK(global_balance(G, W2) == IntVec{0, 0});
}

TEST_CASE("is_saturated: tropical line yes, oblique strand no, corner ray no") {
  TropicalCurve line = gen_tropical_line(2, {Rat(1, 3), Rat(1, 3)});
  CHECK(is_saturated(line).saturated);

  Region K = standard_simplex(2);
  TropicalCurve oblique(2, K);
  oblique.edges.push_back(Edge::segment(0, {Rat(0), Rat(1, 4)}, {Rat(1, 4), Rat(3, 4)},
                                        canonical_weight({1, 2})));
  auto rep = is_saturated(oblique);
  CHECK_FALSE(rep.saturated);
  bool saw_non_perp = false;
  for (const auto& en : rep.entries) saw_non_perp = saw_non_perp || !en.perpendicular;
  CHECK(saw_non_perp);

  TropicalCurve corner(2, K);
  RatVec c{Rat(1, 2), Rat(1, 4)};
  corner.add_vertex(c);
  corner.unbalanced_ok.push_back(0);
  // ray from c with direction (2,-1) exits exactly through the corner (1,0)
  corner.edges.push_back(Edge::ray(0, c, 1, canonical_weight({2, -1})));
  auto rep2 = is_saturated(corner);
  CHECK_FALSE(rep2.saturated);
  bool skeleton = false;
  for (const auto& en : rep2.entries) skeleton = skeleton || en.on_skeleton;
  CHECK(skeleton);
}

TEST_CASE("face_degrees of lines and superpositions") {
  TropicalCurve line = gen_tropical_line(2, {Rat(1, 3), Rat(1, 3)});
  CHECK(face_degrees(line) == std::vector<Int>{1, 1, 1});

  auto two = superpose({gen_tropical_line(2, {Rat(1, 5), Rat(1, 5)}),
                        gen_tropical_line(2, {Rat(2, 7), Rat(3, 7)})});
  CHECK(face_degrees(two) == std::vector<Int>{2, 2, 2});

  Region K = standard_simplex(2);
  TropicalCurve bad(2, K);
  bad.edges.push_back(Edge::segment(0, {Rat(0), Rat(1, 2)}, {Rat(1, 2), Rat(0)},
                                    canonical_weight({1, -1})));
  CHECK(throws_code(errc::not_saturated, [&] { face_degrees(bad); }));
}

TEST_CASE("saturated_area_check equals the degree") {
  auto line = gen_tropical_line(2, {Rat(1, 3), Rat(1, 3)});
  auto r = saturated_area_check(line);
  CHECK(r.area == Rat(1));
  CHECK(r.degree == 1);
  CHECK(r.equal);

  auto two = superpose({gen_tropical_line(2, {Rat(1, 5), Rat(1, 5)}),
                        gen_tropical_line(2, {Rat(2, 7), Rat(3, 7)})});
  auto r2 = saturated_area_check(two);
  CHECK(r2.area == Rat(2));
  CHECK(r2.degree == 2);
  CHECK(r2.equal);

  auto line3 = gen_tropical_line(3, {Rat(1, 4), Rat(1, 4), Rat(1, 4)});
  auto r3 = saturated_area_check(line3);
  CHECK(r3.area == Rat(1));
  CHECK(r3.degree == 1);
  CHECK(r3.equal);
}

TEST_CASE("measure_density on the tropical line") {
  TropicalCurve line = gen_tropical_line(2, {Rat(1, 3), Rat(1, 3)});
  CHECK(measure_density(line, 0, Rat(1, 6)) == 1);
  // between the apex coordinate 1/3 and the diagonal exit coordinate 1/2
  CHECK(measure_density(line, 0, Rat(5, 12)) == 1);
  CHECK(measure_density(line, 0, Rat(5, 6)) == 0);
  CHECK(throws_code(errc::degenerate_slice, [&] { measure_density(line, 0, Rat(1, 3)); }));
  // 1/2 is exactly the diagonal's boundary-crossing coordinate
  CHECK(throws_code(errc::degenerate_slice, [&] { measure_density(line, 0, Rat(1, 2)); }));
}

TEST_CASE("measure_density matches the crossing-sum prediction and is non-increasing") {
  for (std::uint64_t seed : {1, 4, 9}) {
    TropicalCurve G = gen_random_balanced(2, seed, 3);
    for (int i = 0; i < 2; ++i) {
      // critical coordinates: vertex coords and boundary-crossing coords
      std::set<Rat> crit{Rat(0), Rat(1)};
      for (const auto& v : G.vertices) crit.insert(v[i]);
      for (const auto& h : closure_boundary_hits(G)) crit.insert(h.point[i]);
      std::vector<Rat> sorted(crit.begin(), crit.end());
      Int prev = -1;
      for (std::size_t k = 0; k + 1 < sorted.size(); ++k) {
        Rat mid = (sorted[k] + sorted[k + 1]) / 2;
        Int density = measure_density(G, i, mid);
        CHECK(density == density_prediction(G, i, mid));
        if (prev >= 0) CHECK(density <= prev);
        prev = density;
      }
    }
  }
}
