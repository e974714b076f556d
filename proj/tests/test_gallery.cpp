#include <catch_amalgamated.hpp>

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

TEST_CASE("gen_tropical_line produces a strict, saturated, degree-1 curve") {
  for (int n : {2, 3}) {
    RatVec apex(n, Rat(1, n + 2));
    TropicalCurve G = gen_tropical_line(n, apex);
    CHECK(validate(G, ValidationLevel::strict).pass());
    auto sac = saturated_area_check(G);
    CHECK(sac.degree == 1);
    CHECK(sac.area == Rat(1));
    CHECK(sac.equal);
  }
  CHECK(throws_code(errc::apex_outside,
                    [] { gen_tropical_line(2, {Rat(1), Rat(1)}); }));
}

TEST_CASE("gen_example7 level-1 area and balancing structure") {
  TropicalCurve G = gen_example7(1);
  REQUIRE(G.vertices.size() == 1);
  CHECK(G.vertices[0] == RatVec{Rat(1, 4), Rat(1, 4)});
  CHECK(curve_area(G) == Rat(7));  // 14 * (1 - 1/2)
  CHECK(G.unbalanced_ok == std::vector<int>{0});
  CHECK(validate(G, ValidationLevel::lenient).pass());  // exempt vertex skipped
}

TEST_CASE("gen_example7 area formula holds for deep truncations") {
  for (int N : {2, 4, 8, 16, 32}) {
    TropicalCurve G = gen_example7(N);
    Rat expected = Rat(14) * (Rat(1) - Rat(Int(1), Int(1) << N));
    CHECK(curve_area(G) == expected);
    // all vertices above the truncation level are balanced
    for (int v = 0; v + 1 < int(G.vertices.size()); ++v)
      CHECK(check_balancing(G, v) == IntVec{0, 0});
    CHECK(check_balancing(G, N - 1) != IntVec{0, 0});
    CHECK(G.balancing_exempt(N - 1));
  }
}

TEST_CASE("gen_example7 vertex count in a compact box") {
  // the box [4^-M, 1]^2 contains exactly the vertices of levels 1..M
  int N = 6;
  TropicalCurve G = gen_example7(N);
  for (int M : {1, 2, 4}) {
    Rat lo(Int(1), Int(1) << (2 * M));
    int inside = 0;
    for (const auto& v : G.vertices)
      if (v[0] >= lo && v[1] >= lo) ++inside;
    CHECK(inside == M);
  }
}

TEST_CASE("gen_random_balanced is deterministic and saturated") {
  TropicalCurve a = gen_random_balanced(2, 42, 3);
  TropicalCurve b = gen_random_balanced(2, 42, 3);
  CHECK(a.vertices == b.vertices);
  REQUIRE(a.edges.size() == b.edges.size());
  for (std::size_t k = 0; k < a.edges.size(); ++k) {
    CHECK(a.edges[k].tail == b.edges[k].tail);
    CHECK(a.edges[k].weight.direction == b.edges[k].weight.direction);
    CHECK(a.edges[k].weight.multiplicity == b.edges[k].weight.multiplicity);
  }

  for (int n : {2, 3, 4}) {
    for (std::uint64_t seed : {10, 20}) {
      TropicalCurve G = gen_random_balanced(n, seed, 3);
      CHECK(validate(G, ValidationLevel::lenient).pass());
      auto sac = saturated_area_check(G);
      CHECK(sac.equal);
      // degree = sum of the component multiplicities
      Int d = 0;
      std::set<RatVec> apexes;
      for (const auto& v : G.vertices) apexes.insert(v);
      CHECK(apexes.size() == G.vertices.size());
      for (const auto& e : G.edges)
        if (e.weight.direction == ones_vec(n)) d += e.weight.multiplicity;
      CHECK(sac.degree == d);
    }
  }
}

TEST_CASE("gen_random_balanced with complexity 1 is a translated line") {
  TropicalCurve G = gen_random_balanced(2, 9, 1);
  REQUIRE(G.vertices.size() == 1);
  TropicalCurve L = gen_tropical_line(2, G.vertices[0], G.edges[0].weight.multiplicity);
  REQUIRE(G.edges.size() == L.edges.size());
  for (std::size_t k = 0; k < G.edges.size(); ++k) {
    CHECK(G.edges[k].weight.direction == L.edges[k].weight.direction);
    CHECK(G.edges[k].weight.multiplicity == L.edges[k].weight.multiplicity);
    CHECK(G.edges[k].ray_sign == L.edges[k].ray_sign);
  }
}

TEST_CASE("superpose concatenates parts and re-issues edge ids") {
  auto parts = std::vector<TropicalCurve>{gen_tropical_line(2, {Rat(1, 5), Rat(1, 5)}),
                                          gen_tropical_line(2, {Rat(2, 7), Rat(3, 7)})};
  TropicalCurve G = superpose(parts);
  CHECK(G.vertices.size() == 2);
  REQUIRE(G.edges.size() == 6);
  std::set<int> ids;
  for (const auto& e : G.edges) ids.insert(e.id);
  CHECK(ids.size() == 6);
  CHECK(curve_area(G) == Rat(2));
}
