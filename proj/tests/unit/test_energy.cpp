#include <doctest.h>

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "dcdlab/constructions.hpp"
#include "dcdlab/energy.hpp"
#include "dcdlab/ground_set.hpp"
#include "dcdlab/rng.hpp"
#include "dcdlab/seeded.hpp"

using namespace dcdlab;

namespace {

// Oracle: representation counts through a std::map.
std::map<std::int64_t, std::int64_t> brute_rep(const GroundSet& a, const GroundSet& b) {
  std::map<std::int64_t, std::int64_t> out;
  for (auto x : a.elements())
    for (auto y : b.elements()) ++out[x - y];
  return out;
}

// Oracle: corner count by raw triple enumeration into a set of points.
std::int64_t brute_corner(const GroundSet& a, const PopularityGraph& g) {
  std::set<std::pair<std::int64_t, std::int64_t>> points;
  for (auto c : a.elements())
    for (auto [i, j] : g.edges) points.emplace(c - a[i], c - a[j]);
  return static_cast<std::int64_t>(points.size());
}

}  // namespace

TEST_CASE("representation function counts") {
  GroundSet a = make_set({0, 1, 2});
  RepFn rep = RepFn::of(a, a);
  CHECK(rep.at(0) == 3);
  CHECK(rep.at(1) == 2);
  CHECK(rep.at(-1) == 2);
  CHECK(rep.at(2) == 1);
  CHECK(rep.at(-2) == 1);
  CHECK(rep.at(5) == 0);
  CHECK(rep.total() == 9);

  RepFn rep2 = RepFn::of(make_set({0, 1}), make_set({5}));
  CHECK(rep2.at(-5) == 1);
  CHECK(rep2.at(-4) == 1);
  CHECK(rep2.total() == 2);
}

TEST_CASE("rep function support equals the difference set") {
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    GroundSet a = random_set(rng, rng.range(1, 15), -200, 200);
    GroundSet b = random_set(rng, rng.range(1, 15), -200, 200);
    RepFn rep = RepFn::of(a, b);
    GroundSet d = difference_set(a, b);
    CHECK(static_cast<std::int64_t>(rep.counts().size()) == d.size());
    for (auto x : d.elements()) CHECK(rep.at(x) >= 1);
    CHECK(brute_rep(a, b) == std::map<std::int64_t, std::int64_t>(rep.counts().begin(),
                                                                  rep.counts().end()));
  }
}

TEST_CASE("energies of the worked three-element set") {
  GroundSet a = make_set({0, 1, 2});
  CHECK(energy(a, a, 3) == 45);  // 3^3 + 2*2^3 + 2*1^3
  CHECK(energy(a, a, 2) == 19);  // 9 + 4 + 4 + 1 + 1
  CHECK(energy(a, a, 1) == 9);
  CHECK_THROWS_AS(energy(a, a, 5), UsageError);
  CHECK_THROWS_AS(energy(a, a, 0), UsageError);
}

TEST_CASE("first energy is always |A||B|") {
  Rng rng(12);
  for (int t = 0; t < 20; ++t) {
    GroundSet a = random_set(rng, rng.range(1, 20), -300, 300);
    GroundSet b = random_set(rng, rng.range(1, 20), -300, 300);
    CHECK(energy(a, b, 1) == a.size() * b.size());
  }
}

TEST_CASE("energy pair identity on pinned cases") {
  auto [l1, r1] = energy_pair_identity(make_set({0, 1, 2}));
  CHECK(l1 == 45);
  CHECK(r1 == 45);
  auto [l2, r2] = energy_pair_identity(make_set({77}));
  CHECK(l2 == 1);
  CHECK(r2 == 1);
  auto [l3, r3] = energy_pair_identity(make_set({0, 1}));
  CHECK(l3 == 10);  // 2^3 + 1 + 1
  CHECK(r3 == 10);
}

TEST_CASE("property: energy pair identity holds up to k = 64") {
  Rng rng(13);
  for (int t = 0; t < 40; ++t) {
    GroundSet a = random_set(rng, rng.range(1, 64), -100000, 100000);
    auto [lhs, rhs] = energy_pair_identity(a);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("property: energy is affine invariant") {
  Rng rng(14);
  for (int t = 0; t < 25; ++t) {
    GroundSet a = random_set(rng, rng.range(2, 20), -200, 200);
    std::int64_t lambda = rng.range(1, 6) * (rng.below(2) ? 1 : -1);
    std::int64_t mu = rng.range(-100, 100);
    GroundSet image = dilate_translate(a, lambda, mu);
    for (int order : {1, 2, 3, 4}) CHECK(energy(a, a, order) == energy(image, image, order));
  }
}

TEST_CASE("property: energy bounds") {
  Rng rng(15);
  for (int t = 0; t < 25; ++t) {
    GroundSet a = random_set(rng, rng.range(2, 24), -500, 500);
    std::int64_t k = a.size();
    CHECK(energy(a, a, 2) >= k * k);
    CHECK(energy(a, a, 3) >= k * k * k);
    for (int order : {2, 3, 4}) {
      std::int64_t cap = 1;
      for (int i = 0; i <= order; ++i) cap *= k;
      CHECK(energy(a, a, order) <= cap);
    }
  }
}

TEST_CASE("dyadic band selection on the worked example") {
  // r_{A-A} = {0:4, +-1:2, +-2:2, +-3:1, +-4:1}; band scores are
  // delta=1 -> 8, delta=2 -> 10, delta=4 -> 4.
  DyadicBand band = dyadic_popular_set(make_set({0, 1, 2, 4}));
  CHECK(band.delta == 2);
  CHECK(band.popular == make_set({-2, -1, 0, 1, 2}));
}

TEST_CASE("dyadic bands are closed, so the pair set keeps zero") {
  // With closed bands [delta, 2 delta], r(0) = 2 sits inside the delta=1
  // band: P = {-1, 0, 1} with score 3 beats delta=2 with score 2.
  DyadicBand band = dyadic_popular_set(make_set({0, 1}));
  CHECK(band.delta == 1);
  CHECK(band.popular == make_set({-1, 0, 1}));
  CHECK_THROWS_AS(dyadic_popular_set(make_set({9})), TooSmall);
}

TEST_CASE("property: zero is popular when the band allows it") {
  Rng rng(16);
  for (int t = 0; t < 20; ++t) {
    GroundSet a = random_set(rng, rng.range(2, 30), -400, 400);
    DyadicBand band = dyadic_popular_set(a);
    if (band.delta <= a.size() && a.size() <= 2 * band.delta) CHECK(band.popular.contains(0));
  }
}

TEST_CASE("property: dyadic mass guarantee") {
  Rng rng(17);
  for (int t = 0; t < 25; ++t) {
    GroundSet a = random_set(rng, rng.range(2, 48), -2000, 2000);
    DyadicBand band = dyadic_popular_set(a);
    std::int64_t k = a.size();
    std::int64_t lg = 0;
    while ((std::int64_t{1} << (lg + 1)) <= k) ++lg;
    CHECK(band.delta * band.popular.size() * 2 * (lg + 1) >= k * k);
  }
}

TEST_CASE("popularity graph edges") {
  GroundSet a = make_set({0, 1, 2, 4});
  PopularityGraph g = popularity_graph(a, 2, make_set({-2, -1, 0, 1, 2}));
  CHECK(g.edges.size() == 12);  // 4 + 2 + 2 + 2 + 2

  GroundSet two = make_set({0, 1});
  PopularityGraph g2 = popularity_graph(two, 1, make_set({-1, 1}));
  std::vector<std::pair<std::int32_t, std::int32_t>> expect{{0, 1}, {1, 0}};
  CHECK(g2.edges == expect);
}

TEST_CASE("property: graph size equals band mass, diagonal included with zero") {
  Rng rng(18);
  for (int t = 0; t < 20; ++t) {
    GroundSet a = random_set(rng, rng.range(2, 30), -300, 300);
    DyadicBand band = dyadic_popular_set(a);
    PopularityGraph g = popularity_graph(a, band.delta, band.popular);
    RepFn rep = RepFn::of(a, a);
    std::int64_t mass = 0;
    for (auto x : band.popular.elements()) mass += rep.at(x);
    CHECK(static_cast<std::int64_t>(g.edges.size()) == mass);
    if (band.popular.contains(0)) {
      std::int64_t diag = 0;
      for (auto [i, j] : g.edges)
        if (i == j) ++diag;
      CHECK(diag == a.size());
    }
  }
}

TEST_CASE("corner count on pinned cases") {
  GroundSet two = make_set({0, 1});
  PopularityGraph g = popularity_graph(two, 1, make_set({-1, 1}));
  CHECK(corner_set_size(two, g) == 4);  // {(0,-1),(-1,0),(1,0),(0,1)}

  // Diagonal-only graph collapses to the one-dimensional difference set.
  GroundSet a = make_set({0, 3, 7, 20});
  PopularityGraph diag = popularity_graph(a, a.size(), make_set({0}));
  CHECK(corner_set_size(a, diag) == difference_set(a, a).size());
}

TEST_CASE("property: corner count matches brute enumeration") {
  Rng rng(19);
  for (int t = 0; t < 20; ++t) {
    GroundSet a = random_set(rng, rng.range(2, 16), -120, 120);
    DyadicBand band = dyadic_popular_set(a);
    PopularityGraph g = popularity_graph(a, band.delta, band.popular);
    std::int64_t fast = corner_set_size(a, g);
    CHECK(fast == brute_corner(a, g));
    CHECK(fast <= a.size() * static_cast<std::int64_t>(g.edges.size()));
  }
}

TEST_CASE("corner count honors the resource budget") {
  GroundSet a = make_set({0, 1, 2, 3, 4, 5, 6, 8});
  DyadicBand band = dyadic_popular_set(a);
  PopularityGraph g = popularity_graph(a, band.delta, band.popular);
  CHECK_THROWS_AS(corner_set_size(a, g, 10), ResourceLimit);
}

TEST_CASE("difference richness") {
  CHECK(difference_richness(convex_family(ConvexKind::squares, 8)) == Rational::of(7, 8));
  CHECK(difference_richness(interval_set(10)) == Rational::of(1, 10));
  CHECK(difference_richness(make_set({20, 21, 40, 42})) == Rational::of(3, 4));
  CHECK_THROWS_AS(difference_richness(make_set({1})), TooSmall);
}

TEST_CASE("pipeline report carries the chain quantities") {
  GroundSet a = convex_family(ConvexKind::squares, 32);
  Record rec = energy_pipeline_report(a, "squares");
  CHECK(rec.quantities.at("e3") >= 32 * 32 * 32);
  CHECK(rec.quantities.at("abs_a") == 32);
  CHECK(rec.quantities.at("abs_g") > 0);
  CHECK(rec.quantities.at("corner") > 0);
  CHECK(rec.ratios.count("cauchy_schwarz") == 1);
  CHECK(rec.pass);

  Record small = energy_pipeline_report(make_set({0, 1}), "pair");
  CHECK(small.quantities.at("abs_d") == 3);  // K = 3/2 against |A| = 2
  CHECK(small.quantities.at("e3") == 10);
}

TEST_CASE("property: Cauchy-Schwarz across the mixed energies, exactly") {
  Rng rng(20);
  for (int t = 0; t < 20; ++t) {
    GroundSet a = random_set(rng, rng.range(2, 28), -400, 400);
    GroundSet d = difference_set(a, a);
    RepFn rep = RepFn::of(a, d);
    std::int64_t e2 = energy_of(rep, 2);
    std::int64_t e3 = energy_of(rep, 3);
    CHECK(int128{e2} * e2 <= int128{e3} * a.size() * d.size());
  }
}
