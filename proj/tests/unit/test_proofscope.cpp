#include <doctest.h>

#include <set>
#include <vector>

#include "dcdlab/config.hpp"
#include "dcdlab/constructions.hpp"
#include "dcdlab/ground_set.hpp"
#include "dcdlab/proofscope.hpp"
#include "dcdlab/rng.hpp"
#include "dcdlab/seeded.hpp"

using namespace dcdlab;

TEST_CASE("interval table on the smallest instance") {
  IntervalTable table = build_interval_table(make_set({0, 1, 3}), make_set({0}));
  REQUIRE(table.rows.size() == 2);
  CHECK(table.s == make_set({0, 1, 3}));
  // J_0(1) = (0,1] cap S = {1}; J_0(2) = (1,3] cap S = {3}.
  CHECK(table.rows[0].size == 1);
  CHECK(table.rows[0].run_start == 1);
  CHECK(table.rows[1].size == 1);
  CHECK(table.rows[1].run_start == 2);
  CHECK(table.rows[0].good);
  CHECK(table.rows[1].good);

  RunStats stats = count_distinct_good_runs(table);
  CHECK(stats.good_rows == 2);
  CHECK(stats.distinct == 2);
  CHECK(stats.collisions == 0);
}

TEST_CASE("interval table requires distinct gaps") {
  CHECK_THROWS_AS(build_interval_table(make_set({0, 1, 2}), make_set({0})), NotDcd);
  CHECK_THROWS_AS(build_interval_table(make_set({5}), make_set({0})), TooSmall);
  CHECK_THROWS_AS(build_interval_table(make_set({0, 1, 3}), make_set({0}), 0), UsageError);
}

TEST_CASE("every window contains its right endpoint") {
  Rng rng(31);
  for (int t = 0; t < 15; ++t) {
    GroundSet a = random_dcd_set(rng, rng.range(2, 30), 90);
    GroundSet b = random_set(rng, rng.range(1, 20), -200, 200);
    IntervalTable table = build_interval_table(a, b);
    for (const IntervalRow& row : table.rows) {
      CHECK(row.size >= 1);
      CHECK(table.s.contains(row.hi));  // a_{i+1} + b is a sum
    }
  }
}

TEST_CASE("property: audit passes on seeded instances, any goodness constant") {
  Rng rng(32);
  for (std::int64_t g : {2, 10, 100}) {
    for (int t = 0; t < 10; ++t) {
      GroundSet a = random_dcd_set(rng, rng.range(2, 40), 150);
      GroundSet b = random_set(rng, rng.range(1, 30), -500, 500);
      IntervalTable table = build_interval_table(a, b, g);
      TableAudit audit = audit_interval_table(table);
      CHECK(audit.ok());
      CHECK(audit.runs.distinct <= audit.runs.good_rows);
    }
  }
}

TEST_CASE("growth check on pinned cases") {
  DcdInstance inst = dcd_construction(3);
  Record rec = check_dcd_growth(inst.a, inst.b, kGrowthC2, "dcd");
  CHECK(rec.measured == 27);
  CHECK(rec.ratio == doctest::Approx(27.0 / (6.0 * std::sqrt(6.0))).epsilon(1e-12));
  CHECK(rec.pass);

  // |A+B| = 3 >= c * 2 * sqrt(2) passes even at c = 1.
  Record tiny = check_dcd_growth(make_set({0, 1}), make_set({0, 1}), Rational::of(1, 1));
  CHECK(tiny.measured == 3);
  CHECK(tiny.pass);

  // Singleton B: |A+B| = |A| = k, so any c <= 1 passes.
  Record single = check_dcd_growth(make_set({0, 2, 5}), make_set({7}), Rational::of(1, 1));
  CHECK(single.measured == 3);
  CHECK(single.pass);

  CHECK_THROWS_AS(check_dcd_growth(make_set({0, 1, 2}), make_set({0}), kGrowthC2), NotDcd);
}

TEST_CASE("box table on the smallest instance") {
  BoxTable table = build_box_table(make_set({0, 1}), make_set({0, 2}), make_set({0}),
                                   make_set({0}));
  REQUIRE(table.rows.size() == 1);
  CHECK(table.rows[0].size1 == 1);
  CHECK(table.rows[0].size2 == 1);
  CHECK(table.rows[0].good);
  CHECK(audit_box_table(table).ok());

  CHECK_THROWS_AS(build_box_table(make_set({0, 1, 2}), make_set({0, 1, 2}), make_set({0}),
                                  make_set({0})),
                  NotDistinctPairs);
  CHECK_THROWS_AS(build_box_table(make_set({0, 1}), make_set({0, 1, 2}), make_set({0}),
                                  make_set({0})),
                  SizeMismatch);
}

TEST_CASE("property: box audit on seeded square-image pairs") {
  Rng rng(33);
  for (int t = 0; t < 10; ++t) {
    std::int64_t k = rng.range(3, 12);
    GroundSet a = random_set(rng, k, 1, 300);
    GroundSet a2 = apply_poly(a, IntPoly::square());
    GroundSet b = random_set(rng, rng.range(1, 6), -50, 50);
    GroundSet b2 = random_set(rng, rng.range(1, 6), -50, 50);
    BoxTable table = build_box_table(a, a2, b, b2);
    CHECK(audit_box_table(table).ok());
  }
}

TEST_CASE("pair growth check on the worked example") {
  GroundSet a = make_set({1, 2, 3, 4});
  GroundSet a2 = make_set({1, 4, 9, 16});
  // Enumerate both sumsets directly.
  std::set<std::int64_t> s1, s2;
  for (auto x : a.elements())
    for (auto y : a.elements()) s1.insert(x + y);
  for (auto x : a2.elements())
    for (auto y : a.elements()) s2.insert(x + y);
  Record rec = check_pair_growth(a, a2, a, a, kPairGrowthC2, "worked");
  CHECK(rec.measured == static_cast<std::int64_t>(s1.size() * s2.size()));
  CHECK(rec.pass);

  // Singleton B, B2: product is k^2 >= c k^(3/2) at c = 1.
  Record single = check_pair_growth(a, a2, make_set({0}), make_set({0}), Rational::of(1, 1));
  CHECK(single.measured == 16);
  CHECK(single.pass);

  CHECK_THROWS_AS(check_pair_growth(make_set({0, 1, 2}), make_set({0, 1, 2}), a, a, kPairGrowthC2),
                  NotDistinctPairs);
}

TEST_CASE("integer polynomial plumbing") {
  IntPoly f = IntPoly::square();
  CHECK(f.eval(7) == 49);
  CHECK(f.degree() == 2);
  CHECK(f.derivative().coeffs == std::vector<std::int64_t>{0, 2});
  CHECK(convex_branch_start(f) == 1);

  IntPoly cubic{{5, -30, 0, 1}};  // x^3 - 30x + 5
  std::int64_t start = convex_branch_start(cubic);
  for (std::int64_t x = start; x < start + 40; ++x) {
    CHECK(cubic.eval(x + 1) > cubic.eval(x));                              // increasing
    CHECK(cubic.eval(x + 2) - cubic.eval(x + 1) > cubic.eval(x + 1) - cubic.eval(x));  // convex
  }
  CHECK_THROWS_AS(require_convex_poly(IntPoly{{0, 1}}), NotConvexFunction);
  CHECK_THROWS_AS(require_convex_poly(IntPoly{{0, 0, -1}}), NotConvexFunction);
}

TEST_CASE("convex image growth on the worked example") {
  GroundSet a = make_set({1, 2, 3});
  Record rec = check_convex_image_growth(a, a, a, IntPoly::square(), Rational::of(1, 1));
  // F(A) + C = {1,4,9} + {1,2,3} = {2,3,4,5,6,7,10,11,12}, size 9.
  CHECK(rec.quantities.at("sumset_fc") == 9);
  CHECK(rec.measured == 9);
  CHECK(rec.pass);  // 9 >= 3^(5/4)

  CHECK_THROWS_AS(
      check_convex_image_growth(a, a, make_set({1, 2}), IntPoly::square(), kConvexImageC2),
      SizeMismatch);
}

TEST_CASE("convex image growth shifts into the increasing branch") {
  GroundSet a = make_set({-5, -1, 2});
  Record rec = check_convex_image_growth(a, a, a, IntPoly::square(), kConvexImageC2);
  CHECK(rec.params.at("shift").get<std::int64_t>() == 6);
  CHECK(rec.pass);
}

TEST_CASE("property: increasing sets pair with their square image") {
  Rng rng(34);
  for (int t = 0; t < 25; ++t) {
    GroundSet a = random_set(rng, rng.range(2, 40), 1, 100000);
    CHECK(has_distinct_pairs(a, apply_poly(a, IntPoly::square())));
  }
}

TEST_CASE("convex triple bound, exact") {
  GroundSet sq5 = make_set({1, 4, 9, 16, 25});
  Record rec = check_convex_triple(sq5);
  // Oracle: enumerate A + A - A outright.
  std::set<std::int64_t> oracle;
  for (auto x : sq5.elements())
    for (auto y : sq5.elements())
      for (auto z : sq5.elements()) oracle.insert(x + y - z);
  CHECK(rec.measured == static_cast<std::int64_t>(oracle.size()));
  CHECK(rec.measured >= 10);  // k(k-1)/2
  CHECK(rec.pass);

  Record small = check_convex_triple(make_set({1, 4, 9}));
  CHECK(small.measured >= 3);
  CHECK(small.pass);

  Record pair = check_convex_triple(make_set({4, 9}));
  CHECK(pair.measured >= 1);
  CHECK(pair.pass);

  CHECK_THROWS_AS(check_convex_triple(make_set({1, 2, 3, 4})), NotConvex);
  CHECK_THROWS_AS(check_convex_triple(convex_family(ConvexKind::squares, 12), 5), ResourceLimit);
}

TEST_CASE("tightness checker") {
  Record rec = check_tightness(3);
  CHECK(rec.measured == 27);
  CHECK(rec.ratio == doctest::Approx(27.0 / std::pow(6.0, 1.5)).epsilon(1e-12));
  CHECK(rec.pass);
  for (std::int64_t m : {4, 5, 6, 7, 8}) CHECK(check_tightness(m).pass);
}
