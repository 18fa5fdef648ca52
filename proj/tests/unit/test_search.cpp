#include <doctest.h>

#include <set>
#include <vector>

#include "dcdlab/ground_set.hpp"
#include "dcdlab/search.hpp"

using namespace dcdlab;

namespace {

// Oracle: |A+A| for the gap vector, via std::set.
std::int64_t brute_objective(const std::vector<std::int64_t>& gaps) {
  std::vector<std::int64_t> a{0};
  for (auto g : gaps) a.push_back(a.back() + g);
  std::set<std::int64_t> sums;
  for (auto x : a)
    for (auto y : a) sums.insert(x + y);
  return static_cast<std::int64_t>(sums.size());
}

}  // namespace

TEST_CASE("exhaustive search, forced and tiny spaces") {
  SearchWitness w = exhaustive_min(2, 1);
  CHECK(w.gaps == std::vector<std::int64_t>{1});
  CHECK(w.objective == 3);

  // k=3, max_gap=2: states (1,2) and (2,1); both give |A+A| = 6.
  CHECK(brute_objective({1, 2}) == 6);
  CHECK(brute_objective({2, 1}) == 6);
  SearchWitness w32 = exhaustive_min(3, 2);
  CHECK(w32.objective == 6);
  CHECK(w32.gaps == std::vector<std::int64_t>{1, 2});  // lexicographic tie-break
}

TEST_CASE("exhaustive search errors") {
  CHECK_THROWS_AS(exhaustive_min(5, 3), Infeasible);
  CHECK_THROWS_AS(exhaustive_min(1, 4), Infeasible);
  CHECK_THROWS_AS(exhaustive_min(10, 12, 100), BudgetExceeded);
}

TEST_CASE("witness invariants") {
  for (auto [k, m] : std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 4}, {4, 5}, {5, 6}}) {
    SearchWitness w = exhaustive_min(k, m);
    GroundSet a = w.set();
    CHECK(a.size() == k);
    CHECK(has_distinct_consecutive_differences(a));
    CHECK(sumset(a, a).size() == w.objective);  // recomputable from scratch
    CHECK(w.objective >= 2 * k - 1);
    CHECK(w.objective <= k * (k + 1) / 2);
  }
}

TEST_CASE("exhaustive minimum is non-increasing in the gap cap") {
  std::int64_t prev = -1;
  for (std::int64_t m : {3, 4, 5, 6, 7}) {
    std::int64_t obj = exhaustive_min(4, m).objective;
    if (prev >= 0) CHECK(obj <= prev);
    prev = obj;
  }
}

TEST_CASE("annealer matches the exhaustive oracle on small spaces") {
  for (auto [k, m] : std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 2}, {3, 3}, {4, 5}}) {
    SearchWitness exact = exhaustive_min(k, m);
    for (std::uint64_t seed : {0u, 1u, 2u}) {
      SearchWitness approx = anneal_min(k, m, seed);
      CHECK(approx.objective == exact.objective);
      CHECK(approx.objective == brute_objective(approx.gaps));
    }
  }
}

TEST_CASE("annealer is deterministic and never beats the oracle") {
  SearchWitness a1 = anneal_min(6, 9, 42);
  SearchWitness a2 = anneal_min(6, 9, 42);
  CHECK(a1.gaps == a2.gaps);
  CHECK(a1.objective == a2.objective);

  SearchWitness exact = exhaustive_min(6, 9);
  CHECK(a1.objective >= exact.objective);

  GroundSet a = a1.set();
  CHECK(has_distinct_consecutive_differences(a));
  CHECK(sumset(a, a).size() == a1.objective);
}

TEST_CASE("witness serialization carries the full parameterization") {
  SearchWitness w = anneal_min(4, 6, 7);
  auto j = w.to_json();
  CHECK(j.at("method") == "anneal");
  CHECK(j.at("seed") == 7);
  CHECK(j.at("k") == 4);
  CHECK(j.at("max_gap") == 6);
  CHECK(j.at("gaps").size() == 3);
  CHECK(j.at("objective") == w.objective);
}
