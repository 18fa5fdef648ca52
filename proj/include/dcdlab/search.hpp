#ifndef DCDLAB_SEARCH_HPP
#define DCDLAB_SEARCH_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dcdlab/errors.hpp"
#include "dcdlab/ground_set.hpp"
#include "dcdlab/rng.hpp"

namespace dcdlab {

// How small can |A+A| be over k-element sets with distinct consecutive
// differences? States are gap vectors (d_1, ..., d_{k-1}) of pairwise
// distinct values in [1, max_gap]; A is the prefix-sum set anchored at 0
// (translation leaves |A+A| unchanged, dilation is not quotiented).

struct SearchWitness {
  std::vector<std::int64_t> gaps;
  std::int64_t objective = 0;  // |A+A|, recomputed from the gaps
  std::string method;          // "exhaustive" or "anneal"
  std::int64_t k = 0;
  std::int64_t max_gap = 0;
  std::uint64_t seed = 0;
  std::int64_t iterations = 0;

  GroundSet set() const {
    std::vector<std::int64_t> vals{0};
    std::int64_t acc = 0;
    for (std::int64_t g : gaps) {
      acc = checked_add(acc, g);
      vals.push_back(acc);
    }
    return GroundSet::from_sorted(std::move(vals));
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["method"] = method;
    j["k"] = k;
    j["max_gap"] = max_gap;
    j["seed"] = seed;
    j["iterations"] = iterations;
    j["objective"] = objective;
    j["gaps"] = gaps;
    j["set"] = set().elements();
    return j;
  }
};

namespace detail {

// |A+A| for A given by gap prefix sums; small-k workhorse shared by both
// search methods.
inline std::int64_t sumset_size_of_gaps(const std::vector<std::int64_t>& gaps) {
  std::vector<std::int64_t> a{0};
  a.reserve(gaps.size() + 1);
  std::int64_t acc = 0;
  for (std::int64_t g : gaps) {
    acc += g;
    a.push_back(acc);
  }
  std::vector<std::int64_t> sums;
  sums.reserve(a.size() * (a.size() + 1) / 2);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i; j < a.size(); ++j) sums.push_back(a[i] + a[j]);
  std::sort(sums.begin(), sums.end());
  return static_cast<std::int64_t>(std::unique(sums.begin(), sums.end()) - sums.begin());
}

inline void require_search_space(std::int64_t k, std::int64_t max_gap) {
  if (k < 2) throw Infeasible("search needs k >= 2");
  if (max_gap < k - 1)
    throw Infeasible("max_gap " + std::to_string(max_gap) + " cannot host " +
                     std::to_string(k - 1) + " distinct gaps");
}

}  // namespace detail

/// Global minimizer by lexicographic enumeration of all distinct-gap
/// vectors. The state count is the falling factorial
/// max_gap * (max_gap - 1) * ... * (max_gap - k + 2).
inline SearchWitness exhaustive_min(std::int64_t k, std::int64_t max_gap,
                                    std::int64_t budget = 100000000) {
  detail::require_search_space(k, max_gap);
  std::int64_t states = 1;
  for (std::int64_t i = 0; i < k - 1; ++i) {
    states = checked_mul(states, max_gap - i);
    if (states > budget)
      throw BudgetExceeded("exhaustive search space exceeds budget of " +
                           std::to_string(budget) + " states");
  }

  SearchWitness best;
  best.method = "exhaustive";
  best.k = k;
  best.max_gap = max_gap;
  best.iterations = states;
  best.objective = -1;

  std::vector<std::int64_t> gaps;
  std::vector<bool> used(static_cast<std::size_t>(max_gap) + 1, false);
  auto dfs = [&](auto&& self) -> void {
    if (static_cast<std::int64_t>(gaps.size()) == k - 1) {
      std::int64_t obj = detail::sumset_size_of_gaps(gaps);
      if (best.objective < 0 || obj < best.objective) {
        best.objective = obj;
        best.gaps = gaps;  // first hit in lexicographic order wins ties
      }
      return;
    }
    for (std::int64_t g = 1; g <= max_gap; ++g) {
      if (used[static_cast<std::size_t>(g)]) continue;
      used[static_cast<std::size_t>(g)] = true;
      gaps.push_back(g);
      self(self);
      gaps.pop_back();
      used[static_cast<std::size_t>(g)] = false;
    }
  };
  dfs(dfs);
  return best;
}

struct AnnealSchedule {
  std::int64_t iterations = 20000;  // per restart
  int restarts = 4;
  double t0 = 3.0;
  double cooling = 0.9995;
  double swap_probability = 0.5;
};

/// Seeded simulated annealing over the same state space. Moves: swap two
/// gap positions, or replace one gap by an unused value in [1, max_gap].
/// Deterministic given (seed, schedule); ties between equal objectives
/// resolve to the lexicographically smallest gap vector seen.
inline SearchWitness anneal_min(std::int64_t k, std::int64_t max_gap, std::uint64_t seed,
                                const AnnealSchedule& schedule = {}) {
  detail::require_search_space(k, max_gap);
  Rng rng(seed);

  auto random_state = [&]() {
    // Partial Fisher-Yates draw of k-1 distinct values from [1, max_gap].
    std::vector<std::int64_t> pool(static_cast<std::size_t>(max_gap));
    for (std::int64_t i = 0; i < max_gap; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(k - 1));
    for (std::int64_t i = 0; i < k - 1; ++i) {
      std::size_t pick = static_cast<std::size_t>(i) +
                         static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(max_gap - i)));
      std::swap(pool[static_cast<std::size_t>(i)], pool[pick]);
      out.push_back(pool[static_cast<std::size_t>(i)]);
    }
    return out;
  };

  SearchWitness best;
  best.method = "anneal";
  best.k = k;
  best.max_gap = max_gap;
  best.seed = seed;
  best.iterations = schedule.iterations * schedule.restarts;
  best.objective = -1;

  auto consider = [&](const std::vector<std::int64_t>& gaps, std::int64_t obj) {
    if (best.objective < 0 || obj < best.objective ||
        (obj == best.objective && gaps < best.gaps)) {
      best.objective = obj;
      best.gaps = gaps;
    }
  };

  for (int restart = 0; restart < schedule.restarts; ++restart) {
    std::vector<std::int64_t> state = random_state();
    std::vector<bool> used(static_cast<std::size_t>(max_gap) + 1, false);
    for (std::int64_t g : state) used[static_cast<std::size_t>(g)] = true;
    std::int64_t obj = detail::sumset_size_of_gaps(state);
    consider(state, obj);

    double temperature = schedule.t0;
    for (std::int64_t step = 0; step < schedule.iterations; ++step) {
      std::vector<std::int64_t> next = state;
      if (k > 2 && rng.unit() < schedule.swap_probability) {
        std::size_t i = static_cast<std::size_t>(rng.below(next.size()));
        std::size_t j = static_cast<std::size_t>(rng.below(next.size()));
        std::swap(next[i], next[j]);
      } else {
        std::size_t i = static_cast<std::size_t>(rng.below(next.size()));
        std::int64_t fresh = rng.range(1, max_gap);
        if (used[static_cast<std::size_t>(fresh)]) {
          temperature *= schedule.cooling;
          continue;  // occupied value; spend the step
        }
        next[i] = fresh;
      }
      std::int64_t next_obj = detail::sumset_size_of_gaps(next);
      double delta = static_cast<double>(next_obj - obj);
      if (delta <= 0 || rng.unit() < std::exp(-delta / temperature)) {
        for (std::int64_t g : state) used[static_cast<std::size_t>(g)] = false;
        state = std::move(next);
        for (std::int64_t g : state) used[static_cast<std::size_t>(g)] = true;
        obj = next_obj;
        consider(state, obj);
      }
      temperature *= schedule.cooling;
    }
  }
  return best;
}

}  // namespace dcdlab

#endif  // DCDLAB_SEARCH_HPP
