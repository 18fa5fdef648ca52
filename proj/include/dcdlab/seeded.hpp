#ifndef DCDLAB_SEEDED_HPP
#define DCDLAB_SEEDED_HPP

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "dcdlab/constructions.hpp"
#include "dcdlab/errors.hpp"
#include "dcdlab/ground_set.hpp"
#include "dcdlab/rng.hpp"

namespace dcdlab {

// Deterministic instance generators shared by the verification sweeps
// and the acceptance suite. Instance i of a sweep always derives from
// rng(master_seed + i), so a sweep is reproducible from its config alone.

inline constexpr std::uint64_t kDefaultSeed = 1729;

/// k distinct values drawn from [lo, hi], sorted.
inline GroundSet random_set(Rng& rng, std::int64_t k, std::int64_t lo, std::int64_t hi) {
  if (k < 1) throw TooSmall("random_set needs k >= 1");
  if (hi - lo + 1 < k) throw Infeasible("random_set range too small for k distinct values");
  std::unordered_set<std::int64_t> chosen;
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(k));
  while (static_cast<std::int64_t>(out.size()) < k) {
    std::int64_t v = rng.range(lo, hi);
    if (chosen.insert(v).second) out.push_back(v);
  }
  return make_set(std::move(out));
}

/// Random set with distinct consecutive differences: k-1 distinct gaps
/// from [1, max_gap] in random order, anchored at 0.
inline GroundSet random_dcd_set(Rng& rng, std::int64_t k, std::int64_t max_gap) {
  if (k < 2) throw TooSmall("random_dcd_set needs k >= 2");
  if (max_gap < k - 1) throw Infeasible("max_gap too small for k-1 distinct gaps");
  std::vector<std::int64_t> pool(static_cast<std::size_t>(max_gap));
  for (std::int64_t i = 0; i < max_gap; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  std::vector<std::int64_t> vals{0};
  std::int64_t acc = 0;
  for (std::int64_t i = 0; i < k - 1; ++i) {
    std::size_t pick = static_cast<std::size_t>(i) +
                       static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(max_gap - i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[pick]);
    acc += pool[static_cast<std::size_t>(i)];
    vals.push_back(acc);
  }
  return GroundSet::from_sorted(std::move(vals));
}

struct GrowthInstance {
  GroundSet a;
  GroundSet b;
};

/// Seeded (A, B) with the distinct-differences property, k <= max_k and
/// |B| <= max_b.
inline GrowthInstance seeded_growth_instance(std::uint64_t seed, std::int64_t max_k,
                                             std::int64_t max_b) {
  Rng rng(seed);
  std::int64_t k = rng.range(2, max_k);
  GroundSet a = random_dcd_set(rng, k, 3 * k);
  std::int64_t bs = rng.range(1, max_b);
  GroundSet b = random_set(rng, bs, 0, 10 * max_b + 10 * bs);
  return GrowthInstance{std::move(a), std::move(b)};
}

/// Seeded arbitrary integer set with k <= max_k, elements in +/-10^9.
inline GroundSet seeded_random_set(std::uint64_t seed, std::int64_t max_k) {
  Rng rng(seed);
  std::int64_t k = rng.range(1, max_k);
  return random_set(rng, k, -1000000000, 1000000000);
}

/// Seeded strictly increasing positive set (inside the increasing branch
/// of x^2), k <= max_k.
inline GroundSet seeded_positive_set(std::uint64_t seed, std::int64_t max_k) {
  Rng rng(seed);
  std::int64_t k = rng.range(2, max_k);
  return random_set(rng, k, 1, 1000000);
}

}  // namespace dcdlab

#endif  // DCDLAB_SEEDED_HPP
