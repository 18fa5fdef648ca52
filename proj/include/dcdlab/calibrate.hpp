#ifndef DCDLAB_CALIBRATE_HPP
#define DCDLAB_CALIBRATE_HPP

#include <cstdint>
#include <vector>

#include "dcdlab/errors.hpp"
#include "dcdlab/numeric.hpp"

namespace dcdlab {

// Exhaustive small-case oracle fixing the default growth threshold: over
// ALL sets A with distinct consecutive differences (2 <= k <= 6, gaps
// drawn without repetition from [1,8], anchored at 0) and ALL nonempty
// B subset of [0,8] with |B| <= 4, the minimum of |A+B|^2 / (k^2 |B|) —
// the squared growth ratio — is returned as an exact rational. Elements
// stay below 64, so each sumset is one 64-bit mask and |A+B| a popcount.

struct GrowthOracleResult {
  Rational min_ratio2;          // min |A+B|^2 / (k^2 |B|)
  std::int64_t instances = 0;   // (A, B) pairs examined
  std::int64_t best_sumset = 0; // |A+B| at the minimizer
  std::int64_t best_k = 0;
  std::int64_t best_b = 0;      // |B| at the minimizer
};

inline GrowthOracleResult growth_threshold_oracle() {
  constexpr std::int64_t kMaxK = 6;
  constexpr std::int64_t kMaxGap = 8;
  constexpr std::int64_t kMaxB = 4;
  constexpr std::int64_t kBRange = 8;  // B subset of [0, 8]

  // Enumerate A as gap permutations, keep the element bitmask.
  std::vector<std::uint64_t> a_masks;
  std::vector<std::int64_t> a_sizes;
  std::vector<std::int64_t> gaps;
  std::vector<bool> used(kMaxGap + 1, false);
  auto enumerate_a = [&](auto&& self, std::uint64_t mask, std::int64_t last) -> void {
    std::int64_t k = static_cast<std::int64_t>(gaps.size()) + 1;
    if (k >= 2) {
      a_masks.push_back(mask);
      a_sizes.push_back(k);
    }
    if (k == kMaxK) return;
    for (std::int64_t g = 1; g <= kMaxGap; ++g) {
      if (used[static_cast<std::size_t>(g)]) continue;
      used[static_cast<std::size_t>(g)] = true;
      gaps.push_back(g);
      self(self, mask | (std::uint64_t{1} << (last + g)), last + g);
      gaps.pop_back();
      used[static_cast<std::size_t>(g)] = false;
    }
  };
  enumerate_a(enumerate_a, 1, 0);  // A starts as {0}

  // Enumerate B as subsets of [0, kBRange] with 1 <= |B| <= kMaxB.
  std::vector<std::vector<int>> b_shifts;
  for (std::uint32_t bits = 1; bits < (1u << (kBRange + 1)); ++bits) {
    if (__builtin_popcount(bits) > kMaxB) continue;
    std::vector<int> shifts;
    for (int v = 0; v <= kBRange; ++v)
      if (bits & (1u << v)) shifts.push_back(v);
    b_shifts.push_back(std::move(shifts));
  }

  GrowthOracleResult out;
  out.min_ratio2 = Rational{-1, 1};
  for (std::size_t ai = 0; ai < a_masks.size(); ++ai) {
    const std::uint64_t amask = a_masks[ai];
    const std::int64_t k = a_sizes[ai];
    for (const auto& shifts : b_shifts) {
      std::uint64_t sum_mask = 0;
      for (int sft : shifts) sum_mask |= amask << sft;
      const std::int64_t r = __builtin_popcountll(sum_mask);
      const std::int64_t bsize = static_cast<std::int64_t>(shifts.size());
      ++out.instances;
      // ratio2 = r^2 / (k^2 |B|); compare cross-multiplied.
      if (out.min_ratio2.num < 0 ||
          int128{r} * r * out.min_ratio2.den < int128{out.min_ratio2.num} * k * k * bsize) {
        out.min_ratio2 = Rational::of(r * r, k * k * bsize);
        out.best_sumset = r;
        out.best_k = k;
        out.best_b = bsize;
      }
    }
  }
  return out;
}

}  // namespace dcdlab

#endif  // DCDLAB_CALIBRATE_HPP
