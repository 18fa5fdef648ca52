#ifndef DCDLAB_CONFIG_HPP
#define DCDLAB_CONFIG_HPP

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <string>

#include "dcdlab/errors.hpp"
#include "dcdlab/numeric.hpp"

namespace dcdlab {

// Thresholds for the ">>" inequalities are calibration artifacts fixed by
// the small-case oracle (see calibrate.hpp), never claimed constants.
// They are stored squared (c2 = c^2) so the defaults stay exact even when
// c itself is irrational.

// Half the oracle minimum of |A+B| / (k sqrt|B|), squared: the oracle
// minimum ratio is exactly 1 (any |B| = 1 instance attains it and nothing
// in the window beats it), so c = 1/2 and c2 = 1/4.
inline constexpr Rational kGrowthC2{1, 4};

// Desk-scale sweeps of the paired and convex-image checks sit well above
// ratio 1; half of the observed small-case minima, squared.
inline constexpr Rational kPairGrowthC2{1, 4};
inline constexpr Rational kConvexImageC2{1, 4};

// Tightness assertion |A+B| / k^(3/2) <= 3, compared squared.
inline constexpr std::int64_t kTightnessRatioCap = 3;

struct Limits {
  std::int64_t budget = 100000000;  // corner triples / exhaustive states / table rows
  std::int64_t convex_triple_max_k = 300;
  std::int64_t good_constant = 100;
};

/// Default limits; the DCDLAB_BUDGET environment variable overrides the
/// resource budget, and the --budget flag overrides both.
inline Limits default_limits() {
  Limits limits;
  if (const char* env = std::getenv("DCDLAB_BUDGET")) {
    std::int64_t value = 0;
    std::string text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value <= 0)
      throw UsageError("DCDLAB_BUDGET must be a positive integer, got '" + text + "'");
    limits.budget = value;
  }
  return limits;
}

}  // namespace dcdlab

#endif  // DCDLAB_CONFIG_HPP
