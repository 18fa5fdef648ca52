#ifndef DCDLAB_RNG_HPP
#define DCDLAB_RNG_HPP

#include <cstdint>
#include <random>

#include "dcdlab/errors.hpp"

namespace dcdlab {

// Deterministic random source. mt19937_64 output is fully specified by
// the standard and the reductions below avoid std::uniform_int_distribution,
// whose mapping is implementation-defined; identical seeds therefore
// reproduce identical streams everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Unbiased draw from [0, n).
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw UsageError("Rng::below(0)");
    std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    std::uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return v % n;
  }

  // Inclusive range.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace dcdlab

#endif  // DCDLAB_RNG_HPP
