#ifndef DCDLAB_GROUND_SET_HPP
#define DCDLAB_GROUND_SET_HPP

#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dcdlab/errors.hpp"
#include "dcdlab/numeric.hpp"

namespace dcdlab {

/// Strictly increasing sequence of exact signed integers; the universal
/// set object (A, B, S, D, ...). Construction enforces strict order, the
/// |x| <= 2^62 element range, and nonemptiness, so every pairwise sum or
/// difference downstream is exactly representable.
class GroundSet {
 public:
  /// Sorts the input. Equal inputs are rejected rather than deduplicated:
  /// a construction that collides is a bug that must surface.
  static GroundSet from_values(std::vector<std::int64_t> values) {
    std::sort(values.begin(), values.end());
    return from_sorted(std::move(values));
  }

  /// Fast path for already-sorted data; still validates everything.
  static GroundSet from_sorted(std::vector<std::int64_t> values) {
    if (values.empty()) throw TooSmall("a ground set needs at least one element");
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] > kElementLimit || values[i] < -kElementLimit)
        throw Overflow("element magnitude exceeds 2^62: " + std::to_string(values[i]));
      if (i > 0 && values[i] == values[i - 1])
        throw DuplicateElement("duplicate element: " + std::to_string(values[i]));
      if (i > 0 && values[i] < values[i - 1])
        throw UsageError("from_sorted given unsorted data");
    }
    GroundSet out;
    out.elems_ = std::move(values);
    return out;
  }

  const std::vector<std::int64_t>& elements() const { return elems_; }
  std::int64_t size() const { return static_cast<std::int64_t>(elems_.size()); }
  std::int64_t operator[](std::int64_t i) const { return elems_[static_cast<std::size_t>(i)]; }
  std::int64_t min() const { return elems_.front(); }
  std::int64_t max() const { return elems_.back(); }

  bool contains(std::int64_t x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
  }

  /// Index of the first element > x (so elements in (lo, hi] are the
  /// index range [first_above(lo), first_above(hi))).
  std::int64_t first_above(std::int64_t x) const {
    return std::upper_bound(elems_.begin(), elems_.end(), x) - elems_.begin();
  }

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  GroundSet() = default;
  std::vector<std::int64_t> elems_;
};

/// Consecutive gaps a_{i+1} - a_i of a ground set; length |A| - 1.
struct DiffProfile {
  std::vector<std::int64_t> gaps;
};

/// make_set: the public constructor name used throughout.
inline GroundSet make_set(std::vector<std::int64_t> values) {
  return GroundSet::from_values(std::move(values));
}

inline GroundSet sumset(const GroundSet& a, const GroundSet& b) {
  std::vector<std::int64_t> sums;
  sums.reserve(static_cast<std::size_t>(a.size()) * static_cast<std::size_t>(b.size()));
  for (std::int64_t x : a.elements())
    for (std::int64_t y : b.elements()) sums.push_back(checked_add(x, y));
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return GroundSet::from_sorted(std::move(sums));
}

inline GroundSet difference_set(const GroundSet& a, const GroundSet& b) {
  std::vector<std::int64_t> diffs;
  diffs.reserve(static_cast<std::size_t>(a.size()) * static_cast<std::size_t>(b.size()));
  for (std::int64_t x : a.elements())
    for (std::int64_t y : b.elements()) diffs.push_back(checked_sub(x, y));
  std::sort(diffs.begin(), diffs.end());
  diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
  return GroundSet::from_sorted(std::move(diffs));
}

inline DiffProfile consecutive_differences(const GroundSet& a) {
  if (a.size() < 2) throw TooSmall("consecutive differences need at least two elements");
  DiffProfile out;
  out.gaps.reserve(static_cast<std::size_t>(a.size()) - 1);
  for (std::int64_t i = 0; i + 1 < a.size(); ++i) out.gaps.push_back(a[i + 1] - a[i]);
  return out;
}

/// Gaps strictly increasing; vacuously true for |A| <= 2.
inline bool is_convex(const GroundSet& a) {
  if (a.size() <= 2) return true;
  for (std::int64_t i = 0; i + 2 < a.size(); ++i)
    if (a[i + 1] - a[i] >= a[i + 2] - a[i + 1]) return false;
  return true;
}

/// All gaps pairwise distinct; vacuously true for |A| <= 2. Strictly
/// weaker than convexity.
inline bool has_distinct_consecutive_differences(const GroundSet& a) {
  if (a.size() <= 2) return true;
  std::vector<std::int64_t> gaps = consecutive_differences(a).gaps;
  std::sort(gaps.begin(), gaps.end());
  return std::adjacent_find(gaps.begin(), gaps.end()) == gaps.end();
}

/// True iff the paired gap sequence ((d_i, d'_i))_i has no repeats.
inline bool has_distinct_pairs(const GroundSet& a, const GroundSet& a2) {
  if (a.size() != a2.size()) throw SizeMismatch("paired sets must have equal size");
  if (a.size() <= 2) return true;
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  pairs.reserve(static_cast<std::size_t>(a.size()) - 1);
  for (std::int64_t i = 0; i + 1 < a.size(); ++i)
    pairs.emplace_back(a[i + 1] - a[i], a2[i + 1] - a2[i]);
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

/// {lambda * a + mu : a in A}; re-sorted when lambda < 0.
inline GroundSet dilate_translate(const GroundSet& a, std::int64_t lambda, std::int64_t mu) {
  if (lambda == 0) throw UsageError("dilation factor must be nonzero");
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(a.size()));
  for (std::int64_t x : a.elements()) out.push_back(checked_add(checked_mul(lambda, x), mu));
  if (lambda < 0) std::reverse(out.begin(), out.end());
  return GroundSet::from_sorted(std::move(out));
}

/// {1, 2, ..., k}.
inline GroundSet interval_set(std::int64_t k) {
  if (k < 1) throw TooSmall("interval needs k >= 1");
  std::vector<std::int64_t> v(static_cast<std::size_t>(k));
  for (std::int64_t i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return GroundSet::from_sorted(std::move(v));
}

}  // namespace dcdlab

#endif  // DCDLAB_GROUND_SET_HPP
