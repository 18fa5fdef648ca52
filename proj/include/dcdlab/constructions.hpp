#ifndef DCDLAB_CONSTRUCTIONS_HPP
#define DCDLAB_CONSTRUCTIONS_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dcdlab/errors.hpp"
#include "dcdlab/ground_set.hpp"
#include "dcdlab/rng.hpp"

namespace dcdlab {

/// True iff all nonzero pairwise differences are distinct; equivalently
/// |S - S| = |S|(|S|-1) + 1.
inline bool is_sidon(const GroundSet& s) {
  if (s.size() <= 1) return true;
  std::unordered_set<std::int64_t> seen;
  seen.reserve(static_cast<std::size_t>(s.size()) * static_cast<std::size_t>(s.size()));
  for (std::int64_t i = 0; i < s.size(); ++i)
    for (std::int64_t j = i + 1; j < s.size(); ++j)
      if (!seen.insert(s[j] - s[i]).second) return false;
  return true;
}

/// First m terms of the greedy Sidon sequence starting from 1
/// (1, 2, 4, 8, 13, 21, ...): each new term is the smallest integer
/// keeping all pairwise differences distinct.
inline GroundSet sidon_greedy(std::int64_t m) {
  if (m < 1) throw TooSmall("sidon_greedy needs m >= 1");
  std::vector<std::int64_t> terms;
  std::unordered_set<std::int64_t> diffs;
  terms.reserve(static_cast<std::size_t>(m));
  for (std::int64_t n = 0; n < m; ++n) {
    std::int64_t candidate = terms.empty() ? 1 : terms.back() + 1;
    for (;; ++candidate) {
      if (candidate > kElementLimit) throw Overflow("greedy Sidon term exceeds element range");
      bool ok = true;
      for (std::int64_t prev : terms) {
        if (diffs.count(candidate - prev)) {
          ok = false;
          break;
        }
      }
      if (ok) break;
    }
    for (std::int64_t prev : terms) diffs.insert(candidate - prev);
    terms.push_back(candidate);
  }
  return GroundSet::from_sorted(std::move(terms));
}

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Dense Sidon set {2pa + (a^2 mod p) : 0 <= a < p}; p elements inside
/// [0, 2p^2).
inline GroundSet sidon_modular(std::int64_t p) {
  if (!is_prime(p)) throw NotPrime("sidon_modular needs a prime, got " + std::to_string(p));
  std::vector<std::int64_t> terms;
  terms.reserve(static_cast<std::size_t>(p));
  for (std::int64_t a = 0; a < p; ++a)
    terms.push_back(checked_add(checked_mul(2 * p, a), (a * a) % p));
  return GroundSet::from_sorted(std::move(terms));
}

/// Vertex sequence drawn from a Sidon set S with repetitions, of length
/// k = m(m-1), whose k-1 consecutive differences are nonzero and pairwise
/// distinct (each one is a distinct signed Sidon difference).
struct EulerianList {
  std::vector<std::int64_t> entries;
};

/// Eulerian circuit of the complete symmetric digraph on S, truncated to
/// its first m(m-1) vertices. Hierholzer stack traversal; from vertex v
/// the unused out-arcs are taken in rotating order v+1, v+2, ... (mod m),
/// which keeps the values well mixed at both ends of the list.
inline EulerianList eulerian_list(const GroundSet& s) {
  const std::int64_t m = s.size();
  if (m < 3) throw TooSmall("eulerian_list needs |S| >= 3");
  if (!is_sidon(s)) throw NotSidon("eulerian_list needs a Sidon set");
  const std::int64_t arcs = m * (m - 1);

  std::vector<std::int64_t> next_step(static_cast<std::size_t>(m), 1);
  std::vector<std::int64_t> stack, circuit;
  stack.reserve(static_cast<std::size_t>(arcs) + 1);
  circuit.reserve(static_cast<std::size_t>(arcs) + 1);
  stack.push_back(0);
  while (!stack.empty()) {
    std::int64_t v = stack.back();
    if (next_step[static_cast<std::size_t>(v)] < m) {
      std::int64_t w = (v + next_step[static_cast<std::size_t>(v)]) % m;
      ++next_step[static_cast<std::size_t>(v)];
      stack.push_back(w);
    } else {
      circuit.push_back(v);
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  if (static_cast<std::int64_t>(circuit.size()) != arcs + 1)
    throw std::logic_error("eulerian circuit incomplete");

  EulerianList out;
  out.entries.reserve(static_cast<std::size_t>(arcs));
  for (std::int64_t i = 0; i < arcs; ++i)
    out.entries.push_back(s[circuit[static_cast<std::size_t>(i)]]);

  // Contract check: consecutive differences nonzero and pairwise distinct.
  std::vector<std::int64_t> diffs;
  diffs.reserve(out.entries.size() - 1);
  for (std::size_t i = 0; i + 1 < out.entries.size(); ++i)
    diffs.push_back(out.entries[i + 1] - out.entries[i]);
  std::vector<std::int64_t> sorted = diffs;
  std::sort(sorted.begin(), sorted.end());
  if (std::find(sorted.begin(), sorted.end(), 0) != sorted.end() ||
      std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::logic_error("eulerian list differences not distinct");
  return out;
}

enum class SidonMethod { greedy, modular };

/// Paired sets realizing small sumset growth despite distinct consecutive
/// differences: A = {i*Q + L_i}, B = {j*Q} with L an Eulerian list over a
/// Sidon set S and Q = 2*max(S)+1 (so |L_{i+1}-L_i| < Q and the residues
/// never interfere with the coarse scale).
struct DcdInstance {
  GroundSet a;
  GroundSet b;
  GroundSet s;
  std::int64_t q = 0;
};

inline DcdInstance dcd_from_sidon(const GroundSet& s) {
  if (s.min() < 0) throw UsageError("dcd construction needs min(S) >= 0");
  EulerianList list = eulerian_list(s);
  const std::int64_t k = static_cast<std::int64_t>(list.entries.size());
  const std::int64_t q = checked_add(checked_mul(2, s.max()), 1);
  std::vector<std::int64_t> a_vals, b_vals;
  a_vals.reserve(static_cast<std::size_t>(k));
  b_vals.reserve(static_cast<std::size_t>(k));
  for (std::int64_t i = 1; i <= k; ++i) {
    a_vals.push_back(checked_add(checked_mul(i, q), list.entries[static_cast<std::size_t>(i - 1)]));
    b_vals.push_back(checked_mul(i, q));
  }
  DcdInstance out{GroundSet::from_sorted(std::move(a_vals)),
                  GroundSet::from_sorted(std::move(b_vals)), s, q};
  if (!has_distinct_consecutive_differences(out.a))
    throw std::logic_error("dcd construction lost gap distinctness");
  return out;
}

inline DcdInstance dcd_construction(std::int64_t m, SidonMethod method = SidonMethod::greedy) {
  if (m < 3) throw TooSmall("dcd_construction needs m >= 3");
  GroundSet s = method == SidonMethod::greedy ? sidon_greedy(m) : sidon_modular(m);
  return dcd_from_sidon(s);
}

enum class ConvexKind { squares, power, random_gaps };

/// Convex families: squares {i^2}, pure powers {i^alpha}, or seeded
/// strictly increasing random gaps. is_convex holds for every output.
inline GroundSet convex_family(ConvexKind kind, std::int64_t k, int alpha = 2,
                               std::uint64_t seed = 0) {
  if (k < 1) throw TooSmall("convex_family needs k >= 1");
  std::vector<std::int64_t> vals;
  vals.reserve(static_cast<std::size_t>(k));
  switch (kind) {
    case ConvexKind::squares:
      for (std::int64_t i = 1; i <= k; ++i) vals.push_back(checked_mul(i, i));
      break;
    case ConvexKind::power: {
      if (alpha < 2) throw UsageError("power family needs alpha >= 2");
      for (std::int64_t i = 1; i <= k; ++i) vals.push_back(checked_pow(i, alpha));
      break;
    }
    case ConvexKind::random_gaps: {
      Rng rng(seed);
      std::int64_t value = 1 + static_cast<std::int64_t>(rng.below(8));
      std::int64_t gap = 1 + static_cast<std::int64_t>(rng.below(4));
      vals.push_back(value);
      for (std::int64_t i = 1; i < k; ++i) {
        value = checked_add(value, gap);
        vals.push_back(value);
        gap = checked_add(gap, 1 + static_cast<std::int64_t>(rng.below(4)));
      }
      break;
    }
  }
  return GroundSet::from_sorted(std::move(vals));
}

/// A = k*[k/10] union (k+1)*[k/10]: two dilated intervals whose merge
/// still has pairwise distinct consecutive gaps while E_3 stays as large
/// as an interval's.
inline GroundSet e3_counterexample(std::int64_t k) {
  if (k < 10 || k % 10 != 0) throw NotDivisible("e3_counterexample needs k >= 10 divisible by 10");
  const std::int64_t t = k / 10;
  std::vector<std::int64_t> vals;
  vals.reserve(static_cast<std::size_t>(2 * t));
  for (std::int64_t i = 1; i <= t; ++i) vals.push_back(checked_mul(k, i));
  for (std::int64_t i = 1; i <= t; ++i) vals.push_back(checked_mul(k + 1, i));
  // Arm overlap k*i == (k+1)*j would force (k+1) | i, impossible for
  // i <= k/10; from_values still rejects any collision outright.
  GroundSet a = make_set(std::move(vals));
  if (!has_distinct_consecutive_differences(a))
    throw std::logic_error("e3_counterexample lost gap distinctness");
  return a;
}

}  // namespace dcdlab

#endif  // DCDLAB_CONSTRUCTIONS_HPP
