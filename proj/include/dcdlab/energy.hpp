#ifndef DCDLAB_ENERGY_HPP
#define DCDLAB_ENERGY_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dcdlab/errors.hpp"
#include "dcdlab/ground_set.hpp"
#include "dcdlab/numeric.hpp"
#include "dcdlab/record.hpp"

namespace dcdlab {

/// Exact multiset counter x -> r_{A-B}(x) = #{(a,b) : a - b = x}. The
/// support equals A - B and the counts always total |A||B|.
class RepFn {
 public:
  static RepFn of(const GroundSet& a, const GroundSet& b) {
    RepFn out;
    out.counts_.reserve(static_cast<std::size_t>(a.size()) * 2);
    for (std::int64_t x : a.elements())
      for (std::int64_t y : b.elements()) ++out.counts_[checked_sub(x, y)];
    out.total_ = checked_mul(a.size(), b.size());
    return out;
  }

  std::int64_t at(std::int64_t x) const {
    auto it = counts_.find(x);
    return it == counts_.end() ? 0 : it->second;
  }

  std::int64_t total() const { return total_; }

  const std::unordered_map<std::int64_t, std::int64_t>& counts() const { return counts_; }

  std::vector<std::int64_t> sorted_support() const {
    std::vector<std::int64_t> keys;
    keys.reserve(counts_.size());
    for (const auto& [x, c] : counts_) keys.push_back(x);
    std::sort(keys.begin(), keys.end());
    return keys;
  }

  std::int64_t max_count() const {
    std::int64_t best = 0;
    for (const auto& [x, c] : counts_) best = std::max(best, c);
    return best;
  }

 private:
  std::unordered_map<std::int64_t, std::int64_t> counts_;
  std::int64_t total_ = 0;
};

inline std::int64_t energy_of(const RepFn& rep, int order) {
  if (order < 1 || order > 4) throw UsageError("energy order must be in 1..4");
  unsigned __int128 sum = 0;
  for (const auto& [x, c] : rep.counts()) {
    unsigned __int128 term = static_cast<unsigned __int128>(c);
    for (int i = 1; i < order; ++i) term *= static_cast<unsigned __int128>(c);
    sum += term;
  }
  if (sum > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max()))
    throw Overflow("energy exceeds exact 64-bit range");
  return static_cast<std::int64_t>(sum);
}

/// E_order(A, B) = sum_x r_{A-B}(x)^order, exact.
inline std::int64_t energy(const GroundSet& a, const GroundSet& b, int order) {
  return energy_of(RepFn::of(a, b), order);
}

/// Two independent routes to the same count: the left side tallies
/// coincidences of planar differences (c,c) - (x,y) over the diagonal
/// times A x A directly; the right side is sum_x r_{A-A}(x)^3. They must
/// agree exactly for every A.
inline std::pair<std::int64_t, std::int64_t> energy_pair_identity(const GroundSet& a) {
  std::unordered_map<unsigned __int128, std::int64_t, PairKeyHash> planar;
  const auto& e = a.elements();
  planar.reserve(e.size() * e.size());
  for (std::int64_t c : e)
    for (std::int64_t x : e)
      for (std::int64_t y : e) ++planar[pack_pair(c - x, c - y)];
  unsigned __int128 lhs = 0;
  for (const auto& [key, cnt] : planar)
    lhs += static_cast<unsigned __int128>(cnt) * static_cast<unsigned __int128>(cnt);
  if (lhs > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max()))
    throw Overflow("planar second-moment exceeds exact 64-bit range");
  return {static_cast<std::int64_t>(lhs), energy(a, a, 3)};
}

/// Chosen dyadic level and its popular difference set
/// P = {x : delta <= r_{A-A}(x) <= 2*delta}.
struct DyadicBand {
  std::int64_t delta = 0;
  GroundSet popular;
};

/// Scans delta in {1, 2, 4, ..., 2^ceil(log2 |A|)} and keeps the band
/// maximizing delta * |P| (smallest delta on ties). Bands are closed on
/// both ends, so each count lands in at most two bands; the winner always
/// satisfies delta * |P| >= |A|^2 / (2 (floor(log2 |A|) + 1)).
inline DyadicBand dyadic_popular_set(const GroundSet& a) {
  if (a.size() < 2) throw TooSmall("dyadic_popular_set needs |A| >= 2");
  RepFn rep = RepFn::of(a, a);
  std::vector<std::int64_t> support = rep.sorted_support();

  std::int64_t cap = 1;
  while (cap < a.size()) cap *= 2;  // 2^ceil(log2 |A|)

  std::int64_t best_delta = 0;
  std::int64_t best_score = -1;
  std::vector<std::int64_t> best_members;
  for (std::int64_t delta = 1; delta <= cap; delta *= 2) {
    std::vector<std::int64_t> members;
    for (std::int64_t x : support) {
      std::int64_t r = rep.at(x);
      if (r >= delta && r <= 2 * delta) members.push_back(x);
    }
    std::int64_t score = delta * static_cast<std::int64_t>(members.size());
    if (score > best_score) {
      best_score = score;
      best_delta = delta;
      best_members = std::move(members);
    }
  }
  return DyadicBand{best_delta, GroundSet::from_sorted(std::move(best_members))};
}

/// Ordered index pairs (i, j) into A with a_i - a_j in P.
struct PopularityGraph {
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  std::int64_t delta = 0;
  GroundSet popular;
};

inline PopularityGraph popularity_graph(const GroundSet& a, std::int64_t delta,
                                        const GroundSet& p) {
  PopularityGraph g{{}, delta, p};
  for (std::int64_t i = 0; i < a.size(); ++i)
    for (std::int64_t j = 0; j < a.size(); ++j)
      if (p.contains(a[i] - a[j]))
        g.edges.emplace_back(static_cast<std::int32_t>(i), static_cast<std::int32_t>(j));
  return g;
}

/// |{(c - a, c - b) : c in A, (a,b) an edge}| exactly. Points with equal
/// difference gap live on the same line v - u = a - b, so the count
/// decomposes per difference value and never needs a planar hash of all
/// |A| * |G| triples at once.
inline std::int64_t corner_set_size(const GroundSet& a, const PopularityGraph& g,
                                    std::int64_t budget = 100000000) {
  const std::int64_t edge_count = static_cast<std::int64_t>(g.edges.size());
  if (int128{a.size()} * edge_count > int128{budget})
    throw ResourceLimit("corner_set_size: |A| * |G| exceeds budget");
  std::unordered_map<std::int64_t, std::vector<std::int64_t>> heads;
  for (auto [i, j] : g.edges) heads[a[i] - a[j]].push_back(a[i]);
  std::int64_t total = 0;
  std::vector<std::int64_t> line;
  for (const auto& [x, hs] : heads) {
    line.clear();
    line.reserve(static_cast<std::size_t>(a.size()) * hs.size());
    for (std::int64_t c : a.elements())
      for (std::int64_t h : hs) line.push_back(c - h);
    std::sort(line.begin(), line.end());
    line.erase(std::unique(line.begin(), line.end()), line.end());
    total += static_cast<std::int64_t>(line.size());
  }
  return total;
}

/// Fraction of distinct consecutive gaps, |{d_i}| / |A|, exact.
inline Rational difference_richness(const GroundSet& a) {
  if (a.size() < 2) throw TooSmall("difference_richness needs |A| >= 2");
  std::vector<std::int64_t> gaps = consecutive_differences(a).gaps;
  std::sort(gaps.begin(), gaps.end());
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
  return Rational::of(static_cast<std::int64_t>(gaps.size()), a.size());
}

/// Measures every station of the difference-set energy pipeline on one
/// set: K = |A-A|/|A|, E_3(A), the dyadic band, the popularity graph, the
/// graph-restricted difference count, and the two mixed energies, plus
/// the dimensionless ratio of each inequality in the chain (measured
/// divided by the bound with constant 1). Reporting only; the record
/// asserts nothing itself.
inline Record energy_pipeline_report(const GroundSet& a, const std::string& family,
                                     std::int64_t budget = 100000000) {
  if (a.size() < 2) throw TooSmall("energy_pipeline_report needs |A| >= 2");
  const double k = static_cast<double>(a.size());
  Record rec;
  rec.check = "energy-pipeline";
  rec.family = family;
  rec.k = a.size();

  GroundSet d = difference_set(a, a);
  std::int64_t e3 = energy(a, a, 3);
  DyadicBand band = dyadic_popular_set(a);
  PopularityGraph g = popularity_graph(a, band.delta, band.popular);
  std::int64_t corner = corner_set_size(a, g, budget);
  RepFn rep_ad = RepFn::of(a, d);
  std::int64_t e2_ad = energy_of(rep_ad, 2);
  std::int64_t e3_ad = energy_of(rep_ad, 3);

  rec.quantities["abs_a"] = a.size();
  rec.quantities["abs_d"] = d.size();
  rec.quantities["e3"] = e3;
  rec.quantities["delta"] = band.delta;
  rec.quantities["abs_p"] = band.popular.size();
  rec.quantities["abs_g"] = static_cast<std::int64_t>(g.edges.size());
  rec.quantities["corner"] = corner;
  rec.quantities["e2_ad"] = e2_ad;
  rec.quantities["e3_ad"] = e3_ad;

  const double dd = static_cast<double>(d.size());
  rec.ratios["e3_vs_k3"] = static_cast<double>(e3) / (k * k * k);
  rec.ratios["dyadic_mass_vs_k2"] =
      static_cast<double>(band.delta) * static_cast<double>(band.popular.size()) / (k * k);
  rec.ratios["graph_vs_k2"] = static_cast<double>(g.edges.size()) / (k * k);
  rec.ratios["delta_vs_k_over_K"] = static_cast<double>(band.delta) * dd / (k * k);
  rec.ratios["corner_vs_k3"] = static_cast<double>(corner) / (k * k * k);
  rec.ratios["e2ad_vs_k4_over_K"] =
      static_cast<double>(e2_ad) * dd / (k * k * k * k * k);
  rec.ratios["cauchy_schwarz"] =
      static_cast<double>(e2_ad) / std::sqrt(static_cast<double>(e3_ad) * k * dd);
  rec.ratios["diffset_vs_k85"] = dd / std::pow(k, 1.6);

  rec.measured = d.size();
  rec.bound = std::pow(k, 1.6);
  rec.ratio = rec.ratios["diffset_vs_k85"];
  rec.pass = true;
  return rec;
}

}  // namespace dcdlab

#endif  // DCDLAB_ENERGY_HPP
