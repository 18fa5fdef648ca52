#ifndef DCDLAB_RUNNERS_HPP
#define DCDLAB_RUNNERS_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "dcdlab/calibrate.hpp"
#include "dcdlab/config.hpp"
#include "dcdlab/constructions.hpp"
#include "dcdlab/energy.hpp"
#include "dcdlab/errors.hpp"
#include "dcdlab/ground_set.hpp"
#include "dcdlab/proofscope.hpp"
#include "dcdlab/record.hpp"
#include "dcdlab/seeded.hpp"

namespace dcdlab {

/// "7", "5,10,20", or "3..13" -> explicit size list.
inline std::vector<std::int64_t> parse_sizes(const std::string& text) {
  if (text.empty()) throw UsageError("empty size list");
  std::vector<std::int64_t> out;
  auto parse_int = [](const std::string& tok) {
    try {
      std::size_t used = 0;
      std::int64_t v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      return v;
    } catch (const std::exception&) {
      throw UsageError("bad size token '" + tok + "'");
    }
  };
  auto range_pos = text.find("..");
  if (range_pos != std::string::npos) {
    std::int64_t lo = parse_int(text.substr(0, range_pos));
    std::int64_t hi = parse_int(text.substr(range_pos + 2));
    if (hi < lo) throw UsageError("descending range in '" + text + "'");
    for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string tok = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                    : comma - start);
    if (!tok.empty()) out.push_back(parse_int(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw UsageError("empty size list");
  return out;
}

struct SweepOptions {
  std::vector<std::int64_t> sizes;
  std::string family = "squares";
  std::uint64_t seed = kDefaultSeed;
  std::int64_t trials = 0;
  std::int64_t max_k = 0;
  int alpha = 2;
  int order = 3;
  std::int64_t good_constant = 100;
  Rational growth_c2 = kGrowthC2;
  Rational pair_c2 = kPairGrowthC2;
  Rational image_c2 = kConvexImageC2;
  Limits limits;
};

/// Named single-set families reachable from the CLI.
inline GroundSet build_family_set(const std::string& family, std::int64_t k,
                                  const SweepOptions& opt) {
  if (family == "squares") return convex_family(ConvexKind::squares, k);
  if (family == "power") return convex_family(ConvexKind::power, k, opt.alpha);
  if (family == "random-gaps") return convex_family(ConvexKind::random_gaps, k, opt.alpha, opt.seed);
  if (family == "interval") return interval_set(k);
  if (family == "e3x") return e3_counterexample(k);
  if (family == "sidon-greedy") return sidon_greedy(k);
  if (family == "sidon-modular") return sidon_modular(k);
  if (family == "random") {
    Rng rng(opt.seed + static_cast<std::uint64_t>(k));
    return random_set(rng, k, -1000000, 1000000);
  }
  if (family == "random-dcd") {
    Rng rng(opt.seed + static_cast<std::uint64_t>(k));
    return random_dcd_set(rng, k, 3 * k);
  }
  throw UsageError("unknown family '" + family + "'");
}

namespace detail {

inline Record pigeonhole_record(const GroundSet& a, const GroundSet& b,
                                std::int64_t good_constant, std::uint64_t seed) {
  IntervalTable table = build_interval_table(a, b, good_constant);
  TableAudit audit = audit_interval_table(table);
  Record rec;
  rec.check = "pigeonhole";
  rec.family = "random";
  rec.k = a.size();
  rec.params["abs_b"] = b.size();
  rec.params["seed"] = seed;
  rec.params["good_constant"] = good_constant;
  rec.measured = audit.runs.good_rows;
  rec.bound = static_cast<double>(audit.runs.cap);
  rec.ratio = audit.runs.cap > 0
                  ? static_cast<double>(audit.runs.distinct) / static_cast<double>(audit.runs.cap)
                  : 0.0;
  rec.quantities["distinct_runs"] = audit.runs.distinct;
  rec.quantities["collisions"] = audit.runs.collisions;  // measured, never asserted
  rec.quantities["run_cap"] = audit.runs.cap;
  rec.quantities["sumset"] = table.s.size();
  rec.pass = audit.ok();
  return rec;
}

inline Record dyadic_record(const GroundSet& a, const std::string& family) {
  DyadicBand band = dyadic_popular_set(a);
  PopularityGraph graph = popularity_graph(a, band.delta, band.popular);
  RepFn rep = RepFn::of(a, a);
  std::int64_t band_mass = 0;
  for (std::int64_t x : band.popular.elements()) band_mass += rep.at(x);

  const std::int64_t k = a.size();
  std::int64_t lg = 0;
  while ((std::int64_t{1} << (lg + 1)) <= k) ++lg;  // floor(log2 k)
  Record rec;
  rec.check = "dyadic";
  rec.family = family;
  rec.k = k;
  rec.measured = band.delta * band.popular.size();
  rec.bound = static_cast<double>(k * k) / static_cast<double>(2 * (lg + 1));
  rec.ratio = static_cast<double>(rec.measured) / (static_cast<double>(k) * k);
  rec.quantities["delta"] = band.delta;
  rec.quantities["abs_p"] = band.popular.size();
  rec.quantities["abs_g"] = static_cast<std::int64_t>(graph.edges.size());
  rec.quantities["band_mass"] = band_mass;
  bool mass_ok = band.delta * band.popular.size() * 2 * (lg + 1) >= k * k;
  bool graph_ok = band_mass == static_cast<std::int64_t>(graph.edges.size());
  rec.pass = mass_ok && graph_ok;
  return rec;
}

}  // namespace detail

/// Assertion-level sweeps; every record carries a pass flag and the CLI
/// exit status reflects their conjunction.
inline std::vector<Record> run_verify(const std::string& target, const SweepOptions& opt) {
  std::vector<Record> out;
  if (target == "tightness") {
    std::vector<std::int64_t> sizes = opt.sizes.empty()
                                          ? std::vector<std::int64_t>{3, 5, 7, 9, 11, 13}
                                          : opt.sizes;
    for (std::int64_t m : sizes) out.push_back(check_tightness(m));
    return out;
  }
  if (target == "dcd-growth") {
    if (opt.family == "dcd") {
      std::vector<std::int64_t> sizes =
          opt.sizes.empty() ? std::vector<std::int64_t>{3, 5, 7, 9, 11, 13} : opt.sizes;
      for (std::int64_t m : sizes) {
        DcdInstance inst = dcd_construction(m);
        Record rec = check_dcd_growth(inst.a, inst.b, opt.growth_c2, "dcd");
        rec.params["m"] = m;
        out.push_back(rec);
      }
      return out;
    }
    if (opt.family == "random") {
      std::int64_t trials = opt.trials > 0 ? opt.trials : 200;
      std::int64_t max_k = opt.max_k > 0 ? opt.max_k : 200;
      for (std::int64_t t = 0; t < trials; ++t) {
        GrowthInstance inst =
            seeded_growth_instance(opt.seed + 1000 + static_cast<std::uint64_t>(t), max_k, max_k);
        Record rec = check_dcd_growth(inst.a, inst.b, opt.growth_c2, "random");
        rec.params["seed"] = opt.seed + 1000 + static_cast<std::uint64_t>(t);
        out.push_back(rec);
      }
      return out;
    }
    throw UsageError("dcd-growth verifies family 'dcd' or 'random'");
  }
  if (target == "pair-growth") {
    std::int64_t trials = opt.trials > 0 ? opt.trials : 50;
    std::int64_t max_k = opt.max_k > 0 ? opt.max_k : 60;
    for (std::int64_t t = 0; t < trials; ++t) {
      Rng rng(opt.seed + 3000 + static_cast<std::uint64_t>(t));
      std::int64_t k = rng.range(3, max_k);
      GroundSet a = random_set(rng, k, 1, 100000);
      GroundSet a2 = apply_poly(a, IntPoly::square());
      GroundSet b = random_set(rng, k, 0, 200000);
      GroundSet b2 = random_set(rng, k, 0, 200000);
      Record rec = check_pair_growth(a, a2, b, b2, opt.pair_c2, "square-image");
      rec.params["seed"] = opt.seed + 3000 + static_cast<std::uint64_t>(t);
      out.push_back(rec);
    }
    return out;
  }
  if (target == "convex-image") {
    std::vector<std::int64_t> sizes =
        opt.sizes.empty() ? std::vector<std::int64_t>{8, 16, 32, 64} : opt.sizes;
    for (std::int64_t k : sizes) {
      GroundSet a = build_family_set(opt.family, k, opt);
      IntPoly f = IntPoly::square();
      // B = F(A), C = A reproduces the |A + F(A)| specialization.
      GroundSet image = apply_poly(dilate_translate(a, 1, a.min() >= 1 ? 0 : 1 - a.min()), f);
      Record rec = check_convex_image_growth(a, image, a, f, opt.image_c2, opt.family);
      out.push_back(rec);
    }
    return out;
  }
  if (target == "prop-conv") {
    std::vector<std::int64_t> sizes =
        opt.sizes.empty() ? std::vector<std::int64_t>{5, 10, 20, 40, 80} : opt.sizes;
    for (std::int64_t k : sizes) {
      GroundSet a = build_family_set(opt.family, k, opt);
      out.push_back(check_convex_triple(a, opt.limits.convex_triple_max_k, opt.family));
    }
    return out;
  }
  if (target == "energy-identity") {
    std::int64_t trials = opt.trials > 0 ? opt.trials : 100;
    std::int64_t max_k = opt.max_k > 0 ? opt.max_k : 40;
    for (std::int64_t t = 0; t < trials; ++t) {
      std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(t);
      GroundSet a = seeded_random_set(seed, max_k);
      auto [lhs, rhs] = energy_pair_identity(a);
      Record rec;
      rec.check = "energy-identity";
      rec.family = "random";
      rec.k = a.size();
      rec.params["seed"] = seed;
      rec.measured = lhs;
      rec.bound = static_cast<double>(rhs);
      rec.ratio = rhs != 0 ? static_cast<double>(lhs) / static_cast<double>(rhs) : 0.0;
      rec.quantities["planar_route"] = lhs;
      rec.quantities["repfn_route"] = rhs;
      rec.pass = lhs == rhs;
      out.push_back(rec);
    }
    return out;
  }
  if (target == "pigeonhole") {
    std::int64_t trials = opt.trials > 0 ? opt.trials : 50;
    std::int64_t max_k = opt.max_k > 0 ? opt.max_k : 100;
    for (std::int64_t t = 0; t < trials; ++t) {
      std::uint64_t seed = opt.seed + 100 + static_cast<std::uint64_t>(t);
      GrowthInstance inst = seeded_growth_instance(seed, max_k, 100);
      out.push_back(detail::pigeonhole_record(inst.a, inst.b, opt.good_constant, seed));
    }
    return out;
  }
  if (target == "dyadic") {
    std::vector<std::int64_t> sizes =
        opt.sizes.empty() ? std::vector<std::int64_t>{32, 64, 128, 256} : opt.sizes;
    for (std::int64_t k : sizes)
      out.push_back(detail::dyadic_record(build_family_set(opt.family, k, opt), opt.family));
    return out;
  }
  throw UsageError("unknown verify target '" + target + "'");
}

/// Measurement sweeps; reporting only, records always pass.
inline std::vector<Record> run_measure(const std::string& target, const SweepOptions& opt) {
  std::vector<Record> out;
  std::vector<std::int64_t> sizes =
      opt.sizes.empty() ? std::vector<std::int64_t>{16, 32, 64, 128} : opt.sizes;
  if (target == "growth") {
    for (std::int64_t k : sizes) {
      GroundSet a = build_family_set(opt.family, k, opt);
      GroundSet apa = sumset(a, a);
      GroundSet ama = difference_set(a, a);
      Record rec;
      rec.check = "growth";
      rec.family = opt.family;
      rec.k = a.size();
      rec.measured = apa.size();
      rec.bound = std::pow(static_cast<double>(a.size()), 1.5);
      rec.ratio = static_cast<double>(apa.size()) / rec.bound;
      rec.quantities["sumset"] = apa.size();
      rec.quantities["diffset"] = ama.size();
      rec.ratios["sumset_vs_k15"] = rec.ratio;
      rec.ratios["diffset_vs_k85"] =
          static_cast<double>(ama.size()) / std::pow(static_cast<double>(a.size()), 1.6);
      out.push_back(rec);
    }
    return out;
  }
  if (target == "energy") {
    for (std::int64_t k : sizes) {
      GroundSet a = build_family_set(opt.family, k, opt);
      std::int64_t e = energy(a, a, opt.order);
      Record rec;
      rec.check = "energy";
      rec.family = opt.family;
      rec.k = a.size();
      rec.params["order"] = opt.order;
      rec.measured = e;
      rec.bound = std::pow(static_cast<double>(a.size()), opt.order);
      rec.ratio = static_cast<double>(e) / rec.bound;
      rec.quantities["energy"] = e;
      out.push_back(rec);
    }
    return out;
  }
  if (target == "richness") {
    for (std::int64_t k : sizes) {
      GroundSet a = build_family_set(opt.family, k, opt);
      Rational delta = difference_richness(a);
      Record rec;
      rec.check = "richness";
      rec.family = opt.family;
      rec.k = a.size();
      rec.measured = delta.num;
      rec.bound = static_cast<double>(delta.den);
      rec.ratio = delta.to_double();
      rec.quantities["distinct_gaps_num"] = delta.num;
      rec.quantities["distinct_gaps_den"] = delta.den;
      out.push_back(rec);
    }
    return out;
  }
  if (target == "pipeline") {
    for (std::int64_t k : sizes)
      out.push_back(
          energy_pipeline_report(build_family_set(opt.family, k, opt), opt.family,
                                 opt.limits.budget));
    return out;
  }
  throw UsageError("unknown measure target '" + target + "'");
}

}  // namespace dcdlab

#endif  // DCDLAB_RUNNERS_HPP
