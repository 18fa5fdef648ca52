#ifndef DCDLAB_PROOFSCOPE_HPP
#define DCDLAB_PROOFSCOPE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "dcdlab/constructions.hpp"
#include "dcdlab/errors.hpp"
#include "dcdlab/ground_set.hpp"
#include "dcdlab/numeric.hpp"
#include "dcdlab/record.hpp"

namespace dcdlab {

// ---------------------------------------------------------------------------
// Interval instrumentation for the translate-window argument: for each
// b in B and 1 <= i <= k-1 the window (a_i + b, a_{i+1} + b] is cut out
// of S = A + B. Windows with few S-elements are "good"; because A has
// distinct consecutive differences a good window determines (b, i).
// ---------------------------------------------------------------------------

struct IntervalRow {
  std::int64_t b = 0;
  std::int64_t i = 0;  // 1-based gap index
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::int64_t run_start = 0;  // index into S of the first element > lo
  std::int64_t size = 0;       // |(lo, hi] cap S|, always >= 1
  bool good = false;
};

struct IntervalTable {
  std::vector<IntervalRow> rows;  // ordered by (b, i)
  GroundSet s;                    // A + B
  std::int64_t k = 0;
  std::int64_t good_constant = 100;
};

/// Rows are good when size * k <= good_constant * |S| (exact comparison,
/// no division).
inline IntervalTable build_interval_table(const GroundSet& a, const GroundSet& b,
                                          std::int64_t good_constant = 100) {
  if (a.size() < 2) throw TooSmall("interval table needs |A| >= 2");
  if (good_constant < 1) throw UsageError("good constant must be positive");
  if (!has_distinct_consecutive_differences(a))
    throw NotDcd("interval table needs distinct consecutive differences");
  IntervalTable table{{}, sumset(a, b), a.size(), good_constant};
  const GroundSet& s = table.s;
  const std::int64_t s_size = s.size();
  table.rows.reserve(static_cast<std::size_t>(b.size()) *
                     static_cast<std::size_t>(a.size() - 1));
  for (std::int64_t bv : b.elements()) {
    for (std::int64_t i = 0; i + 1 < a.size(); ++i) {
      IntervalRow row;
      row.b = bv;
      row.i = i + 1;
      row.lo = a[i] + bv;
      row.hi = a[i + 1] + bv;
      row.run_start = s.first_above(row.lo);
      row.size = s.first_above(row.hi) - row.run_start;
      row.good = int128{row.size} * table.k <= int128{good_constant} * s_size;
      table.rows.push_back(row);
    }
  }
  return table;
}

struct RunStats {
  std::int64_t good_rows = 0;
  std::int64_t distinct = 0;    // distinct (start, length) runs among good rows
  std::int64_t collisions = 0;  // good_rows - distinct
  std::int64_t cap = 0;         // |S| * ceil(G |S| / k), the run-counting ceiling
};

/// Identifies each good row's window with its run of consecutive
/// S-elements. Distinct windows can in principle cut identical runs, so
/// collisions are measured and reported rather than assumed away.
inline RunStats count_distinct_good_runs(const IntervalTable& table) {
  RunStats stats;
  std::unordered_set<unsigned __int128, PairKeyHash> runs;
  for (const IntervalRow& row : table.rows) {
    if (!row.good) continue;
    ++stats.good_rows;
    runs.insert((static_cast<unsigned __int128>(static_cast<std::uint64_t>(row.run_start)) << 64) |
                static_cast<std::uint64_t>(row.size));
  }
  stats.distinct = static_cast<std::int64_t>(runs.size());
  stats.collisions = stats.good_rows - stats.distinct;
  const std::int64_t s_size = table.s.size();
  std::int64_t max_len =
      (table.good_constant * s_size + table.k - 1) / table.k;  // ceil(G|S|/k)
  stats.cap = checked_mul(s_size, max_len);
  return stats;
}

/// Exact structural facts the window argument rests on, audited row by
/// row: every window holds a_{i+1}+b so has size >= 1; windows with the
/// same b are disjoint and their sizes sum to at most |S|; the pigeonhole
/// count #good >= (k-1) - k/G holds per b; and the number of distinct
/// good runs never exceeds the run-counting ceiling.
struct TableAudit {
  bool nonempty_windows = true;
  bool disjoint = true;
  bool row_sums = true;
  bool good_counts = true;
  bool run_cap = true;
  RunStats runs;

  bool ok() const { return nonempty_windows && disjoint && row_sums && good_counts && run_cap; }
};

inline TableAudit audit_interval_table(const IntervalTable& table) {
  TableAudit audit;
  const std::int64_t k = table.k;
  const std::int64_t s_size = table.s.size();
  const std::int64_t g = table.good_constant;

  std::int64_t row_sum = 0, good = 0, prev_end = -1;
  bool have_b = false;
  std::int64_t cur_b = 0;
  auto flush = [&]() {
    if (row_sum > s_size) audit.row_sums = false;
    // #good >= (k-1) - k/G, cross-multiplied by G.
    if (good * g < (k - 1) * g - k) audit.good_counts = false;
    row_sum = 0;
    good = 0;
    prev_end = -1;
  };
  for (const IntervalRow& row : table.rows) {
    if (!have_b || row.b != cur_b) {
      if (have_b) flush();
      cur_b = row.b;
      have_b = true;
    }
    if (row.size < 1) audit.nonempty_windows = false;
    if (row.run_start < prev_end) audit.disjoint = false;
    prev_end = row.run_start + row.size;
    row_sum += row.size;
    if (row.good) ++good;
  }
  if (have_b) flush();

  audit.runs = count_distinct_good_runs(table);
  audit.run_cap = audit.runs.distinct <= audit.runs.cap;
  return audit;
}

// ---------------------------------------------------------------------------
// Checkers. Thresholds arrive as exact squared rationals (c2 = c^2), so
// every square-root bound is compared by squaring, never by rounding.
// ---------------------------------------------------------------------------

/// |A+B| >= c * |A| * sqrt(|B|) for A with distinct consecutive
/// differences.
inline Record check_dcd_growth(const GroundSet& a, const GroundSet& b, Rational c2,
                               const std::string& family = "custom") {
  if (!has_distinct_consecutive_differences(a))
    throw NotDcd("growth check needs distinct consecutive differences");
  const std::int64_t k = a.size();
  const std::int64_t r = sumset(a, b).size();
  Record rec;
  rec.check = "dcd-growth";
  rec.family = family;
  rec.k = k;
  rec.params["abs_b"] = b.size();
  rec.params["c2"] = {c2.num, c2.den};
  rec.measured = r;
  rec.bound = std::sqrt(c2.to_double() * static_cast<double>(k) * static_cast<double>(k) *
                        static_cast<double>(b.size()));
  rec.ratio = static_cast<double>(r) /
              (static_cast<double>(k) * std::sqrt(static_cast<double>(b.size())));
  rec.quantities["sumset"] = r;
  rec.quantities["abs_b"] = b.size();
  // r^2 >= c^2 k^2 |B|, cross-multiplied.
  rec.pass = int128{r} * r * c2.den >= int128{c2.num} * k * k * b.size();
  return rec;
}

/// |A+B| * |A2+B2| >= c * (k^3 |B| |B2|)^(1/2) for sets with distinct
/// pairs of consecutive differences.
inline Record check_pair_growth(const GroundSet& a, const GroundSet& a2, const GroundSet& b,
                                const GroundSet& b2, Rational c2,
                                const std::string& family = "custom") {
  if (a.size() != a2.size()) throw SizeMismatch("paired sets must have equal size");
  if (!has_distinct_pairs(a, a2))
    throw NotDistinctPairs("pair growth check needs distinct pairs of consecutive differences");
  const std::int64_t k = a.size();
  const std::int64_t r1 = sumset(a, b).size();
  const std::int64_t r2 = sumset(a2, b2).size();
  Record rec;
  rec.check = "pair-growth";
  rec.family = family;
  rec.k = k;
  rec.params["abs_b"] = b.size();
  rec.params["abs_b2"] = b2.size();
  rec.params["c2"] = {c2.num, c2.den};
  rec.measured = checked_mul(r1, r2);
  double base = static_cast<double>(k) * static_cast<double>(k) * static_cast<double>(k) *
                static_cast<double>(b.size()) * static_cast<double>(b2.size());
  rec.bound = std::sqrt(c2.to_double() * base);
  rec.ratio = static_cast<double>(rec.measured) / std::sqrt(base);
  rec.quantities["sumset_a"] = r1;
  rec.quantities["sumset_a2"] = r2;
  // (r1 r2)^2 >= c^2 k^3 |B||B2|.
  rec.pass = int128{rec.measured} * rec.measured * c2.den >=
             int128{c2.num} * k * k * k * b.size() * b2.size();
  return rec;
}

/// Integer polynomial c_0 + c_1 x + ... with positive leading coefficient
/// and degree >= 2; the strictly convex maps the image-growth check
/// accepts.
struct IntPoly {
  std::vector<std::int64_t> coeffs;  // ascending degree

  static IntPoly square() { return IntPoly{{0, 0, 1}}; }

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  std::int64_t eval(std::int64_t x) const {
    std::int64_t acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;)
      acc = checked_add(checked_mul(acc, x), coeffs[i]);
    return acc;
  }

  IntPoly derivative() const {
    IntPoly out;
    for (std::size_t i = 1; i < coeffs.size(); ++i)
      out.coeffs.push_back(checked_mul(coeffs[i], static_cast<std::int64_t>(i)));
    return out;
  }
};

inline void require_convex_poly(const IntPoly& f) {
  if (f.degree() < 2 || f.coeffs.back() <= 0)
    throw NotConvexFunction("need an integer polynomial of degree >= 2 with positive leading coefficient");
}

/// Smallest integer x0 with every real root of F' and F'' strictly below
/// it; F is strictly increasing and strictly convex on [x0, inf). Cauchy
/// root bound on both derivatives.
inline std::int64_t convex_branch_start(const IntPoly& f) {
  require_convex_poly(f);
  auto cauchy = [](const IntPoly& p) -> std::int64_t {
    std::int64_t lead = p.coeffs.back();
    std::int64_t worst = 0;
    for (std::size_t i = 0; i + 1 < p.coeffs.size(); ++i) {
      std::int64_t c = p.coeffs[i] < 0 ? -p.coeffs[i] : p.coeffs[i];
      worst = std::max(worst, (c + lead - 1) / lead);  // ceil(|c| / lead)
    }
    return 1 + worst;
  };
  IntPoly d1 = f.derivative();
  IntPoly d2 = d1.derivative();
  return std::max(cauchy(d1), cauchy(d2));
}

/// Applies F elementwise; requires the image to be strictly increasing
/// (construction surfaces any violation).
inline GroundSet apply_poly(const GroundSet& a, const IntPoly& f) {
  std::vector<std::int64_t> vals;
  vals.reserve(static_cast<std::size_t>(a.size()));
  for (std::int64_t x : a.elements()) vals.push_back(f.eval(x));
  return GroundSet::from_sorted(std::move(vals));
}

/// max{|A+B|, |F(A)+C|} >= c * k^(5/4) for strictly convex F. A is
/// translated into F's increasing branch when needed (|A+B| is
/// translation invariant, so only the F-image side changes).
inline Record check_convex_image_growth(const GroundSet& a_in, const GroundSet& b,
                                        const GroundSet& c, const IntPoly& f, Rational c2,
                                        const std::string& family = "custom") {
  require_convex_poly(f);
  if (a_in.size() != b.size() || a_in.size() != c.size())
    throw SizeMismatch("image growth check needs |A| = |B| = |C|");
  const std::int64_t k = a_in.size();

  std::int64_t branch = convex_branch_start(f);
  std::int64_t shift = a_in.min() >= branch ? 0 : branch - a_in.min();
  GroundSet a = shift == 0 ? a_in : dilate_translate(a_in, 1, shift);
  GroundSet image = apply_poly(a, f);
  if (!has_distinct_pairs(a, image))
    throw NotDistinctPairs("convex image lost pair distinctness");

  const std::int64_t r1 = sumset(a, b).size();
  const std::int64_t r2 = sumset(image, c).size();
  const std::int64_t measured = std::max(r1, r2);

  Record rec;
  rec.check = "convex-image-growth";
  rec.family = family;
  rec.k = k;
  rec.params["shift"] = shift;
  rec.params["c2"] = {c2.num, c2.den};
  rec.measured = measured;
  rec.bound = std::sqrt(c2.to_double()) * std::pow(static_cast<double>(k), 1.25);
  rec.ratio = static_cast<double>(measured) / std::pow(static_cast<double>(k), 1.25);
  rec.quantities["sumset_ab"] = r1;
  rec.quantities["sumset_fc"] = r2;
  rec.quantities["pairs_distinct"] = 1;
  // measured^4 >= c^4 k^5, cross-multiplied with c2 = c^2.
  rec.pass = int128{measured} * measured * measured * measured * c2.den * c2.den >=
             int128{c2.num} * c2.num * k * k * k * k * k;
  return rec;
}

/// Exact consequence of convexity: |A + A - A| >= k(k-1)/2, because the
/// j elements a_j + a_{i+1} - a_i (i <= j) land in (a_j, a_{j+1}].
/// Also measures |A-A| |A+A| / |A|^3 without asserting it.
inline Record check_convex_triple(const GroundSet& a, std::int64_t max_k = 300,
                                  const std::string& family = "custom") {
  if (!is_convex(a)) throw NotConvex("triple bound needs a convex set");
  if (a.size() > max_k)
    throw ResourceLimit("convex triple bound: k exceeds configured limit " +
                        std::to_string(max_k));
  const std::int64_t k = a.size();
  GroundSet apa = sumset(a, a);
  GroundSet triple = difference_set(apa, a);
  GroundSet ama = difference_set(a, a);

  Record rec;
  rec.check = "convex-triple";
  rec.family = family;
  rec.k = k;
  rec.measured = triple.size();
  rec.bound = static_cast<double>(k * (k - 1) / 2);
  rec.ratio = rec.bound > 0 ? static_cast<double>(triple.size()) / rec.bound : 1.0;
  rec.quantities["triple"] = triple.size();
  rec.quantities["sumset"] = apa.size();
  rec.quantities["diffset"] = ama.size();
  rec.ratios["product_vs_k3"] = static_cast<double>(ama.size()) *
                                static_cast<double>(apa.size()) /
                                (static_cast<double>(k) * static_cast<double>(k) *
                                 static_cast<double>(k));
  rec.pass = triple.size() >= k * (k - 1) / 2;
  return rec;
}

/// Builds the paired construction and confirms it is extremal: gaps all
/// distinct, |A+B| <= 2 k m, and |A+B| / k^(3/2) <= 3 (squared-exact).
inline Record check_tightness(std::int64_t m, SidonMethod method = SidonMethod::greedy) {
  DcdInstance inst = dcd_construction(m, method);
  const std::int64_t k = inst.a.size();
  const std::int64_t r = sumset(inst.a, inst.b).size();
  Record rec;
  rec.check = "tightness";
  rec.family = "dcd";
  rec.k = k;
  rec.params["m"] = m;
  rec.params["q"] = inst.q;
  rec.measured = r;
  rec.bound = static_cast<double>(2 * k * m);
  rec.ratio = static_cast<double>(r) / std::pow(static_cast<double>(k), 1.5);
  rec.quantities["sumset"] = r;
  rec.quantities["abs_s"] = inst.s.size();
  bool dcd_ok = has_distinct_consecutive_differences(inst.a);
  bool size_ok = r <= 2 * k * m;
  bool ratio_ok = int128{r} * r <= int128{9} * k * k * k;
  rec.quantities["dcd_ok"] = dcd_ok ? 1 : 0;
  rec.pass = dcd_ok && size_ok && ratio_ok;
  return rec;
}

// ---------------------------------------------------------------------------
// Two-dimensional boxes for the paired-differences argument.
// ---------------------------------------------------------------------------

struct BoxRow {
  std::int64_t b = 0;
  std::int64_t b2 = 0;
  std::int64_t i = 0;
  std::int64_t size1 = 0;  // |pi_1(J)| against S = A + B
  std::int64_t size2 = 0;  // |pi_2(J)| against S2 = A2 + B2
  bool good = false;
};

struct BoxTable {
  std::vector<BoxRow> rows;  // ordered by (b, b2, i)
  GroundSet s;
  GroundSet s2;
  std::int64_t k = 0;
  std::int64_t good_constant = 100;
};

/// Per fixed (b, b'): both projection sums bounded by the sumset sizes,
/// and #good >= (k-1) - 2k/G by a union of two pigeonholes.
struct BoxAudit {
  bool projection_sums = true;
  bool good_counts = true;

  bool ok() const { return projection_sums && good_counts; }
};

inline BoxTable build_box_table(const GroundSet& a, const GroundSet& a2, const GroundSet& b,
                                const GroundSet& b2, std::int64_t good_constant = 100) {
  if (a.size() != a2.size()) throw SizeMismatch("paired sets must have equal size");
  if (a.size() < 2) throw TooSmall("box table needs |A| >= 2");
  if (!has_distinct_pairs(a, a2))
    throw NotDistinctPairs("box table needs distinct pairs of consecutive differences");
  BoxTable table{{}, sumset(a, b), sumset(a2, b2), a.size(), good_constant};
  const std::int64_t s_size = table.s.size();
  const std::int64_t s2_size = table.s2.size();
  for (std::int64_t bv : b.elements()) {
    for (std::int64_t bv2 : b2.elements()) {
      for (std::int64_t i = 0; i + 1 < a.size(); ++i) {
        BoxRow row;
        row.b = bv;
        row.b2 = bv2;
        row.i = i + 1;
        row.size1 = table.s.first_above(a[i + 1] + bv) - table.s.first_above(a[i] + bv);
        row.size2 = table.s2.first_above(a2[i + 1] + bv2) - table.s2.first_above(a2[i] + bv2);
        row.good = int128{row.size1} * table.k <= int128{good_constant} * s_size &&
                   int128{row.size2} * table.k <= int128{good_constant} * s2_size;
        table.rows.push_back(row);
      }
    }
  }
  return table;
}

inline BoxAudit audit_box_table(const BoxTable& table) {
  BoxAudit audit;
  const std::int64_t k = table.k;
  const std::int64_t g = table.good_constant;
  std::int64_t sum1 = 0, sum2 = 0, good = 0;
  bool have_key = false;
  std::pair<std::int64_t, std::int64_t> cur_key{};
  auto flush = [&]() {
    if (sum1 > table.s.size() || sum2 > table.s2.size()) audit.projection_sums = false;
    if (good * g < (k - 1) * g - 2 * k) audit.good_counts = false;
    sum1 = sum2 = good = 0;
  };
  for (const BoxRow& row : table.rows) {
    std::pair<std::int64_t, std::int64_t> key{row.b, row.b2};
    if (!have_key || key != cur_key) {
      if (have_key) flush();
      cur_key = key;
      have_key = true;
    }
    sum1 += row.size1;
    sum2 += row.size2;
    if (row.good) ++good;
  }
  if (have_key) flush();
  return audit;
}

}  // namespace dcdlab

#endif  // DCDLAB_PROOFSCOPE_HPP
