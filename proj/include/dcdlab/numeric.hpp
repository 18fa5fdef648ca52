#ifndef DCDLAB_NUMERIC_HPP
#define DCDLAB_NUMERIC_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "dcdlab/errors.hpp"

namespace dcdlab {

// Elements are capped at |x| <= 2^62 so pairwise sums and differences of
// any two valid sets stay inside exact signed 64-bit range.
inline constexpr std::int64_t kElementLimit = std::int64_t{1} << 62;

using int128 = __int128;

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Overflow("addition overflows 64-bit range");
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw Overflow("subtraction overflows 64-bit range");
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Overflow("multiplication overflows 64-bit range");
  return out;
}

inline std::int64_t checked_pow(std::int64_t base, int exp) {
  if (exp < 0) throw UsageError("checked_pow: negative exponent");
  std::int64_t out = 1;
  for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

// Exact rational with positive denominator. Used for thresholds and the
// few exact ratios records carry; all comparisons cross-multiply in
// 128-bit so nothing is rounded.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Degenerate("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    return Rational{num, den};
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational&, const Rational&) = default;
};

inline unsigned __int128 pack_pair(std::int64_t u, std::int64_t v) {
  return (static_cast<unsigned __int128>(static_cast<std::uint64_t>(u)) << 64) |
         static_cast<std::uint64_t>(v);
}

struct PairKeyHash {
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }
  std::size_t operator()(unsigned __int128 v) const {
    return mix(static_cast<std::uint64_t>(v)) ^
           (mix(static_cast<std::uint64_t>(v >> 64)) * 0x9e3779b97f4a7c15ULL);
  }
};

// -1, 0, +1 as x <, ==, > y.
inline int compare(const Rational& x, const Rational& y) {
  int128 lhs = int128{x.num} * y.den;
  int128 rhs = int128{y.num} * x.den;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

// Parses "12", "0.5", "-3.25" into an exact rational. No exponent form.
inline Rational parse_decimal_rational(std::string_view text) {
  if (text.empty()) throw UsageError("empty rational literal");
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    pos = 1;
  }
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool seen_digit = false;
  bool in_fraction = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '.') {
      if (in_fraction) throw UsageError("malformed rational literal: " + std::string(text));
      in_fraction = true;
      continue;
    }
    if (c < '0' || c > '9') throw UsageError("malformed rational literal: " + std::string(text));
    seen_digit = true;
    num = checked_add(checked_mul(num, 10), c - '0');
    if (in_fraction) den = checked_mul(den, 10);
  }
  if (!seen_digit) throw UsageError("malformed rational literal: " + std::string(text));
  return Rational::of(negative ? -num : num, den);
}

}  // namespace dcdlab

#endif  // DCDLAB_NUMERIC_HPP
