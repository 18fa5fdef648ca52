#ifndef DCDLAB_ERRORS_HPP
#define DCDLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dcdlab {

// Error taxonomy for the whole library. The CLI maps codes onto exit
// status: usage/config problems exit 2, resource limits exit 3, failed
// verification assertions exit 1.
enum class errc {
  duplicate_element,
  overflow,
  too_small,
  size_mismatch,
  not_prime,
  not_sidon,
  not_dcd,
  not_distinct_pairs,
  not_convex,
  not_convex_function,
  not_divisible,
  resource_limit,
  budget_exceeded,
  infeasible,
  degenerate,
  io_error,
  usage,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

template <errc Code>
class ErrorOf : public Error {
 public:
  explicit ErrorOf(const std::string& what) : Error(Code, what) {}
};

using DuplicateElement = ErrorOf<errc::duplicate_element>;
using Overflow = ErrorOf<errc::overflow>;
using TooSmall = ErrorOf<errc::too_small>;
using SizeMismatch = ErrorOf<errc::size_mismatch>;
using NotPrime = ErrorOf<errc::not_prime>;
using NotSidon = ErrorOf<errc::not_sidon>;
using NotDcd = ErrorOf<errc::not_dcd>;
using NotDistinctPairs = ErrorOf<errc::not_distinct_pairs>;
using NotConvex = ErrorOf<errc::not_convex>;
using NotConvexFunction = ErrorOf<errc::not_convex_function>;
using NotDivisible = ErrorOf<errc::not_divisible>;
using ResourceLimit = ErrorOf<errc::resource_limit>;
using BudgetExceeded = ErrorOf<errc::budget_exceeded>;
using Infeasible = ErrorOf<errc::infeasible>;
using Degenerate = ErrorOf<errc::degenerate>;
using IoError = ErrorOf<errc::io_error>;
using UsageError = ErrorOf<errc::usage>;

}  // namespace dcdlab

#endif  // DCDLAB_ERRORS_HPP
