#ifndef HLC_ORACLE_HPP
#define HLC_ORACLE_HPP

#include <cstdint>
#include <optional>

#include "hlc/solve.hpp"
#include "hlc/types.hpp"

namespace hlc {

constexpr std::uint64_t kDefaultBruteBudget = 100'000'000;

// Exhaustive backtracking over vertices in ascending order, colors ascending,
// pruning as soon as a fully colored edge goes monochromatic. Returns the
// lexicographically first proper coloring, or Uncolorable. Throws
// BudgetExceeded when prod |L(v)| is above the leaf budget.
SolveResult solve_brute(const Instance& inst, std::uint64_t budget = kDefaultBruteBudget);

// Number of proper complete list colorings, same budget rule.
std::uint64_t count_proper(const Instance& inst, std::uint64_t budget = kDefaultBruteBudget);

} // namespace hlc

#endif
