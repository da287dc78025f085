#pragma once

#include <cstddef>
#include <string>

namespace hcohom {

inline constexpr std::size_t kDefaultSizeBudget = 200000;
inline constexpr std::size_t kDefaultMaxDegree = 3;

/// Budget from HCOHOM_SIZE_BUDGET if set to a positive integer, else the default.
std::size_t default_size_budget();

struct Limits {
    std::size_t size_budget = kDefaultSizeBudget;
};

/// base^exp * factor, saturating at SIZE_MAX.
std::size_t saturating_power(std::size_t base, std::size_t exp, std::size_t factor = 1);

/// SizeBudgetError if dim exceeds the budget.
void check_budget(std::size_t dim, const Limits& limits, const std::string& what);

}  // namespace hcohom
