#include "hcohom/limits.hpp"

#include <cstdlib>
#include <limits>

#include "hcohom/errors.hpp"

namespace hcohom {

std::size_t default_size_budget() {
    const char* env = std::getenv("HCOHOM_SIZE_BUDGET");
    if (!env || !*env) return kDefaultSizeBudget;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) return kDefaultSizeBudget;
    return static_cast<std::size_t>(v);
}

std::size_t saturating_power(std::size_t base, std::size_t exp, std::size_t factor) {
    constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
    std::size_t out = factor;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && out > kMax / base) return kMax;
        out *= base;
    }
    return out;
}

void check_budget(std::size_t dim, const Limits& limits, const std::string& what) {
    if (dim > limits.size_budget)
        throw SizeBudgetError(what + " has dimension " + std::to_string(dim) + ", above the size budget of " +
                                  std::to_string(limits.size_budget) + " coordinates",
                              dim, limits.size_budget);
}

}  // namespace hcohom
