#include "waring/power_table.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace waring {

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned k) {
    if (k == 0) return 1;
    std::uint64_t acc = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (base != 0 &&
            acc > std::numeric_limits<std::uint64_t>::max() / base)
            return std::nullopt;
        acc *= base;
    }
    return acc;
}

std::uint64_t integer_kth_root(std::uint64_t n, unsigned k) {
    if (k == 0) throw ArgumentError("integer_kth_root: k must be positive");
    if (k == 1 || n < 2) return n;
    // Float seed, then correct; the seed is within one of the truth.
    auto r = static_cast<std::uint64_t>(
        std::pow(static_cast<double>(n), 1.0 / static_cast<double>(k)));
    r = r > 2 ? r - 2 : 0;
    while (true) {
        auto p = checked_pow(r + 1, k);
        if (!p || *p > n) break;
        ++r;
    }
    return r;
}

PowerTable build_power_table(unsigned k, std::uint64_t n_max) {
    if (k == 0) throw ArgumentError("power table: k must be positive");
    if (n_max == 0) throw ArgumentError("power table: n_max must be positive");
    PowerTable t;
    t.k = k;
    t.n_max = n_max;
    std::uint64_t root = integer_kth_root(n_max, k);
    t.powers.reserve(root);
    for (std::uint64_t b = 1; b <= root; ++b) {
        auto p = checked_pow(b, k);
        // root is exact, so every power up to n_max fits in 64 bits
        t.powers.push_back(*p);
    }
    return t;
}

std::vector<std::uint32_t> dp_min_powers(unsigned k, std::uint64_t m) {
    if (k == 0) throw ArgumentError("dp_min_powers: k must be positive");
    constexpr std::uint32_t inf = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> cost(m + 1, inf);
    cost[0] = 0;
    if (m == 0) return cost;
    PowerTable t = build_power_table(k, m);
    for (std::uint64_t x = 1; x <= m; ++x) {
        std::uint32_t best = inf;
        for (std::uint64_t p : t.powers) {
            if (p > x) break;
            std::uint32_t sub = cost[x - p];
            if (sub != inf && sub + 1 < best) best = sub + 1;
        }
        cost[x] = best;
    }
    return cost;
}

} // namespace waring
