// power_table.hpp
// Exact integer table of the k-th powers 1^k, 2^k, ... not exceeding n_max.
// All boundary decisions are made in checked 64-bit integer arithmetic; a
// floating point root only seeds the search for the table length.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "waring/errors.hpp"

namespace waring {

struct PowerTable {
    unsigned k = 0;
    std::uint64_t n_max = 0;
    std::vector<std::uint64_t> powers; // ascending, powers.back() <= n_max

    std::size_t size() const { return powers.size(); }
    std::uint64_t bytes() const { return powers.size() * sizeof(std::uint64_t); }
};

// base^k, or nullopt if the product leaves the 64-bit range.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned k);

// Largest r with r^k <= n_max. k >= 1, n_max >= 1.
std::uint64_t integer_kth_root(std::uint64_t n_max, unsigned k);

// Table of i^k for i = 1..floor(n_max^(1/k)). Throws ArgumentError for
// k = 0 or n_max = 0. Never wraps silently: every candidate power goes
// through checked_pow.
PowerTable build_power_table(unsigned k, std::uint64_t n_max);

// Minimal number of k-th powers summing to each x in [0, m]:
// c[0] = 0, c[x] = 1 + min over table powers p <= x of c[x - p].
// Direct dynamic program, independent of the bitwise sieve; used as the
// reference oracle in tests.
std::vector<std::uint32_t> dp_min_powers(unsigned k, std::uint64_t m);

} // namespace waring
