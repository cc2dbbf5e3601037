#pragma once

#include <cstddef>
#include <gmpxx.h>

#include "offhex/lattice.hpp"

namespace offhex {

using BigCount = mpz_class;

struct CountLimits {
    std::size_t max_states = 10'000'000;
};

// Exact number of lozenge tilings. Unbalanced regions give 0.
BigCount count_tilings(const TriRegion& r, const CountLimits& lim = {});

// Exact number of perfect matchings of a small bipartite graph (at most 64
// vertices per side). Independent of the lattice code.
BigCount count_matchings(const BipartiteGraph& g, const CountLimits& lim = {});

// Rotation by 120 degrees about the origin; preserves orientation of cells.
TriRegion rotate120(const TriRegion& r);

}  // namespace offhex
