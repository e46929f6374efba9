#pragma once

#include <cstdint>

#include "ks/diagram.hpp"

namespace ks {

// Greedy crossing-decreasing reduction: R I kinks, R II pairs and planar
// zig-zags, with commutation passes to bring patterns together. The result
// is isotopic to the input and component colors are preserved.
diagram simplify(const diagram& d);

// Rewrite every crossing between counter-directed strands as a co-directed
// crossing conjugated by a pair of turns. Crossing count and isotopy class
// are unchanged; afterwards every crossing is braid-like for a vertical
// sweep from either side.
diagram make_scannable(const diagram& d);

// Apply n random R I / R II moves (insertions) at random positions.
diagram perturb(const diagram& d, int n, std::uint64_t seed);

}  // namespace ks
