#pragma once

#include <array>
#include <cstdint>

#include "boomtab/tables.hpp"

namespace boomtab {

// Tuple i of a seeded stream for differential testing. Half the draws are uniform;
// the rest are built from random solutions of derivative equations so the tuple
// lands on a nonzero entry of the requested kind with decent probability. Any
// coordinate is zeroed with probability 1/16 to reach the trivial cases.
std::array<elem_t, 4> sample_tuple(const VecFun& f, TableKind kind, std::uint64_t seed,
                                   std::uint64_t i);

}  // namespace boomtab
