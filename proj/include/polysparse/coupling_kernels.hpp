#pragma once

#include <cstdint>

#include "polysparse/assembly_oracle.hpp"

namespace polysparse {

// Non-zero count of the coupling pattern without storing it: one task per block row,
// distinct neighbour blocks found with a per-thread stamp array. OpenMP-parallel when
// built with it; the result equals coupling_pattern(map).nnz.
std::int64_t count_nnz(const GlobalDofMap& map);

// Number of threads count_nnz would use.
int kernel_threads();

}  // namespace polysparse
