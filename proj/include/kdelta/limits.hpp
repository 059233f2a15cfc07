#pragma once

#include <cstddef>

namespace kdelta {

// Dimension guards against double-description blowup. Defaults: 6 for
// polytopes, 8 for cones. set_max_dim_override(k) moves them to k and k + 2;
// the CLI wires this to the KDELTA_MAX_DIM environment variable at startup,
// before any computation runs.
std::size_t max_polytope_dim();
std::size_t max_cone_dim();
void set_max_dim_override(std::size_t k);

}  // namespace kdelta
