#include "kdelta/limits.hpp"

namespace kdelta {

namespace {
std::size_t g_polytope_dim = 6;
std::size_t g_cone_dim = 8;
}  // namespace

std::size_t max_polytope_dim() { return g_polytope_dim; }
std::size_t max_cone_dim() { return g_cone_dim; }

void set_max_dim_override(std::size_t k) {
  g_polytope_dim = k;
  g_cone_dim = k + 2;
}

}  // namespace kdelta
