#pragma once

#include <cstddef>
#include <vector>

#include "kdelta/linalg.hpp"

namespace kdelta {

// Minimal V-description of the cone {x : <a, x> >= 0 for all a in constraints}:
// a canonical basis of the lineality space plus the extreme rays modulo it.
// Extreme rays are primitive, reduced modulo the lineality (zero at its pivot
// columns) and sorted lexicographically.
struct DoubleDescription {
  std::vector<QVec> lineality;
  std::vector<QVec> extreme_rays;
};

DoubleDescription double_description(std::size_t ambient_dim,
                                     const std::vector<QVec>& constraints);

// Polyhedral convex cone given by generators. All derived data (dual
// generators, edges, linear part) is computed exactly at construction, so
// values are immutable and safely shareable.
class Cone {
public:
  static Cone from_generators(std::size_t ambient_dim, std::vector<QVec> generators);
  static Cone full_space(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  // Primitive, deduplicated, sorted. Generate the cone but need not be minimal.
  const std::vector<QVec>& generators() const { return generators_; }
  // Primitive extreme-ray representatives modulo the linear part; empty when
  // the cone is a linear subspace.
  const std::vector<QVec>& edges() const { return edges_; }
  // Canonical basis of C ∩ (-C).
  const std::vector<QVec>& linear_part_basis() const { return linear_part_; }
  // Generators of the dual cone {y : <y, g> >= 0}; lineality directions of the
  // dual appear as +/- pairs.
  const std::vector<QVec>& dual_generators() const { return dual_generators_; }

  Cone dual() const;
  bool contains(const QVec& v) const;
  std::size_t linear_part_dim() const { return linear_part_.size(); }

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.linear_part_ == b.linear_part_ &&
           a.edges_ == b.edges_;
  }

private:
  std::size_t ambient_dim_ = 0;
  std::vector<QVec> generators_;
  std::vector<QVec> edges_;
  std::vector<QVec> linear_part_;
  std::vector<QVec> dual_generators_;
};

std::vector<QVec> cone_edges(const Cone& c);
std::vector<QVec> cone_linear_part(const Cone& c);
Cone dual_cone(const Cone& c);

// y in the relative interior of dual_cone(c): <y, b> = 0 on the linear part
// and <y, e> > 0 on every edge.
bool ri_dual_membership(const Cone& c, const QVec& y);

}  // namespace kdelta
