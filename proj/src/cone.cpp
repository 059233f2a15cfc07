#include "kdelta/cone.hpp"

#include <algorithm>

#include "kdelta/limits.hpp"

namespace kdelta {

namespace {

struct Ray {
  QVec u;                  // coordinates in the pointed quotient
  std::vector<bool> zero;  // zero[i]: constraint i is tight (processed ones only)
};

bool subset_of(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

// Combinatorial adjacency test for a minimal double-description pair of a
// pointed cone: r and s are adjacent iff no third ray is tight on all
// constraints common to r and s.
bool adjacent(const Ray& r, const Ray& s, const std::vector<Ray>& rays) {
  std::vector<bool> common(r.zero.size());
  for (std::size_t i = 0; i < common.size(); ++i) common[i] = r.zero[i] && s.zero[i];
  for (const Ray& t : rays) {
    if (&t == &r || &t == &s) continue;
    if (subset_of(common, t.zero)) return false;
  }
  return true;
}

// Greedy first (lexicographically by row index) maximal independent subset.
std::vector<std::size_t> independent_rows(const std::vector<QVec>& rows, std::size_t dim,
                                          std::size_t want) {
  std::vector<std::size_t> picked;
  std::vector<QVec> span;
  for (std::size_t i = 0; i < rows.size() && picked.size() < want; ++i) {
    std::vector<QVec> trial = span;
    trial.push_back(rows[i]);
    if (subspace_rref_basis(dim, trial).size() > span.size()) {
      span = subspace_rref_basis(dim, trial);
      picked.push_back(i);
    }
  }
  return picked;
}

// Extreme rays of the pointed cone {u : <a, u> >= 0}, rank(constraints) = dim.
std::vector<QVec> pointed_extreme_rays(std::size_t dim, const std::vector<QVec>& constraints) {
  const std::size_t m = constraints.size();
  const std::vector<std::size_t> basis = independent_rows(constraints, dim, dim);

  std::vector<bool> processed(m, false);
  std::vector<Ray> rays;
  {
    std::vector<QVec> brows;
    for (std::size_t b : basis) {
      brows.push_back(constraints[b]);
      processed[b] = true;
    }
    const QMat bm = QMat::from_rows(brows);
    for (std::size_t j = 0; j < dim; ++j) {
      auto sol = solve_any(bm, QVec::unit(dim, j));
      Ray r;
      r.u = primitive_vector(*sol);
      r.zero.assign(m, false);
      for (std::size_t i = 0; i < m; ++i)
        if (processed[i]) r.zero[i] = dot(constraints[i], r.u).is_zero();
      rays.push_back(std::move(r));
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    if (processed[i]) continue;
    const QVec& a = constraints[i];
    std::vector<Ray> plus, zero, minus;
    std::vector<Rat> sigma_plus, sigma_minus;
    for (Ray& r : rays) {
      const Rat s = dot(a, r.u);
      if (s.sign() > 0) {
        plus.push_back(std::move(r));
        sigma_plus.push_back(s);
      } else if (s.sign() < 0) {
        minus.push_back(std::move(r));
        sigma_minus.push_back(s);
      } else {
        r.zero[i] = true;
        zero.push_back(std::move(r));
      }
    }
    processed[i] = true;
    if (minus.empty()) {
      rays = std::move(plus);
      for (Ray& r : zero) rays.push_back(std::move(r));
      continue;
    }

    std::vector<Ray> all_old;
    for (const Ray& r : plus) all_old.push_back(r);
    for (const Ray& r : zero) all_old.push_back(r);
    for (const Ray& r : minus) all_old.push_back(r);

    std::vector<Ray> next = plus;
    for (Ray& r : next) {}  // plus rays keep zero[i] == false
    for (Ray& r : zero) next.push_back(r);

    for (std::size_t p = 0; p < plus.size(); ++p) {
      for (std::size_t q = 0; q < minus.size(); ++q) {
        if (!adjacent(plus[p], minus[q], all_old)) continue;
        Ray w;
        w.u = primitive_vector(sigma_plus[p] * minus[q].u - sigma_minus[q] * plus[p].u);
        w.zero.assign(m, false);
        for (std::size_t t = 0; t < m; ++t) w.zero[t] = plus[p].zero[t] && minus[q].zero[t];
        w.zero[i] = true;
        next.push_back(std::move(w));
      }
    }
    rays = std::move(next);
  }

  std::vector<QVec> out;
  out.reserve(rays.size());
  for (const Ray& r : rays) out.push_back(r.u);
  return sorted_unique(std::move(out));
}

}  // namespace

DoubleDescription double_description(std::size_t ambient_dim,
                                     const std::vector<QVec>& constraints) {
  std::vector<QVec> cs;
  for (const QVec& a : constraints) {
    if (a.dim() != ambient_dim) fail("DimMismatch", "constraint of wrong dimension");
    if (!a.is_zero()) cs.push_back(primitive_vector(a));
  }
  cs = sorted_unique(std::move(cs));

  DoubleDescription dd;
  if (cs.empty()) {
    dd.lineality = subspace_rref_basis(
        ambient_dim, QMat::identity(ambient_dim).row_list());
    return dd;
  }
  dd.lineality = kernel_basis(QMat::from_rows(cs));

  // Quotient out the lineality: keep the coordinates away from its pivots.
  std::vector<bool> is_pivot(ambient_dim, false);
  for (const QVec& row : dd.lineality) {
    std::size_t j = 0;
    while (row[j].is_zero()) ++j;
    is_pivot[j] = true;
  }
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < ambient_dim; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  const std::size_t k = free_cols.size();
  if (k == 0) return dd;

  std::vector<QVec> projected;
  for (const QVec& a : cs) {
    QVec p(k);
    for (std::size_t j = 0; j < k; ++j) p[j] = a[free_cols[j]];
    if (!p.is_zero()) projected.push_back(primitive_vector(p));
  }
  projected = sorted_unique(std::move(projected));

  for (const QVec& u : pointed_extreme_rays(k, projected)) {
    QVec x(ambient_dim);
    for (std::size_t j = 0; j < k; ++j) x[free_cols[j]] = u[j];
    dd.extreme_rays.push_back(primitive_vector(x));
  }
  dd.extreme_rays = sorted_unique(std::move(dd.extreme_rays));
  return dd;
}

Cone Cone::from_generators(std::size_t ambient_dim, std::vector<QVec> generators) {
  if (ambient_dim == 0) fail("DimMismatch", "cone in dimension zero");
  if (ambient_dim > max_cone_dim())
    fail("DimTooLarge", "cone ambient dimension exceeds the guard");
  Cone c;
  c.ambient_dim_ = ambient_dim;
  for (const QVec& g : generators) {
    if (g.dim() != ambient_dim) fail("DimMismatch", "generator of wrong dimension");
    if (g.is_zero()) fail("ZeroVector", "zero cone generator");
    c.generators_.push_back(primitive_vector(g));
  }
  c.generators_ = sorted_unique(std::move(c.generators_));

  // Dual first: its generators give an H-description of the original cone,
  // and a second double-description pass yields the minimal V-description.
  const DoubleDescription dual_dd = double_description(ambient_dim, c.generators_);
  c.dual_generators_ = dual_dd.extreme_rays;
  for (const QVec& b : dual_dd.lineality) {
    c.dual_generators_.push_back(b);
    c.dual_generators_.push_back(primitive_vector(-b));
  }
  c.dual_generators_ = sorted_unique(std::move(c.dual_generators_));

  const DoubleDescription self_dd = double_description(ambient_dim, c.dual_generators_);
  c.linear_part_ = self_dd.lineality;
  c.edges_ = self_dd.extreme_rays;
  return c;
}

Cone Cone::full_space(std::size_t ambient_dim) {
  std::vector<QVec> gens;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    gens.push_back(QVec::unit(ambient_dim, i));
    gens.push_back(-QVec::unit(ambient_dim, i));
  }
  return from_generators(ambient_dim, std::move(gens));
}

Cone Cone::dual() const {
  Cone d;
  if (dual_generators_.empty()) {
    // Dual of the full space is the zero cone.
    d.ambient_dim_ = ambient_dim_;
    return d;
  }
  return from_generators(ambient_dim_, dual_generators_);
}

bool Cone::contains(const QVec& v) const {
  if (v.dim() != ambient_dim_) fail("DimMismatch", "membership test of wrong dimension");
  for (const QVec& d : dual_generators_)
    if (dot(d, v).sign() < 0) return false;
  // With no generators the cone is {0}.
  if (generators_.empty()) return v.is_zero();
  return true;
}

std::vector<QVec> cone_edges(const Cone& c) { return c.edges(); }

std::vector<QVec> cone_linear_part(const Cone& c) { return c.linear_part_basis(); }

Cone dual_cone(const Cone& c) { return c.dual(); }

bool ri_dual_membership(const Cone& c, const QVec& y) {
  if (y.dim() != c.ambient_dim())
    fail("DimMismatch", "relative-interior test of wrong dimension");
  for (const QVec& b : c.linear_part_basis())
    if (!dot(y, b).is_zero()) return false;
  for (const QVec& e : c.edges())
    if (dot(y, e).sign() <= 0) return false;
  return true;
}

}  // namespace kdelta
