#pragma once

#include <cstdint>
#include <vector>

#include "lucasx/laurent.hpp"

namespace lucasx {

using LatticePoint = std::vector<std::int64_t>;

/// Supporting half-space normal . v <= offset. Normals are primitive integer
/// vectors, so the rational description is exact.
struct Facet {
  std::vector<std::int64_t> normal;
  std::int64_t offset = 0;

  std::int64_t slack(const LatticePoint& v) const;
  friend bool operator==(const Facet&, const Facet&) = default;
};

/// Convex hull of a support set in dimension d <= 4.
///
/// For a full-dimensional hull `facets` describes the polytope completely.
/// For a lower-dimensional hull `facets` holds the relative facets lifted to
/// Z^d and `equalities` pins the affine hull (normal . v == offset).
struct NewtonPolytope {
  std::size_t dim = 0;
  std::size_t affine_dim = 0;
  std::vector<LatticePoint> vertices;
  std::vector<Facet> facets;
  std::vector<Facet> equalities;

  bool full_dimensional() const { return affine_dim == dim; }
};

/// Exact hull of supp(f). Throws std::invalid_argument for f = 0.
NewtonPolytope newton_polytope(const LaurentPoly& f);
NewtonPolytope convex_hull(std::size_t dim, std::vector<LatticePoint> points);

/// Lattice points strictly inside every facet, sorted lexicographically.
/// Empty when the hull is not full-dimensional.
std::vector<LatticePoint> interior_integral_points(const NewtonPolytope& np);

/// True iff the interior lattice points are exactly {0}.
bool origin_only_interior(const LaurentPoly& f);

/// True iff every exponent of f lies in {-1, 0, 1}.
bool support_in_unit_box(const LaurentPoly& f);

}  // namespace lucasx
