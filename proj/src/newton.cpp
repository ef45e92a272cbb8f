#include "lucasx/newton.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lucasx {

std::int64_t Facet::slack(const LatticePoint& v) const {
  std::int64_t dot = 0;
  for (std::size_t i = 0; i < normal.size(); ++i) dot += normal[i] * v[i];
  return offset - dot;
}

namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;

std::int64_t determinant(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  std::int64_t det = 0;
  for (std::size_t col = 0; col < n; ++col) {
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    std::int64_t term = m[0][col] * determinant(minor);
    det += (col % 2 == 0) ? term : -term;
  }
  return det;
}

// Vector orthogonal to the d-1 rows of `rows` (each of length d).
std::vector<std::int64_t> cross_product(const Matrix& rows, std::size_t d) {
  std::vector<std::int64_t> normal(d);
  for (std::size_t i = 0; i < d; ++i) {
    Matrix minor;
    for (const auto& r : rows) {
      std::vector<std::int64_t> row;
      for (std::size_t c = 0; c < d; ++c) {
        if (c != i) row.push_back(r[c]);
      }
      minor.push_back(std::move(row));
    }
    std::int64_t det = determinant(minor);
    normal[i] = (i % 2 == 0) ? det : -det;
  }
  return normal;
}

void make_primitive(std::vector<std::int64_t>& v, std::int64_t& offset) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1) {
    for (auto& x : v) x /= g;
    offset /= g;
  }
}

// Rank of the difference vectors and the first column set realizing it.
struct AffineInfo {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
  std::vector<std::vector<mpq_class>> reduced;  // row-echelon rows
};

AffineInfo affine_info(const std::vector<LatticePoint>& pts, std::size_t d) {
  std::vector<std::vector<mpq_class>> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<mpq_class> row(d);
    for (std::size_t c = 0; c < d; ++c) row[c] = mpq_class(pts[i][c] - pts[0][c]);
    rows.push_back(std::move(row));
  }
  AffineInfo info;
  std::size_t r = 0;
  for (std::size_t c = 0; c < d && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c] == 0) continue;
      mpq_class factor = rows[k][c] / rows[r][c];
      for (std::size_t cc = 0; cc < d; ++cc) rows[k][cc] -= factor * rows[r][cc];
    }
    info.pivot_columns.push_back(c);
    ++r;
  }
  rows.resize(r);
  info.rank = r;
  info.reduced = std::move(rows);
  return info;
}

// Integer basis of the orthogonal complement of the row space.
std::vector<std::vector<std::int64_t>> orthogonal_complement(const AffineInfo& info,
                                                             std::size_t d) {
  std::vector<std::vector<std::int64_t>> basis;
  std::vector<bool> is_pivot(d, false);
  for (auto c : info.pivot_columns) is_pivot[c] = true;
  for (std::size_t free = 0; free < d; ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> v(d);
    v[free] = 1;
    for (std::size_t r = 0; r < info.rank; ++r) {
      std::size_t pc = info.pivot_columns[r];
      v[pc] = -info.reduced[r][free] / info.reduced[r][pc];
    }
    mpz_class lcm = 1;
    for (auto& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    std::vector<std::int64_t> iv(d);
    for (std::size_t c = 0; c < d; ++c) {
      mpq_class scaled = v[c] * lcm;
      iv[c] = scaled.get_num().get_si();
    }
    std::int64_t dummy = 0;
    make_primitive(iv, dummy);
    basis.push_back(std::move(iv));
  }
  return basis;
}

template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Facets of a full-dimensional point set by exhaustive d-subsets.
std::vector<Facet> full_dimensional_facets(const std::vector<LatticePoint>& pts, std::size_t d) {
  std::set<std::pair<std::vector<std::int64_t>, std::int64_t>> seen;
  std::vector<Facet> facets;
  for_each_subset(pts.size(), d, [&](const std::vector<std::size_t>& idx) {
    Matrix diffs;
    for (std::size_t j = 1; j < d; ++j) {
      std::vector<std::int64_t> row(d);
      for (std::size_t c = 0; c < d; ++c) row[c] = pts[idx[j]][c] - pts[idx[0]][c];
      diffs.push_back(std::move(row));
    }
    std::vector<std::int64_t> normal = d == 1 ? std::vector<std::int64_t>{1} : cross_product(diffs, d);
    if (std::all_of(normal.begin(), normal.end(), [](auto v) { return v == 0; })) return;
    std::int64_t offset = 0;
    for (std::size_t c = 0; c < d; ++c) offset += normal[c] * pts[idx[0]][c];
    bool any_above = false;
    bool any_below = false;
    for (const auto& p : pts) {
      std::int64_t dot = 0;
      for (std::size_t c = 0; c < d; ++c) dot += normal[c] * p[c];
      if (dot > offset) any_above = true;
      if (dot < offset) any_below = true;
      if (any_above && any_below) return;
    }
    if (any_above) {
      for (auto& v : normal) v = -v;
      offset = -offset;
    }
    make_primitive(normal, offset);
    if (seen.emplace(normal, offset).second) facets.push_back({normal, offset});
  });
  std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) {
    return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
  });
  return facets;
}

// Rank of the normals of the facets tight at p.
std::size_t tight_rank(const std::vector<Facet>& facets, const LatticePoint& p, std::size_t d) {
  std::vector<LatticePoint> normals{LatticePoint(d, 0)};
  for (const auto& f : facets) {
    if (f.slack(p) == 0) normals.push_back(f.normal);
  }
  return affine_info(normals, d).rank;
}

}  // namespace

NewtonPolytope convex_hull(std::size_t dim, std::vector<LatticePoint> points) {
  if (points.empty()) throw std::invalid_argument("convex_hull: empty point set");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  NewtonPolytope np;
  np.dim = dim;
  AffineInfo info = affine_info(points, dim);
  np.affine_dim = info.rank;

  if (info.rank == 0) {
    np.vertices = points;
    for (std::size_t c = 0; c < dim; ++c) {
      std::vector<std::int64_t> e(dim, 0);
      e[c] = 1;
      np.equalities.push_back({e, points[0][c]});
    }
    return np;
  }

  if (info.rank == dim) {
    np.facets = full_dimensional_facets(points, dim);
    for (const auto& p : points) {
      if (tight_rank(np.facets, p, dim) == dim) np.vertices.push_back(p);
    }
    return np;
  }

  // Lower-dimensional: the projection onto the pivot coordinates is injective
  // on the affine hull, so hull structure transfers.
  std::vector<LatticePoint> projected;
  for (const auto& p : points) {
    LatticePoint q;
    for (auto c : info.pivot_columns) q.push_back(p[c]);
    projected.push_back(std::move(q));
  }
  NewtonPolytope sub = convex_hull(info.rank, projected);
  for (const auto& f : sub.facets) {
    std::vector<std::int64_t> normal(dim, 0);
    for (std::size_t j = 0; j < info.rank; ++j) normal[info.pivot_columns[j]] = f.normal[j];
    np.facets.push_back({normal, f.offset});
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (std::find(sub.vertices.begin(), sub.vertices.end(), projected[i]) != sub.vertices.end()) {
      np.vertices.push_back(points[i]);
    }
  }
  for (auto& n : orthogonal_complement(info, dim)) {
    std::int64_t offset = 0;
    for (std::size_t c = 0; c < dim; ++c) offset += n[c] * points[0][c];
    np.equalities.push_back({std::move(n), offset});
  }
  return np;
}

NewtonPolytope newton_polytope(const LaurentPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("newton_polytope: zero polynomial");
  std::vector<LatticePoint> pts;
  for (const auto& m : f.support()) {
    LatticePoint p(f.dim());
    for (std::size_t i = 0; i < f.dim(); ++i) p[i] = m[i];
    pts.push_back(std::move(p));
  }
  return convex_hull(f.dim(), std::move(pts));
}

std::vector<LatticePoint> interior_integral_points(const NewtonPolytope& np) {
  std::vector<LatticePoint> out;
  if (!np.full_dimensional() || np.vertices.empty()) return out;
  const std::size_t d = np.dim;
  LatticePoint lo = np.vertices[0];
  LatticePoint hi = np.vertices[0];
  for (const auto& v : np.vertices) {
    for (std::size_t c = 0; c < d; ++c) {
      lo[c] = std::min(lo[c], v[c]);
      hi[c] = std::max(hi[c], v[c]);
    }
  }
  LatticePoint cur = lo;
  for (;;) {
    bool inside = std::all_of(np.facets.begin(), np.facets.end(),
                              [&](const Facet& f) { return f.slack(cur) > 0; });
    if (inside) out.push_back(cur);
    std::size_t c = d;
    while (c > 0) {
      --c;
      if (cur[c] < hi[c]) {
        ++cur[c];
        break;
      }
      cur[c] = lo[c];
      if (c == 0) return out;
    }
  }
}

bool origin_only_interior(const LaurentPoly& f) {
  auto pts = interior_integral_points(newton_polytope(f));
  return pts.size() == 1 &&
         std::all_of(pts[0].begin(), pts[0].end(), [](auto v) { return v == 0; });
}

bool support_in_unit_box(const LaurentPoly& f) {
  for (const auto& [m, c] : f.terms()) {
    for (std::size_t i = 0; i < f.dim(); ++i) {
      if (m[i] < -1 || m[i] > 1) return false;
    }
  }
  return true;
}

}  // namespace lucasx
