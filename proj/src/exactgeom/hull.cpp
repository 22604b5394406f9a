// Exact convex hull in arbitrary (small) dimension.
//
// Full-dimensional hulls are built incrementally (beneath-beyond). Each
// live facet keeps the set of inserted points lying on its hyperplane;
// that set always contains every current vertex on the facet, so two
// facets meet in a ridge exactly when their common points span a
// (k-2)-flat. Lower-dimensional input is projected injectively onto the
// pivot coordinates of its direction space, hulled there, and lifted.

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <utility>

#include "mixedbody/error.hpp"
#include "mixedbody/exactgeom/polytope.hpp"

namespace mixedbody::exactgeom {

namespace {

struct FacetData {
  Vec normal;
  Rat offset;
  std::vector<std::size_t> points;  // sorted indices into the input
  bool alive = true;
};

struct HullResult {
  std::vector<std::size_t> vertices;  // sorted indices into the input
  std::vector<Halfspace> facets;      // vertex lists index into `vertices`
};

// Hyperplane through k affinely independent points of R^k, oriented so
// that `interior` is strictly on the negative side.
std::pair<Vec, Rat> hyperplane_through(const std::vector<Point>& pts,
                                       const std::vector<std::size_t>& idx,
                                       const Point& interior, std::size_t k) {
  Matrix rows;
  rows.reserve(idx.size() - 1);
  for (std::size_t i = 1; i < idx.size(); ++i) rows.push_back(pts[idx[i]] - pts[idx[0]]);
  Matrix ns = nullspace(rows, k);
  if (ns.size() != 1) throw InternalError("hull: degenerate facet hyperplane");
  Vec normal = primitive_integer(ns.front());
  Rat offset = dot(normal, pts[idx[0]]);
  if (dot(normal, interior) > offset) {
    for (auto& x : normal) x = -x;
    offset = -offset;
  }
  return {std::move(normal), std::move(offset)};
}

// Indices from `subset` forming a maximal affinely independent family,
// stopping once `target_dim + 1` points are found.
std::vector<std::size_t> affine_basis(const std::vector<Point>& pts,
                                      const std::vector<std::size_t>& subset,
                                      std::size_t k, int target_dim) {
  std::vector<std::size_t> basis;
  if (subset.empty()) return basis;
  basis.push_back(subset.front());
  if (target_dim <= 0) return basis;
  RowBasis dirs(k);
  for (std::size_t i = 1; i < subset.size(); ++i) {
    if (dirs.insert(pts[subset[i]] - pts[subset.front()])) {
      basis.push_back(subset[i]);
      if (static_cast<int>(dirs.rank()) == target_dim) break;
    }
  }
  return basis;
}

HullResult full_hull(const std::vector<Point>& pts, std::size_t k) {
  const std::size_t n = pts.size();

  // Initial simplex.
  std::vector<std::size_t> simplex{0};
  {
    RowBasis dirs(k);
    for (std::size_t i = 1; i < n && simplex.size() < k + 1; ++i) {
      if (dirs.insert(pts[i] - pts[0])) simplex.push_back(i);
    }
  }
  if (simplex.size() != k + 1) throw InternalError("hull: input is not full-dimensional");

  Point interior(k);
  for (auto i : simplex) interior = interior + pts[i];
  interior = Rat(1, static_cast<long>(k + 1)) * interior;

  std::vector<FacetData> facets;
  for (std::size_t omit = 0; omit <= k; ++omit) {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j <= k; ++j) {
      if (j != omit) idx.push_back(simplex[j]);
    }
    auto [normal, offset] = hyperplane_through(pts, idx, interior, k);
    std::sort(idx.begin(), idx.end());
    facets.push_back({std::move(normal), std::move(offset), std::move(idx), true});
  }

  std::vector<bool> in_simplex(n, false);
  for (auto i : simplex) in_simplex[i] = true;

  std::vector<int> side;
  std::vector<std::size_t> visible;
  std::vector<std::size_t> common;
  for (std::size_t p = 0; p < n; ++p) {
    if (in_simplex[p]) continue;
    const Point& x = pts[p];

    side.assign(facets.size(), -1);
    visible.clear();
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (!facets[f].alive) continue;
      const Rat s = dot(facets[f].normal, x) - facets[f].offset;
      side[f] = s.sign();
      if (side[f] > 0) visible.push_back(f);
    }
    if (visible.empty()) continue;  // inside the current hull

    std::vector<FacetData> created;
    std::vector<std::size_t> coplanar;
    for (auto v : visible) {
      for (std::size_t g = 0; g < facets.size(); ++g) {
        if (!facets[g].alive || side[g] > 0) continue;
        common.clear();
        std::set_intersection(facets[v].points.begin(), facets[v].points.end(),
                              facets[g].points.begin(), facets[g].points.end(),
                              std::back_inserter(common));
        if (common.size() + 1 < k) continue;
        const int ridge_dim = static_cast<int>(k) - 2;
        auto basis = affine_basis(pts, common, k, ridge_dim);
        if (static_cast<int>(basis.size()) != ridge_dim + 1) continue;
        if (side[g] == 0) {
          coplanar.push_back(g);
          continue;
        }
        basis.push_back(p);
        auto [normal, offset] = hyperplane_through(pts, basis, interior, k);
        std::vector<std::size_t> on = common;
        on.insert(std::upper_bound(on.begin(), on.end(), p), p);
        auto same = std::find_if(created.begin(), created.end(), [&](const FacetData& f) {
          return f.offset == offset && f.normal == normal;
        });
        if (same == created.end()) {
          created.push_back({std::move(normal), std::move(offset), std::move(on), true});
        } else {
          std::vector<std::size_t> merged;
          std::set_union(same->points.begin(), same->points.end(), on.begin(), on.end(),
                         std::back_inserter(merged));
          same->points = std::move(merged);
        }
      }
    }

    for (auto v : visible) facets[v].alive = false;
    std::sort(coplanar.begin(), coplanar.end());
    coplanar.erase(std::unique(coplanar.begin(), coplanar.end()), coplanar.end());
    for (auto g : coplanar) {
      auto& on = facets[g].points;
      on.insert(std::upper_bound(on.begin(), on.end(), p), p);
    }
    for (auto& f : created) facets.push_back(std::move(f));

    if (facets.size() > 64) {
      std::erase_if(facets, [](const FacetData& f) { return !f.alive; });
    }
  }
  std::erase_if(facets, [](const FacetData& f) { return !f.alive; });

  // A boundary point is a vertex iff the normals of the facets through it
  // span R^k.
  std::map<std::size_t, std::vector<std::size_t>> incident;
  for (std::size_t f = 0; f < facets.size(); ++f) {
    for (auto i : facets[f].points) incident[i].push_back(f);
  }
  HullResult result;
  std::vector<std::size_t> relabel(n, n);
  for (const auto& [i, fs] : incident) {
    RowBasis normals(k);
    for (auto f : fs) {
      normals.insert(facets[f].normal);
      if (normals.rank() == k) break;
    }
    if (normals.rank() == k) {
      relabel[i] = result.vertices.size();
      result.vertices.push_back(i);
    }
  }
  for (auto& f : facets) {
    Halfspace h{std::move(f.normal), std::move(f.offset), {}};
    for (auto i : f.points) {
      if (relabel[i] != n) h.vertices.push_back(relabel[i]);
    }
    result.facets.push_back(std::move(h));
  }
  return result;
}

bool facet_less(const Halfspace& a, const Halfspace& b) {
  if (a.normal != b.normal) return a.normal < b.normal;
  return a.offset < b.offset;
}

}  // namespace

Polytope hull(std::span<const Point> input, std::size_t ambient_dim) {
  for (const auto& x : input) {
    if (x.size() != ambient_dim) {
      throw ValidityError("hull: point of length " + std::to_string(x.size()) +
                          " in ambient dimension " + std::to_string(ambient_dim));
    }
  }
  std::vector<Point> pts(input.begin(), input.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) return Polytope(ambient_dim);

  auto hrep = std::make_shared<HRep>();
  const std::size_t d = ambient_dim;

  RowBasis dirs(d);
  for (std::size_t i = 1; i < pts.size(); ++i) dirs.insert(pts[i] - pts[0]);
  const std::size_t j = dirs.rank();

  for (auto& eq : nullspace(dirs.rows(), d)) {
    Vec normal = primitive_integer(eq);
    Rat offset = dot(normal, pts[0]);
    hrep->equalities.push_back({std::move(normal), std::move(offset)});
  }

  if (j == 0) {
    std::vector<Point> vertex{pts[0]};
    return Polytope(d, std::move(vertex), 0, std::move(hrep));
  }

  std::vector<std::size_t> coords = dirs.pivots();
  std::sort(coords.begin(), coords.end());
  std::vector<Point> projected;
  projected.reserve(pts.size());
  for (const auto& x : pts) {
    Point y(j);
    for (std::size_t c = 0; c < j; ++c) y[c] = x[coords[c]];
    projected.push_back(std::move(y));
  }
  HullResult h = full_hull(projected, j);

  std::vector<Point> vertices;
  vertices.reserve(h.vertices.size());
  for (auto i : h.vertices) vertices.push_back(pts[i]);
  // `pts` is sorted and h.vertices ascending, so `vertices` is sorted.

  for (auto& f : h.facets) {
    Vec normal(d);
    for (std::size_t c = 0; c < j; ++c) normal[coords[c]] = f.normal[c];
    hrep->facets.push_back({std::move(normal), std::move(f.offset), std::move(f.vertices)});
  }
  std::sort(hrep->facets.begin(), hrep->facets.end(), facet_less);

  return Polytope(d, std::move(vertices), static_cast<int>(j), std::move(hrep));
}

}  // namespace mixedbody::exactgeom
