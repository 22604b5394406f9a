#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "mixedbody/exactgeom/linalg.hpp"
#include "mixedbody/exactgeom/rat.hpp"

namespace mixedbody::exactgeom {

using Point = Vec;

// normal . x <= offset, together with the indices of the polytope
// vertices lying on the boundary hyperplane.
struct Halfspace {
  Vec normal;
  Rat offset;
  std::vector<std::size_t> vertices;
};

// normal . x == offset
struct Hyperplane {
  Vec normal;
  Rat offset;
};

// Facet description derived from the vertices. For lower-dimensional
// polytopes `equalities` cut out the affine hull and `facets` are the
// relative facets lifted to the ambient space. Normals are primitive
// integer vectors; facets are sorted by (normal, offset).
struct HRep {
  std::vector<Hyperplane> equalities;
  std::vector<Halfspace> facets;
};

/**
 * Convex polytope in Q^d stored as its irredundant, lexicographically
 * sorted vertex list. Two polytopes are equal iff their vertex lists are
 * identical. The facet description is computed once, when the value is
 * built, and shared between copies.
 *
 * Only the free functions below construct non-empty polytopes, so every
 * value is canonical.
 */
class Polytope {
 public:
  // Empty polytope in R^ambient_dim.
  explicit Polytope(std::size_t ambient_dim = 0);

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }

  // Affine dimension; -1 for the empty polytope.
  int dim() const { return affine_dim_; }
  bool full_dimensional() const {
    return affine_dim_ == static_cast<int>(ambient_dim_);
  }

  const HRep& hrep() const;

  bool contains(const Point& x) const;

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
  }

 private:
  Polytope(std::size_t ambient_dim, std::vector<Point> vertices, int affine_dim,
           std::shared_ptr<const HRep> hrep);

  friend Polytope hull(std::span<const Point> points, std::size_t ambient_dim);
  friend Polytope scale(const Polytope& p, const Rat& lambda);
  friend Polytope translate(const Polytope& p, const Point& t);

  std::size_t ambient_dim_;
  std::vector<Point> vertices_;
  int affine_dim_ = -1;
  std::shared_ptr<const HRep> hrep_;
};

// Canonical convex hull. Lower-dimensional hulls are allowed.
Polytope hull(std::span<const Point> points, std::size_t ambient_dim);

// Exact d-dimensional volume; 0 for lower-dimensional or empty
// polytopes. In R^0 the non-empty polytope has volume 1.
Rat volume(const Polytope& p);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);

// Sum of weights[i] * bodies[i]; bodies must be non-empty.
Polytope weighted_sum(std::span<const Polytope> bodies, std::span<const Rat> weights);

Polytope scale(const Polytope& p, const Rat& lambda);
Polytope translate(const Polytope& p, const Point& t);

// x -> m * x + offset for a square matrix m.
Polytope affine_image(const Polytope& p, const Matrix& m, const Point& offset);

// The section {x : x_1 = tau} as a polytope in R^(d-1).
Polytope slice(const Polytope& p, const Rat& tau);

// p intersected with {x : normal . x <= offset}.
Polytope clip(const Polytope& p, const Vec& normal, const Rat& offset);

// Points of p on {x : normal . x == offset}. This is a face of p when the
// hyperplane supports p.
Polytope face(const Polytope& p, const Vec& normal, const Rat& offset);

bool is_subset(const Polytope& p, const Polytope& q);

// Smallest and largest value of coordinate `axis` over p (non-empty).
std::pair<Rat, Rat> coordinate_range(const Polytope& p, std::size_t axis);

// Standard simplex conv{0, e_1, ..., e_d} scaled by r.
Polytope standard_simplex(std::size_t d, const Rat& r = Rat(1));

// Axis-parallel box prod [lower_i, upper_i].
Polytope box(const std::vector<Rat>& lower, const std::vector<Rat>& upper);

}  // namespace mixedbody::exactgeom
