#include "mixedbody/harness/generators.hpp"

#include <string>

#include "mixedbody/error.hpp"

namespace mixedbody::harness {

using exactgeom::Point;
using exactgeom::Rat;

namespace {

Point lift(const Point& x) {
  Point y{Rat(0)};
  y.insert(y.end(), x.begin(), x.end());
  return y;
}

}  // namespace

Polytope random_lattice_polytope(std::size_t dim, std::size_t n_points, std::int64_t max_coord, Rng& rng) {
  if (n_points < dim + 1) {
    throw ValidityError("random_lattice_polytope: need at least dim + 1 = " + std::to_string(dim + 1) + " points");
  }
  if (max_coord < 1) throw ValidityError("random_lattice_polytope: max_coord must be positive");
  for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
    std::vector<Point> pts;
    pts.reserve(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
      Point x;
      for (std::size_t c = 0; c < dim; ++c) x.emplace_back(static_cast<long>(rng.uniform(0, max_coord)));
      pts.push_back(std::move(x));
    }
    Polytope p = exactgeom::hull(pts, dim);
    if (p.full_dimensional()) return p;
  }
  throw ValidityError("random_lattice_polytope: no full-dimensional sample within the retry budget");
}

std::vector<Polytope> random_tuple(std::size_t dim, std::int64_t max_coord, Rng& rng) {
  std::vector<Polytope> bodies;
  for (std::size_t i = 0; i < dim; ++i) {
    const auto n = dim + 1 + static_cast<std::size_t>(rng.uniform(0, 3));
    bodies.push_back(random_lattice_polytope(dim, n, max_coord, rng));
  }
  return bodies;
}

SliceTuple random_slice_candidate(std::size_t dim, std::int64_t max_coord, Rng& rng) {
  if (dim < 2) throw ValidityError("random_slice_candidate: needs dim >= 2");
  if (max_coord < 2) throw ValidityError("random_slice_candidate: needs max_coord >= 2");
  // (b) for K_j = conv({0} x C, (h, p)) reduces to (h / r) B + p in C, so
  // the cone base B is kept small and r large relative to h.
  const Rat r(static_cast<long>(rng.uniform(2, max_coord)));
  const std::int64_t base_coord = std::max<std::int64_t>(1, max_coord / 3);
  std::vector<Polytope> bodies;
  {
    const Polytope base = random_lattice_polytope(dim - 1, dim, base_coord, rng);
    std::vector<Point> pts;
    for (const auto& v : base.vertices()) pts.push_back(lift(v));
    Point apex(dim);
    apex[0] = r;
    pts.push_back(std::move(apex));
    bodies.push_back(exactgeom::hull(pts, dim));
  }
  for (std::size_t j = 1; j < dim; ++j) {
    const Polytope base = random_lattice_polytope(dim - 1, dim + 2, max_coord, rng);
    std::vector<Point> pts;
    for (const auto& v : base.vertices()) pts.push_back(lift(v));
    Point far;
    far.emplace_back(static_cast<long>(rng.uniform(1, 2)));
    for (std::size_t c = 1; c < dim; ++c) far.emplace_back(static_cast<long>(rng.uniform(0, max_coord)));
    pts.push_back(std::move(far));
    bodies.push_back(exactgeom::hull(pts, dim));
  }
  return {std::move(bodies), r};
}

}  // namespace mixedbody::harness
