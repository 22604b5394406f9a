#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mixedbody/exactgeom/polytope.hpp"
#include "mixedbody/harness/rng.hpp"

namespace mixedbody::harness {

using exactgeom::Polytope;

inline constexpr int kMaxResamples = 1000;

// Hull of n_points lattice points drawn uniformly from [0, max_coord]^dim
// (coordinates drawn point by point, axis by axis), resampled until it is
// full-dimensional. ValidityError after kMaxResamples attempts or when
// n_points < dim + 1.
Polytope random_lattice_polytope(std::size_t dim, std::size_t n_points, std::int64_t max_coord, Rng& rng);

// dim bodies in R^dim; body i uses dim + 1 + uniform(0, 3) points.
std::vector<Polytope> random_tuple(std::size_t dim, std::int64_t max_coord, Rng& rng);

// Candidate for the slice lemma, to be filtered by the condition
// checkers. K_1 is the cone over a small random base B in {x_1 = 0}
// with apex r e_1, r in [2, max_coord], so (a) holds by construction.
// Each K_j is the hull of a random base C in {x_1 = 0} and one point
// (h, p) with h in {1, 2}; (b) holds iff (h / r) B + p lies in C.
struct SliceTuple {
  std::vector<Polytope> bodies;
  exactgeom::Rat r;
};
SliceTuple random_slice_candidate(std::size_t dim, std::int64_t max_coord, Rng& rng);

}  // namespace mixedbody::harness
