#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mixedbody/exactgeom/polytope.hpp"
#include "mixedbody/mixedvol/mixed_volume.hpp"
#include "mixedbody/report.hpp"

namespace mixedbody::slicecalc {

using exactgeom::Polytope;
using exactgeom::Rat;
using mixedvol::BodyTuple;

/**
 * Conditions on slices K_tau = K ∩ {x_1 = tau} (viewed in R^(d-1)):
 *
 *   (a)  K_{1,tau} = (1 - tau/r) K_{1,0}                for tau in [0, r)
 *   (b)  (tau/r) K_{1,0} + K_{j,tau} ⊆ K_{j,0}           for tau >= 0
 *
 * Both are quantified over a real interval, but a finite grid decides
 * them exactly. On an interval between consecutive breakpoints of K the
 * support function of K_tau is both concave in tau (K is convex) and a
 * maximum of affine functions (section vertices move along edges), hence
 * affine; the slice is a Minkowski-linear family there. For (a) both
 * sides are then Minkowski-linear, so agreement at two points of each
 * interval gives agreement on all of it. For (b) the left side's support
 * function is affine per interval and the right side is fixed, so the
 * interval endpoints suffice. The grids below contain 0, every
 * breakpoint in range and the midpoint of each interval (for (a) also of
 * the last interval [b, r)).
 *
 * Where the sliced body is empty the conditions hold vacuously.
 */
std::vector<Rat> certificate_grid_a(const Polytope& k1, const Rat& r,
                                    std::span<const Rat> extra = {});
std::vector<Rat> certificate_grid_b(const Polytope& kj, std::span<const Rat> extra = {});

// One check per tau; a failure's witness holds tau and both bodies.
Report check_condition_a(const Polytope& k1, const Rat& r, std::span<const Rat> taus);
Report check_condition_b(const Polytope& k1, const Polytope& kj, const Rat& r,
                         std::span<const Rat> taus);

struct LemmaOptions {
  // Refuse to evaluate (throw ValidityError) when a condition fails.
  bool strict = true;
  // Added to the certificate grids.
  std::vector<Rat> extra_taus;
};

struct LemmaResult {
  Rat lhs;  // (d/r) V(K_1, ..., K_d)
  Rat rhs;  // V(K_{2,0}, ..., K_{d,0}) in R^(d-1)
  Report report;
};

// Requires d >= 2 and non-empty base slices K_{j,0} for j >= 2.
LemmaResult lemma31_both_sides(const BodyTuple& t, const Rat& r, const LemmaOptions& options = {});

// For tau1 >= tau2 >= 0:
//   (tau1/r) K_{1,0} + S_{tau1} ⊆ (tau2/r) K_{1,0} + S_{tau2},
// with S = sum_{i>=2} weights[i-2] K_i. Empty left sides pass.
Report check_monotone_slices(const BodyTuple& t, const Rat& r, std::span<const Rat> weights,
                             std::span<const std::pair<Rat, Rat>> tau_pairs);

}  // namespace mixedbody::slicecalc
