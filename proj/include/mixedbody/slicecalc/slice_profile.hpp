#pragma once

#include <vector>

#include "mixedbody/exactgeom/polytope.hpp"

namespace mixedbody::slicecalc {

using exactgeom::Polytope;
using exactgeom::Rat;

// Coefficients in ascending degree.
struct Polynomial {
  std::vector<Rat> coeffs;

  Rat operator()(const Rat& x) const;
  // Integral over [a, b].
  Rat integral(const Rat& a, const Rat& b) const;
};

/**
 * The function tau -> vol_{d-1}(P ∩ {x_1 = tau}) of a polytope.
 *
 * Between consecutive breakpoints (the distinct x_1-coordinates of the
 * vertices) the section moves linearly, so its volume is a polynomial of
 * degree at most d-1. pieces()[i] is that polynomial on
 * [breakpoints()[i], breakpoints()[i+1]].
 */
class SliceProfile {
 public:
  SliceProfile(Polytope polytope, std::vector<Rat> breakpoints, std::vector<Polynomial> pieces)
      : polytope_(std::move(polytope)), breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {}

  const Polytope& polytope() const { return polytope_; }
  const std::vector<Rat>& breakpoints() const { return breakpoints_; }
  const std::vector<Polynomial>& pieces() const { return pieces_; }

  // Profile value; 0 outside the support. At an interior breakpoint the
  // left piece is used.
  Rat value_at(const Rat& tau) const;
  // True when adjacent pieces agree at every interior breakpoint.
  bool continuous() const;

 private:
  Polytope polytope_;
  std::vector<Rat> breakpoints_;
  std::vector<Polynomial> pieces_;
};

// Distinct x_1-coordinates of the vertices, ascending.
std::vector<Rat> breakpoints(const Polytope& p);

// Each piece is fitted exactly through d interior sample sections.
SliceProfile slice_profile(const Polytope& p);

Rat integrate_profile(const SliceProfile& s);

}  // namespace mixedbody::slicecalc
