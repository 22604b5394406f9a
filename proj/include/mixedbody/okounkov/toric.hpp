#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "mixedbody/exactgeom/polytope.hpp"
#include "mixedbody/report.hpp"

namespace mixedbody::okounkov {

using exactgeom::Polytope;
using exactgeom::Rat;

using LatticePoint = std::vector<std::int64_t>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

/**
 * Ample toric line bundle given by its moment polytope: a full-dimensional
 * polytope with integer vertices. Sections of the m-th tensor power are
 * the monomials indexed by the lattice points of mP.
 */
class ToricBundle {
 public:
  ToricBundle(Polytope polytope, std::string label = {});

  std::size_t dim() const { return polytope_.ambient_dim(); }
  const Polytope& polytope() const { return polytope_; }
  const std::string& label() const { return label_; }

 private:
  Polytope polytope_;
  std::string label_;
};

// Moment polytope P1 + P2.
ToricBundle tensor(const ToricBundle& a, const ToricBundle& b);
// Moment polytope p * P.
ToricBundle power(const ToricBundle& t, unsigned p);

/**
 * Lex valuation attached to a torus-invariant flag through a vertex:
 * a section of L^m with exponent a has value M (a - m v). M is an integer
 * matrix with determinant +-1 and v a lattice point.
 *
 * The flag is valid for a bundle when M (P - v) lies in the non-negative
 * orthant, which makes every value a non-negative lattice point.
 */
class FlagValuation {
 public:
  FlagValuation(IntMatrix matrix, LatticePoint vertex);

  std::size_t dim() const { return vertex_.size(); }
  const IntMatrix& matrix() const { return matrix_; }
  const LatticePoint& vertex() const { return vertex_; }
  const IntMatrix& inverse() const { return inverse_; }

  bool valid_for(const ToricBundle& t) const;
  // Throws ValidityError naming the bundle when the flag is not valid.
  void require_valid(const ToricBundle& t) const;

  friend bool operator==(const FlagValuation& a, const FlagValuation& b) {
    return a.matrix_ == b.matrix_ && a.vertex_ == b.vertex_;
  }

 private:
  IntMatrix matrix_;
  LatticePoint vertex_;
  IntMatrix inverse_;
};

// Source of the graded pieces S_m of a section semigroup.
class GradedSectionSystem {
 public:
  virtual ~GradedSectionSystem() = default;
  virtual std::size_t dim() const = 0;
  // Exponents of S_m, sorted lexicographically. Implementations must be
  // safe to call concurrently.
  virtual std::vector<LatticePoint> sections(unsigned m) const = 0;
};

// S_m = mP ∩ Z^d.
class ToricSectionSystem final : public GradedSectionSystem {
 public:
  explicit ToricSectionSystem(ToricBundle bundle) : bundle_(std::move(bundle)) {}
  std::size_t dim() const override { return bundle_.dim(); }
  std::vector<LatticePoint> sections(unsigned m) const override;

 private:
  ToricBundle bundle_;
};

// Lattice points of mP, sorted lexicographically (m >= 1).
std::vector<LatticePoint> sections(const ToricBundle& t, unsigned m);

// M (a - m v); ValidityError when a coordinate is negative.
LatticePoint valuation_image(const FlagValuation& nu, const LatticePoint& a, unsigned m);

// Hull of nu(S_m) / m.
Polytope approximant(const GradedSectionSystem& s, const FlagValuation& nu, unsigned m);
Polytope approximant(const ToricBundle& t, const FlagValuation& nu, unsigned m);

// M (P - v). Checked against the m = 1, 2 approximants (inclusion, and
// equality with the first one in the plane); a mismatch is an
// InternalError.
Polytope okounkov_body(const ToricBundle& t, const FlagValuation& nu);

// Bernstein-Kushnirenko: (L_1 ... L_d) = d! V(P_1, ..., P_d). The value is
// asserted to be a non-negative integer.
Rat intersection_number(std::span<const ToricBundle> ts);

// (L_1 ... L_d) against d! V of the bodies, plus vol(body) = vol(P) for
// every bundle.
Report theorem_check(std::span<const ToricBundle> ts, const FlagValuation& nu);

// Delta(T1) + Delta(T2) against Delta(T1 ⊗ T2) under (M, 2v): inclusion,
// equality, and inclusion of valuation sums for m = 1..m_max.
Report subadditivity_check(const ToricBundle& a, const ToricBundle& b, const FlagValuation& nu,
                           unsigned m_max = 1);

// Facets are those of t.polytope().hrep(); facet i reads n . x >= c with n
// the primitive inner normal.
struct InnerFacet {
  exactgeom::Vec normal;
  Rat offset;
};
InnerFacet inner_facet(const ToricBundle& t, std::size_t facet_index);
// Index of the facet with the given primitive inner normal, or
// ValidityError.
std::size_t facet_with_normal(const ToricBundle& t, const exactgeom::Vec& inner_normal);

// Largest s for which n . x >= c + s still leaves a full-dimensional
// polytope: max over the vertices of n . x - c.
Rat mu_threshold(const ToricBundle& t, std::size_t facet_index);

// Flag whose first step is the selected facet: M has the inner normal as
// first row and v = M^{-1} w, w the coordinatewise minimum of M x over
// P, so v lies on the facet and M (P - v) >= 0 is tight in every row.
FlagValuation adapted_flag(const ToricBundle& t, std::size_t facet_index);

// Flag for a fixed unimodular M valid for all bundles: v = M^{-1} w with
// w the coordinatewise minimum of M x over all vertices.
FlagValuation flag_for_matrix(const IntMatrix& m, std::span<const ToricBundle> ts);

// `count` distinct flags valid for every bundle (fewer only in d = 1).
std::vector<FlagValuation> common_flags(std::span<const ToricBundle> ts, std::size_t count);

/**
 * Slice of the body at nu_1 = tau against the body of the restriction of
 * the tightened bundle {n . x >= c + tau} to its new facet. The
 * restricted flag drops the first row of M; its base point is
 * v + tau M^{-1} e_1, the point where the flag curve meets the tightened
 * facet, so the restricted valuation is x -> M' (x - v). tau = mu is
 * skipped with a note. Requires M's first row to be the facet's inner
 * normal and v to lie on the facet.
 */
Report slice_formula_check(const ToricBundle& t, const FlagValuation& nu, std::size_t facet_index,
                           std::span<const Rat> taus);

/**
 * Conditions (a) and (b) on Delta(L_1), ..., Delta(L_d) with r1 the
 * threshold of the flag facet for L_1. When both hold, the slice identity
 * (d/r1) V(bodies) = V(base slices) is checked as well.
 */
Report lemma51_check(std::span<const ToricBundle> ts, const FlagValuation& nu, const Rat& r1);

// {"dim", "polytope", "label"} and {"matrix", "vertex"}.
nlohmann::json bundle_to_json(const ToricBundle& t);
ToricBundle bundle_from_json(const nlohmann::json& j);
nlohmann::json flag_to_json(const FlagValuation& nu);
FlagValuation flag_from_json(const nlohmann::json& j);

}  // namespace mixedbody::okounkov
