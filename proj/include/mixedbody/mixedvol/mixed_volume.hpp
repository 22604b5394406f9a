#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "mixedbody/exactgeom/polytope.hpp"
#include "mixedbody/report.hpp"

namespace mixedbody::mixedvol {

using exactgeom::Polytope;
using exactgeom::Rat;

inline constexpr std::size_t kDefaultDimCap = 6;

// d non-empty bodies in a common R^d.
class BodyTuple {
 public:
  explicit BodyTuple(std::vector<Polytope> bodies, std::size_t dim_cap = kDefaultDimCap);

  std::size_t dim() const { return bodies_.size(); }
  const Polytope& operator[](std::size_t i) const { return bodies_[i]; }
  std::span<const Polytope> bodies() const { return bodies_; }

 private:
  std::vector<Polytope> bodies_;
};

// V(K_1, ..., K_d) = (1/d!) sum over non-empty S of (-1)^(d-|S|) vol(sum_{i in S} K_i).
Rat mixed_volume(const BodyTuple& t);

// Independent route: interpolate the homogeneous polynomial
// vol(t_1 K_1 + ... + t_d K_d) and read off the t_1...t_d coefficient.
Rat mixed_volume_polyfit(const BodyTuple& t);

enum class Method { inclusion_exclusion, polynomial_fit };

struct MixedVolumeReport {
  Rat value;
  Method method;
  std::size_t term_count;  // Minkowski-sum volumes evaluated
  std::chrono::nanoseconds elapsed;
};

MixedVolumeReport mixed_volume_report(const BodyTuple& t, Method method);

// Coefficients c_alpha of vol(sum t_i K_i) = sum_{|alpha| = d} c_alpha t^alpha.
class MinkowskiPolynomial {
 public:
  using Exponent = std::vector<unsigned>;

  MinkowskiPolynomial(std::size_t dim, std::size_t body_count, std::map<Exponent, Rat> coeffs)
      : dim_(dim), body_count_(body_count), coeffs_(std::move(coeffs)) {}

  std::size_t dim() const { return dim_; }
  std::size_t body_count() const { return body_count_; }
  const std::map<Exponent, Rat>& coefficients() const { return coeffs_; }
  // Zero for exponents not of total degree dim().
  Rat coefficient(const Exponent& alpha) const;
  Rat evaluate(std::span<const Rat> t) const;

 private:
  std::size_t dim_;
  std::size_t body_count_;
  std::map<Exponent, Rat> coeffs_;
};

MinkowskiPolynomial minkowski_polynomial(std::span<const Polytope> bodies);

// V(K_1..K_d) vol(K) <= d V(K,..,K,K_d) V(K_1..K_{d-1},K); one check
// whose rhs - lhs is the slack.
Report ssz_check(const Polytope& k, const BodyTuple& t);

}  // namespace mixedbody::mixedvol
