#include "mixedbody/mixedvol/mixed_volume.hpp"

#include <string>
#include <utility>

#include "mixedbody/error.hpp"
#include "mixedbody/exactgeom/json_io.hpp"

namespace mixedbody::mixedvol {

using exactgeom::Matrix;
using exactgeom::RowBasis;
using exactgeom::Vec;

namespace {

using Exponent = MinkowskiPolynomial::Exponent;

void exponents_rec(std::size_t n, unsigned remaining, Exponent& cur, std::vector<Exponent>& out) {
  if (cur.size() + 1 == n) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur.push_back(e);
    exponents_rec(n, remaining - e, cur, out);
    cur.pop_back();
  }
}

// All exponent vectors of length n and total degree d, lexicographically
// descending.
std::vector<Exponent> exponents(std::size_t n, unsigned d) {
  std::vector<Exponent> out;
  Exponent cur;
  exponents_rec(n, d, cur, out);
  return out;
}

Rat monomial(const Exponent& alpha, std::span<const Rat> t) {
  Rat r(1);
  for (std::size_t i = 0; i < alpha.size(); ++i) r *= exactgeom::pow(t[i], alpha[i]);
  return r;
}

void check_common_dim(std::span<const Polytope> bodies, const char* op) {
  if (bodies.empty()) throw ValidityError(std::string(op) + ": no bodies");
  const std::size_t d = bodies.front().ambient_dim();
  for (const auto& k : bodies) {
    if (k.ambient_dim() != d) throw ValidityError(std::string(op) + ": ambient dimensions differ");
    if (k.empty()) throw ValidityError(std::string(op) + ": empty body");
  }
  if (d == 0) throw ValidityError(std::string(op) + ": ambient dimension 0");
}

struct Fit {
  MinkowskiPolynomial poly;
  std::size_t evaluations;
};

// Interpolates on a deterministic subset of the grid {1..d+1}^n: grid
// points are scanned lexicographically and kept when their monomial row
// is independent of those already kept. A homogeneous degree-d
// polynomial vanishing on the full grid is zero, so the scan always
// completes.
Fit fit(std::span<const Polytope> bodies) {
  const std::size_t n = bodies.size();
  const std::size_t d = bodies.front().ambient_dim();
  const auto alphas = exponents(n, static_cast<unsigned>(d));
  const std::size_t m = alphas.size();

  std::vector<std::vector<Rat>> chosen_t;
  Matrix rows;
  RowBasis basis(m);
  std::vector<unsigned> g(n, 1);
  for (;;) {
    std::vector<Rat> t;
    for (auto gi : g) t.emplace_back(static_cast<long>(gi));
    Vec row(m);
    for (std::size_t a = 0; a < m; ++a) row[a] = monomial(alphas[a], t);
    if (basis.insert(row)) {
      rows.push_back(std::move(row));
      chosen_t.push_back(std::move(t));
      if (rows.size() == m) break;
    }
    std::size_t i = n;
    while (i > 0 && g[i - 1] == d + 1) g[--i] = 1;
    if (i == 0) throw InternalError("polyfit: interpolation grid exhausted");
    ++g[i - 1];
  }

  Vec values;
  values.reserve(m);
  for (const auto& t : chosen_t) values.push_back(exactgeom::volume(exactgeom::weighted_sum(bodies, t)));
  auto coeffs = exactgeom::solve(rows, values);
  if (!coeffs) throw InternalError("polyfit: singular interpolation system");

  std::map<Exponent, Rat> table;
  for (std::size_t a = 0; a < m; ++a) table.emplace(alphas[a], (*coeffs)[a]);
  return {MinkowskiPolynomial(d, n, std::move(table)), m};
}

std::pair<Rat, std::size_t> inclusion_exclusion(const BodyTuple& t) {
  const std::size_t d = t.dim();
  const std::size_t subsets = std::size_t{1} << d;
  std::vector<Polytope> sums(subsets);
  Rat total(0);
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
    const std::size_t rest = mask & (mask - 1);
    sums[mask] = rest == 0 ? t[low] : exactgeom::minkowski_sum(sums[rest], t[low]);
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    const Rat v = exactgeom::volume(sums[mask]);
    if ((d - size) % 2 == 0) {
      total += v;
    } else {
      total -= v;
    }
  }
  return {total / exactgeom::factorial(static_cast<unsigned>(d)), subsets - 1};
}

}  // namespace

BodyTuple::BodyTuple(std::vector<Polytope> bodies, std::size_t dim_cap) : bodies_(std::move(bodies)) {
  const std::size_t d = bodies_.size();
  if (d == 0) throw ValidityError("body tuple: no bodies");
  if (d > dim_cap) {
    throw ValidityError("body tuple: dimension " + std::to_string(d) + " exceeds cap " +
                        std::to_string(dim_cap));
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (bodies_[i].ambient_dim() != d) {
      throw ValidityError("body tuple: body " + std::to_string(i) + " lives in R^" +
                          std::to_string(bodies_[i].ambient_dim()) + ", expected R^" +
                          std::to_string(d));
    }
    if (bodies_[i].empty()) throw ValidityError("body tuple: body " + std::to_string(i) + " is empty");
  }
}

Rat mixed_volume(const BodyTuple& t) { return inclusion_exclusion(t).first; }

Rat mixed_volume_polyfit(const BodyTuple& t) {
  const std::size_t d = t.dim();
  const Fit f = fit(t.bodies());
  return f.poly.coefficient(Exponent(d, 1)) / exactgeom::factorial(static_cast<unsigned>(d));
}

MixedVolumeReport mixed_volume_report(const BodyTuple& t, Method method) {
  const auto start = std::chrono::steady_clock::now();
  Rat value;
  std::size_t terms = 0;
  if (method == Method::inclusion_exclusion) {
    std::tie(value, terms) = inclusion_exclusion(t);
  } else {
    const std::size_t d = t.dim();
    Fit f = fit(t.bodies());
    value = f.poly.coefficient(Exponent(d, 1)) / exactgeom::factorial(static_cast<unsigned>(d));
    terms = f.evaluations;
  }
  if (value.sign() < 0) throw InternalError("mixed volume is negative: " + value.str());
  return {std::move(value), method, terms, std::chrono::steady_clock::now() - start};
}

Rat MinkowskiPolynomial::coefficient(const Exponent& alpha) const {
  auto it = coeffs_.find(alpha);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

Rat MinkowskiPolynomial::evaluate(std::span<const Rat> t) const {
  if (t.size() != body_count_) throw ValidityError("evaluate: wrong number of weights");
  Rat r(0);
  for (const auto& [alpha, c] : coeffs_) r += c * monomial(alpha, t);
  return r;
}

MinkowskiPolynomial minkowski_polynomial(std::span<const Polytope> bodies) {
  check_common_dim(bodies, "minkowski_polynomial");
  return fit(bodies).poly;
}

Report ssz_check(const Polytope& k, const BodyTuple& t) {
  const std::size_t d = t.dim();
  if (k.ambient_dim() != d) throw ValidityError("ssz_check: K has the wrong dimension");
  if (k.empty()) throw ValidityError("ssz_check: K is empty");

  std::vector<Polytope> k_then_last(d, k);
  k_then_last[d - 1] = t[d - 1];
  std::vector<Polytope> first_then_k(t.bodies().begin(), t.bodies().end());
  first_then_k[d - 1] = k;

  const Rat lhs = mixed_volume(t) * exactgeom::volume(k);
  const Rat rhs = Rat(static_cast<long>(d)) * mixed_volume(BodyTuple(k_then_last)) *
                  mixed_volume(BodyTuple(first_then_k));
  Report report("ssz");
  Check c{"ssz_inequality", lhs, rhs, lhs <= rhs, "slack=" + (rhs - lhs).str(), std::nullopt};
  if (!c.pass) {
    nlohmann::json w{{"K", exactgeom::polytope_to_json(k)}, {"bodies", nlohmann::json::array()}};
    for (const auto& b : t.bodies()) w["bodies"].push_back(exactgeom::polytope_to_json(b));
    c.witness = std::move(w);
  }
  report.add(std::move(c));
  return report;
}

}  // namespace mixedbody::mixedvol
