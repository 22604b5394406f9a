#include "mixedbody/okounkov/toric.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "mixedbody/error.hpp"
#include "mixedbody/exactgeom/json_io.hpp"
#include "mixedbody/mixedvol/mixed_volume.hpp"
#include "mixedbody/slicecalc/conditions.hpp"

namespace mixedbody::okounkov {

using exactgeom::Matrix;
using exactgeom::Point;
using exactgeom::Vec;
using nlohmann::json;

namespace {

std::int64_t to_int64(const Rat& x, const char* what) {
  if (!x.is_integer() || !x.num().fits_slong_p()) {
    throw InternalError(std::string(what) + ": value " + x.str() + " is not a machine integer");
  }
  return x.num().get_si();
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw InternalError("integer overflow in lattice arithmetic");
  return r;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw InternalError("integer overflow in lattice arithmetic");
  return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

Matrix to_rat(const IntMatrix& m) {
  Matrix out;
  for (const auto& row : m) {
    Vec r;
    for (auto x : row) r.emplace_back(static_cast<long>(x));
    out.push_back(std::move(r));
  }
  return out;
}

Point to_rat(const LatticePoint& a) {
  Point out;
  for (auto x : a) out.emplace_back(static_cast<long>(x));
  return out;
}

Point apply_matrix(const IntMatrix& m, const Point& x) {
  Point y(m.size());
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < x.size(); ++c) {
      if (m[r][c] != 0) y[r] += Rat(static_cast<long>(m[r][c])) * x[c];
    }
  }
  return y;
}

std::string bundle_name(const ToricBundle& t, std::size_t index) {
  return t.label().empty() ? "bundle " + std::to_string(index) : t.label();
}

IntMatrix identity(std::size_t d) {
  IntMatrix m(d, std::vector<std::int64_t>(d, 0));
  for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

json bundles_witness(std::span<const ToricBundle> ts, const FlagValuation& nu) {
  json w{{"bundles", json::array()}, {"flag", flag_to_json(nu)}};
  for (const auto& t : ts) w["bundles"].push_back(bundle_to_json(t));
  return w;
}

}  // namespace

ToricBundle::ToricBundle(Polytope polytope, std::string label)
    : polytope_(std::move(polytope)), label_(std::move(label)) {
  if (polytope_.empty() || !polytope_.full_dimensional() || polytope_.ambient_dim() == 0) {
    throw ValidityError("toric bundle '" + label_ + "': moment polytope must be full-dimensional");
  }
  for (const auto& v : polytope_.vertices()) {
    for (const auto& x : v) {
      if (!x.is_integer()) {
        throw ValidityError("toric bundle '" + label_ + "': vertex coordinate " + x.str() + " is not an integer");
      }
    }
  }
}

ToricBundle tensor(const ToricBundle& a, const ToricBundle& b) {
  return ToricBundle(exactgeom::minkowski_sum(a.polytope(), b.polytope()), a.label() + "*" + b.label());
}

ToricBundle power(const ToricBundle& t, unsigned p) {
  if (p == 0) throw ValidityError("power: exponent must be positive");
  return ToricBundle(exactgeom::scale(t.polytope(), Rat(static_cast<long>(p))),
                     t.label() + "^" + std::to_string(p));
}

FlagValuation::FlagValuation(IntMatrix matrix, LatticePoint vertex)
    : matrix_(std::move(matrix)), vertex_(std::move(vertex)) {
  const std::size_t d = vertex_.size();
  if (d == 0) throw ValidityError("flag: empty base vertex");
  if (matrix_.size() != d) throw ValidityError("flag: matrix must be d x d with d = vertex length");
  for (const auto& row : matrix_) {
    if (row.size() != d) throw ValidityError("flag: matrix must be square");
  }
  const Matrix m = to_rat(matrix_);
  if (abs(exactgeom::determinant(m)) != Rat(1)) throw ValidityError("flag: matrix is not unimodular");
  inverse_.assign(d, std::vector<std::int64_t>(d, 0));
  for (std::size_t c = 0; c < d; ++c) {
    Vec e(d);
    e[c] = Rat(1);
    auto col = exactgeom::solve(m, e);
    if (!col) throw InternalError("flag: singular unimodular matrix");
    for (std::size_t r = 0; r < d; ++r) inverse_[r][c] = to_int64((*col)[r], "flag inverse");
  }
}

bool FlagValuation::valid_for(const ToricBundle& t) const {
  if (t.dim() != dim()) return false;
  const Point v = to_rat(vertex_);
  for (const auto& x : t.polytope().vertices()) {
    for (const auto& y : apply_matrix(matrix_, x - v)) {
      if (y.sign() < 0) return false;
    }
  }
  return true;
}

void FlagValuation::require_valid(const ToricBundle& t) const {
  if (t.dim() != dim()) {
    throw ValidityError("flag of dimension " + std::to_string(dim()) + " used with bundle '" + t.label() +
                        "' of dimension " + std::to_string(t.dim()));
  }
  if (!valid_for(t)) {
    throw ValidityError("flag is not valid for bundle '" + t.label() + "': M (P - v) leaves the orthant");
  }
}

std::vector<LatticePoint> ToricSectionSystem::sections(unsigned m) const {
  return okounkov::sections(bundle_, m);
}

std::vector<LatticePoint> sections(const ToricBundle& t, unsigned m) {
  if (m == 0) throw ValidityError("sections: m must be positive");
  const std::size_t d = t.dim();
  const auto mm = static_cast<std::int64_t>(m);
  struct Ineq {
    std::vector<std::int64_t> a;
    std::int64_t b;
  };
  std::vector<Ineq> ineqs;
  for (const auto& f : t.polytope().hrep().facets) {
    Ineq q;
    for (const auto& x : f.normal) q.a.push_back(to_int64(x, "sections"));
    q.b = mul(to_int64(f.offset, "sections"), mm);
    ineqs.push_back(std::move(q));
  }
  std::vector<std::int64_t> lo(d), hi(d);
  for (std::size_t c = 0; c < d; ++c) {
    auto [l, h] = exactgeom::coordinate_range(t.polytope(), c);
    lo[c] = mul(to_int64(l, "sections"), mm);
    hi[c] = mul(to_int64(h, "sections"), mm);
  }

  // Nested scan over the first d-1 coordinates; the last one is solved
  // for from the inequalities.
  std::vector<LatticePoint> out;
  LatticePoint x(lo);
  auto recurse = [&](auto&& self, std::size_t c) -> void {
    if (c + 1 == d) {
      std::int64_t top = hi[c], bottom = lo[c];
      for (std::size_t i = 0; i < ineqs.size(); ++i) {
        std::int64_t rest = 0;
        for (std::size_t k = 0; k + 1 < d; ++k) rest = add(rest, mul(ineqs[i].a[k], x[k]));
        const std::int64_t slack = ineqs[i].b - rest;
        const std::int64_t a = ineqs[i].a[c];
        if (a > 0) {
          top = std::min(top, floor_div(slack, a));
        } else if (a < 0) {
          bottom = std::max(bottom, ceil_div(slack, a));
        } else if (slack < 0) {
          return;
        }
      }
      for (std::int64_t y = bottom; y <= top; ++y) {
        x[c] = y;
        out.push_back(x);
      }
      return;
    }
    for (std::int64_t y = lo[c]; y <= hi[c]; ++y) {
      x[c] = y;
      self(self, c + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

LatticePoint valuation_image(const FlagValuation& nu, const LatticePoint& a, unsigned m) {
  const std::size_t d = nu.dim();
  if (a.size() != d) throw ValidityError("valuation_image: dimension mismatch");
  LatticePoint shifted(d);
  for (std::size_t i = 0; i < d; ++i) shifted[i] = a[i] - mul(static_cast<std::int64_t>(m), nu.vertex()[i]);
  LatticePoint out(d, 0);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) out[r] = add(out[r], mul(nu.matrix()[r][c], shifted[c]));
    if (out[r] < 0) throw ValidityError("valuation_image: negative value; the flag is not valid for this bundle");
  }
  return out;
}

Polytope approximant(const GradedSectionSystem& s, const FlagValuation& nu, unsigned m) {
  if (s.dim() != nu.dim()) throw ValidityError("approximant: dimension mismatch");
  const std::vector<LatticePoint> pts = s.sections(m);
  if (pts.empty()) throw ValidityError("approximant: no sections at level " + std::to_string(m));
  // The map a -> nu(a)/m is affine, so hull first. Within a run of points
  // sharing all but the last coordinate only the two ends can be vertices.
  std::vector<Point> ends;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const bool first = i == 0 || !std::equal(pts[i].begin(), pts[i].end() - 1, pts[i - 1].begin());
    const bool last = i + 1 == pts.size() || !std::equal(pts[i].begin(), pts[i].end() - 1, pts[i + 1].begin());
    if (first || last) ends.push_back(to_rat(pts[i]));
  }
  const Polytope h = exactgeom::hull(ends, s.dim());
  std::vector<Point> images;
  const Rat inv_m(mpz_class(1), mpz_class(static_cast<unsigned long>(m)));
  for (const auto& x : h.vertices()) {
    LatticePoint a;
    for (const auto& c : x) a.push_back(to_int64(c, "approximant"));
    images.push_back(inv_m * to_rat(valuation_image(nu, a, m)));
  }
  return exactgeom::hull(images, s.dim());
}

Polytope approximant(const ToricBundle& t, const FlagValuation& nu, unsigned m) {
  return approximant(ToricSectionSystem(t), nu, m);
}

Polytope okounkov_body(const ToricBundle& t, const FlagValuation& nu) {
  nu.require_valid(t);
  const Point v = to_rat(nu.vertex());
  Point offset = apply_matrix(nu.matrix(), v);
  for (auto& x : offset) x = -x;
  Polytope body = exactgeom::affine_image(t.polytope(), to_rat(nu.matrix()), offset);

  const Polytope first = approximant(t, nu, 1);
  if (t.dim() == 2 ? !(first == body) : !exactgeom::is_subset(first, body)) {
    throw InternalError("okounkov_body: first approximant disagrees with M (P - v)");
  }
  if (!exactgeom::is_subset(approximant(t, nu, 2), body)) {
    throw InternalError("okounkov_body: second approximant escapes M (P - v)");
  }
  return body;
}

Rat intersection_number(std::span<const ToricBundle> ts) {
  if (ts.empty()) throw ValidityError("intersection_number: no bundles");
  const std::size_t d = ts.size();
  std::vector<Polytope> ps;
  for (std::size_t i = 0; i < d; ++i) {
    if (ts[i].dim() != d) {
      throw ValidityError("intersection_number: " + bundle_name(ts[i], i) + " has dimension " +
                          std::to_string(ts[i].dim()) + ", expected " + std::to_string(d));
    }
    ps.push_back(ts[i].polytope());
  }
  Rat value = exactgeom::factorial(static_cast<unsigned>(d)) * mixedvol::mixed_volume(mixedvol::BodyTuple(ps));
  if (!value.is_integer() || value.sign() < 0) {
    throw InternalError("intersection_number: d! V = " + value.str() + " is not a non-negative integer");
  }
  return value;
}

Report theorem_check(std::span<const ToricBundle> ts, const FlagValuation& nu) {
  Report report("theorem_check");
  const std::size_t d = ts.size();
  const Rat lhs = intersection_number(ts);
  std::vector<Polytope> bodies;
  for (std::size_t i = 0; i < d; ++i) {
    if (!nu.valid_for(ts[i])) {
      throw ValidityError("theorem_check: flag is not valid for bundle " + std::to_string(i) + " ('" +
                          ts[i].label() + "'): no common flag");
    }
    bodies.push_back(okounkov_body(ts[i], nu));
  }
  const Rat rhs = exactgeom::factorial(static_cast<unsigned>(d)) * mixedvol::mixed_volume(mixedvol::BodyTuple(bodies));
  Check c{"intersection", lhs, rhs, lhs == rhs, {}, std::nullopt};
  if (!c.pass) c.witness = bundles_witness(ts, nu);
  report.add(std::move(c));
  for (std::size_t i = 0; i < d; ++i) {
    const Rat vb = exactgeom::volume(bodies[i]);
    const Rat vp = exactgeom::volume(ts[i].polytope());
    Check v{"volume:" + bundle_name(ts[i], i), vb, vp, vb == vp, {}, std::nullopt};
    if (!v.pass) v.witness = json{{"body", exactgeom::polytope_to_json(bodies[i])}, {"bundle", bundle_to_json(ts[i])}};
    report.add(std::move(v));
  }
  return report;
}

Report subadditivity_check(const ToricBundle& a, const ToricBundle& b, const FlagValuation& nu, unsigned m_max) {
  nu.require_valid(a);
  nu.require_valid(b);
  const ToricBundle ab = tensor(a, b);
  LatticePoint v2 = nu.vertex();
  for (auto& x : v2) x = mul(x, 2);
  const FlagValuation nu2(nu.matrix(), v2);
  nu2.require_valid(ab);

  Report report("subadditivity");
  const Polytope lhs = exactgeom::minkowski_sum(okounkov_body(a, nu), okounkov_body(b, nu));
  const Polytope rhs = okounkov_body(ab, nu2);
  const Rat vl = exactgeom::volume(lhs), vr = exactgeom::volume(rhs);
  auto witness = [&] {
    return json{{"sum_of_bodies", exactgeom::polytope_to_json(lhs)}, {"body_of_product", exactgeom::polytope_to_json(rhs)}};
  };
  Check inc{"inclusion", vl, vr, exactgeom::is_subset(lhs, rhs), {}, std::nullopt};
  if (!inc.pass) inc.witness = witness();
  report.add(std::move(inc));
  Check eq{"equality", vl, vr, lhs == rhs, {}, std::nullopt};
  if (!eq.pass) eq.witness = witness();
  report.add(std::move(eq));

  for (unsigned m = 1; m <= m_max; ++m) {
    std::set<LatticePoint> target;
    for (const auto& s : sections(ab, m)) target.insert(valuation_image(nu2, s, m));
    const auto sa = sections(a, m), sb = sections(b, m);
    std::vector<LatticePoint> va, vb;
    for (const auto& s : sa) va.push_back(valuation_image(nu, s, m));
    for (const auto& s : sb) vb.push_back(valuation_image(nu, s, m));
    long hits = 0, total = 0;
    std::optional<json> miss;
    for (const auto& x : va) {
      for (const auto& y : vb) {
        LatticePoint z(x.size());
        for (std::size_t i = 0; i < z.size(); ++i) z[i] = add(x[i], y[i]);
        ++total;
        if (target.count(z)) {
          ++hits;
        } else if (!miss) {
          miss = json{{"m", m}, {"nu_a", x}, {"nu_b", y}};
        }
      }
    }
    Check c{"sections@m=" + std::to_string(m), Rat(hits), Rat(total), hits == total, {}, std::move(miss)};
    report.add(std::move(c));
  }
  return report;
}

InnerFacet inner_facet(const ToricBundle& t, std::size_t facet_index) {
  const auto& facets = t.polytope().hrep().facets;
  if (facet_index >= facets.size()) {
    throw ValidityError("facet index " + std::to_string(facet_index) + " out of range (polytope has " +
                        std::to_string(facets.size()) + " facets)");
  }
  const auto& f = facets[facet_index];
  Vec n;
  for (const auto& x : f.normal) n.push_back(-x);
  return {std::move(n), -f.offset};
}

std::size_t facet_with_normal(const ToricBundle& t, const Vec& inner_normal) {
  const auto& facets = t.polytope().hrep().facets;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (inner_facet(t, i).normal == inner_normal) return i;
  }
  throw ValidityError("bundle '" + t.label() + "' has no facet with the requested inner normal");
}

Rat mu_threshold(const ToricBundle& t, std::size_t facet_index) {
  const InnerFacet f = inner_facet(t, facet_index);
  Rat best(0);
  for (const auto& x : t.polytope().vertices()) best = std::max(best, exactgeom::dot(f.normal, x) - f.offset);
  return best;
}

FlagValuation flag_for_matrix(const IntMatrix& m, std::span<const ToricBundle> ts) {
  if (ts.empty()) throw ValidityError("flag_for_matrix: no bundles");
  const std::size_t d = m.size();
  std::vector<std::optional<Rat>> w(d);
  for (const auto& t : ts) {
    if (t.dim() != d) throw ValidityError("flag_for_matrix: dimension mismatch");
    for (const auto& x : t.polytope().vertices()) {
      const Point y = apply_matrix(m, x);
      for (std::size_t i = 0; i < d; ++i) {
        if (!w[i] || y[i] < *w[i]) w[i] = y[i];
      }
    }
  }
  // Build once to get the inverse, then place v.
  FlagValuation probe(m, LatticePoint(d, 0));
  LatticePoint v(d, 0);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) v[r] = add(v[r], mul(probe.inverse()[r][c], to_int64(*w[c], "flag_for_matrix")));
  }
  return FlagValuation(m, std::move(v));
}

FlagValuation adapted_flag(const ToricBundle& t, std::size_t facet_index) {
  const InnerFacet f = inner_facet(t, facet_index);
  const std::size_t d = t.dim();
  // Integer column operations reduce the primitive row n to e_1; applied
  // to the identity they give U with n U = e_1, so M = U^{-1} has first
  // row n.
  std::vector<std::int64_t> row;
  for (const auto& x : f.normal) row.push_back(to_int64(x, "adapted_flag"));
  IntMatrix u = identity(d);
  auto col_axpy = [&](std::size_t dst, std::size_t src, std::int64_t q) {
    row[dst] -= q * row[src];
    for (std::size_t r = 0; r < d; ++r) u[r][dst] -= q * u[r][src];
  };
  for (;;) {
    std::size_t k = d;
    for (std::size_t i = 0; i < d; ++i) {
      if (row[i] != 0 && (k == d || std::abs(row[i]) < std::abs(row[k]))) k = i;
    }
    bool done = true;
    for (std::size_t j = 0; j < d; ++j) {
      if (j != k && row[j] != 0) {
        col_axpy(j, k, row[j] / row[k]);
        done = false;
      }
    }
    if (done) {
      for (std::size_t r = 0; r < d; ++r) std::swap(u[r][0], u[r][k]);
      std::swap(row[0], row[k]);
      break;
    }
  }
  if (row[0] == -1) {
    for (std::size_t r = 0; r < d; ++r) u[r][0] = -u[r][0];
  } else if (row[0] != 1) {
    throw InternalError("adapted_flag: facet normal is not primitive");
  }
  const FlagValuation inv(u, LatticePoint(d, 0));
  const ToricBundle one[] = {t};
  return flag_for_matrix(inv.inverse(), one);
}

std::vector<FlagValuation> common_flags(std::span<const ToricBundle> ts, std::size_t count) {
  if (ts.empty()) throw ValidityError("common_flags: no bundles");
  const std::size_t d = ts[0].dim();
  std::vector<IntMatrix> candidates{identity(d)};
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      IntMatrix p = identity(d);
      std::swap(p[i], p[j]);
      candidates.push_back(std::move(p));
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (i == j) continue;
      for (std::int64_t s : {1, -1}) {
        IntMatrix e = identity(d);
        e[i][j] = s;
        candidates.push_back(std::move(e));
      }
    }
  }
  for (std::size_t i = 0; i <= d; ++i) {
    IntMatrix neg = identity(d);
    for (std::size_t k = 0; k < d; ++k) {
      if (i == d || k == i) neg[k][k] = -1;
    }
    candidates.push_back(std::move(neg));
  }
  std::vector<FlagValuation> out;
  for (const auto& m : candidates) {
    if (out.size() >= count) break;
    FlagValuation f = flag_for_matrix(m, ts);
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
  }
  return out;
}

Report slice_formula_check(const ToricBundle& t, const FlagValuation& nu, std::size_t facet_index,
                           std::span<const Rat> taus) {
  nu.require_valid(t);
  const InnerFacet f = inner_facet(t, facet_index);
  const std::size_t d = t.dim();
  Vec first;
  for (auto x : nu.matrix()[0]) first.emplace_back(static_cast<long>(x));
  const Point v = to_rat(nu.vertex());
  if (first != f.normal || exactgeom::dot(first, v) != f.offset) {
    throw ValidityError("slice_formula_check: the flag's first step is not the selected facet");
  }
  if (d < 2) throw ValidityError("slice_formula_check: needs d >= 2");
  const Rat mu = mu_threshold(t, facet_index);
  const Polytope body = okounkov_body(t, nu);
  IntMatrix rest(nu.matrix().begin() + 1, nu.matrix().end());
  Point e(d);
  for (std::size_t r = 0; r < d; ++r) e[r] = Rat(static_cast<long>(nu.inverse()[r][0]));
  const auto& outer = t.polytope().hrep().facets[facet_index];

  Report report("slice_formula");
  for (const auto& tau : taus) {
    if (tau == mu) {
      report.note("tau = " + tau.str() + " equals the threshold; skipped");
      continue;
    }
    const Polytope lhs = exactgeom::slice(body, tau);
    const Rat level = outer.offset - tau;
    const Polytope tightened = exactgeom::clip(t.polytope(), outer.normal, level);
    const Polytope restricted = exactgeom::face(tightened, outer.normal, level);
    const Point base = v + tau * e;
    std::vector<Point> pts;
    for (const auto& x : restricted.vertices()) pts.push_back(apply_matrix(rest, x - base));
    const Polytope rhs = exactgeom::hull(pts, d - 1);
    const bool beyond = tau > mu;
    Check c{"slice@" + tau.str(), exactgeom::volume(lhs), exactgeom::volume(rhs),
            lhs == rhs && (!beyond || lhs.empty()), beyond ? "beyond threshold, both sides empty" : "", std::nullopt};
    if (!c.pass) {
      c.witness = json{{"tau", tau.str()},
                       {"slice_of_body", exactgeom::polytope_to_json(lhs)},
                       {"restricted_body", exactgeom::polytope_to_json(rhs)}};
    }
    report.add(std::move(c));
  }
  return report;
}

Report lemma51_check(std::span<const ToricBundle> ts, const FlagValuation& nu, const Rat& r1) {
  const std::size_t d = ts.size();
  if (d < 2) throw ValidityError("lemma51_check: needs d >= 2 bundles");
  for (std::size_t i = 0; i < d; ++i) {
    if (ts[i].dim() != d) throw ValidityError("lemma51_check: " + bundle_name(ts[i], i) + " has the wrong dimension");
    nu.require_valid(ts[i]);
  }
  Vec first;
  for (auto x : nu.matrix()[0]) first.emplace_back(static_cast<long>(x));
  const std::size_t facet = facet_with_normal(ts[0], first);
  if (inner_facet(ts[0], facet).offset != exactgeom::dot(first, to_rat(nu.vertex()))) {
    throw ValidityError("lemma51_check: the flag's first step does not pass through the facet of " +
                        bundle_name(ts[0], 0));
  }
  const Rat mu = mu_threshold(ts[0], facet);
  if (r1 != mu) {
    throw ValidityError("lemma51_check: r1 = " + r1.str() + " but the facet threshold is " + mu.str());
  }

  std::vector<Polytope> bodies;
  for (const auto& t : ts) bodies.push_back(okounkov_body(t, nu));
  Report report("lemma51");
  Report a = slicecalc::check_condition_a(bodies[0], r1, slicecalc::certificate_grid_a(bodies[0], r1));
  if (!a.passed()) {
    report.note(bundle_name(ts[0], 0) + ": the body is not a cone over its base slice of height r1, so L_1 is not of the form r1 O(Y_1)");
  }
  report.merge(a, "a:");
  for (std::size_t j = 1; j < d; ++j) {
    report.merge(slicecalc::check_condition_b(bodies[0], bodies[j], r1, slicecalc::certificate_grid_b(bodies[j])),
                 "b" + std::to_string(j + 1) + ":");
  }
  if (report.passed()) {
    auto res = slicecalc::lemma31_both_sides(mixedvol::BodyTuple(bodies), r1, {.strict = true, .extra_taus = {}});
    Check id = res.report.checks().back();
    id.name = "slice_identity";
    report.add(std::move(id));
  }
  return report;
}

json bundle_to_json(const ToricBundle& t) {
  return json{{"dim", t.dim()}, {"polytope", exactgeom::polytope_to_json(t.polytope())}, {"label", t.label()}};
}

ToricBundle bundle_from_json(const json& j) {
  if (!j.is_object() || !j.contains("polytope")) throw ParseError("bundle: expected an object with \"polytope\"");
  Polytope p = exactgeom::polytope_from_json(j.at("polytope"));
  if (j.contains("dim")) {
    if (!j.at("dim").is_number_unsigned() || j.at("dim").get<std::size_t>() != p.ambient_dim()) {
      throw ParseError("bundle: \"dim\" does not match the polytope");
    }
  }
  std::string label;
  if (j.contains("label")) {
    if (!j.at("label").is_string()) throw ParseError("bundle: \"label\" must be a string");
    label = j.at("label").get<std::string>();
  }
  return ToricBundle(std::move(p), std::move(label));
}

json flag_to_json(const FlagValuation& nu) { return json{{"matrix", nu.matrix()}, {"vertex", nu.vertex()}}; }

FlagValuation flag_from_json(const json& j) {
  if (!j.is_object() || !j.contains("matrix") || !j.contains("vertex")) {
    throw ParseError("flag: expected an object with \"matrix\" and \"vertex\"");
  }
  auto ints = [](const json& row, const char* what) {
    if (!row.is_array()) throw ParseError(std::string("flag: ") + what + " must be an array");
    std::vector<std::int64_t> out;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw ParseError(std::string("flag: ") + what + " entries must be integers");
      out.push_back(x.get<std::int64_t>());
    }
    return out;
  };
  if (!j.at("matrix").is_array()) throw ParseError("flag: matrix must be an array of rows");
  IntMatrix m;
  for (const auto& row : j.at("matrix")) m.push_back(ints(row, "matrix row"));
  return FlagValuation(std::move(m), ints(j.at("vertex"), "vertex"));
}

}  // namespace mixedbody::okounkov
