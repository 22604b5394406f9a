#include "mixedbody/exactgeom/polytope.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "mixedbody/error.hpp"

namespace mixedbody::exactgeom {

namespace {

const HRep& empty_hrep() {
  static const HRep h;
  return h;
}

void require_same_dim(const Polytope& p, const Polytope& q, const char* op) {
  if (p.ambient_dim() != q.ambient_dim()) {
    throw ValidityError(std::string(op) + ": ambient dimensions " +
                        std::to_string(p.ambient_dim()) + " and " +
                        std::to_string(q.ambient_dim()) + " differ");
  }
}

Point divide_segment(const Point& u, const Point& w, const Rat& su, const Rat& sw) {
  // Point on [u, w] where the affine function with values su, sw vanishes.
  const Rat t = su / (su - sw);
  return u + t * (w - u);
}

}  // namespace

Polytope::Polytope(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

Polytope::Polytope(std::size_t ambient_dim, std::vector<Point> vertices, int affine_dim,
                   std::shared_ptr<const HRep> hrep)
    : ambient_dim_(ambient_dim),
      vertices_(std::move(vertices)),
      affine_dim_(affine_dim),
      hrep_(std::move(hrep)) {}

const HRep& Polytope::hrep() const { return hrep_ ? *hrep_ : empty_hrep(); }

bool Polytope::contains(const Point& x) const {
  if (x.size() != ambient_dim_) throw ValidityError("contains: point dimension mismatch");
  if (empty()) return false;
  const HRep& h = hrep();
  for (const auto& eq : h.equalities) {
    if (dot(eq.normal, x) != eq.offset) return false;
  }
  for (const auto& f : h.facets) {
    if (dot(f.normal, x) > f.offset) return false;
  }
  return true;
}

Rat volume(const Polytope& p) {
  if (p.empty()) return Rat(0);
  const std::size_t d = p.ambient_dim();
  if (d == 0) return Rat(1);
  if (!p.full_dimensional()) return Rat(0);
  if (d == 1) {
    auto [lo, hi] = coordinate_range(p, 0);
    return hi - lo;
  }
  // Cone from the lexicographically smallest vertex over every facet
  // missing it. The facet's (d-1)-volume times its distance from the apex
  // equals (offset - normal . apex) * vol(projection) / |normal_i| when
  // coordinate i is dropped, so everything stays rational.
  const Point& apex = p.vertices().front();
  Rat sum(0);
  for (const auto& f : p.hrep().facets) {
    const Rat height = f.offset - dot(f.normal, apex);
    if (height.is_zero()) continue;
    std::size_t drop = 0;
    while (f.normal[drop].is_zero()) ++drop;
    std::vector<Point> projected;
    projected.reserve(f.vertices.size());
    for (auto vi : f.vertices) {
      const Point& x = p.vertices()[vi];
      Point y;
      y.reserve(d - 1);
      for (std::size_t c = 0; c < d; ++c) {
        if (c != drop) y.push_back(x[c]);
      }
      projected.push_back(std::move(y));
    }
    sum += height * volume(hull(projected, d - 1)) / abs(f.normal[drop]);
  }
  return sum / Rat(static_cast<long>(d));
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  require_same_dim(p, q, "minkowski_sum");
  if (p.empty() || q.empty()) throw ValidityError("minkowski_sum: empty operand");
  std::vector<Point> pts;
  pts.reserve(p.vertex_count() * q.vertex_count());
  for (const auto& u : p.vertices()) {
    for (const auto& w : q.vertices()) pts.push_back(u + w);
  }
  return hull(pts, p.ambient_dim());
}

Polytope weighted_sum(std::span<const Polytope> bodies, std::span<const Rat> weights) {
  if (bodies.empty()) throw ValidityError("weighted_sum: no bodies");
  if (bodies.size() != weights.size()) throw ValidityError("weighted_sum: weight count mismatch");
  Polytope acc = scale(bodies[0], weights[0]);
  for (std::size_t i = 1; i < bodies.size(); ++i) {
    acc = minkowski_sum(acc, scale(bodies[i], weights[i]));
  }
  return acc;
}

Polytope scale(const Polytope& p, const Rat& lambda) {
  if (lambda.sign() < 0) throw ValidityError("scale: negative factor " + lambda.str());
  if (p.empty()) return p;
  if (lambda.is_zero()) {
    std::vector<Point> origin{Point(p.ambient_dim())};
    return hull(origin, p.ambient_dim());
  }
  std::vector<Point> vertices = p.vertices();
  for (auto& v : vertices) {
    for (auto& x : v) x *= lambda;
  }
  auto h = std::make_shared<HRep>(p.hrep());
  for (auto& eq : h->equalities) eq.offset *= lambda;
  for (auto& f : h->facets) f.offset *= lambda;
  return Polytope(p.ambient_dim(), std::move(vertices), p.dim(), std::move(h));
}

Polytope translate(const Polytope& p, const Point& t) {
  if (t.size() != p.ambient_dim()) throw ValidityError("translate: dimension mismatch");
  if (p.empty()) return p;
  std::vector<Point> vertices = p.vertices();
  for (auto& v : vertices) v = v + t;
  auto h = std::make_shared<HRep>(p.hrep());
  for (auto& eq : h->equalities) eq.offset += dot(eq.normal, t);
  for (auto& f : h->facets) f.offset += dot(f.normal, t);
  return Polytope(p.ambient_dim(), std::move(vertices), p.dim(), std::move(h));
}

Polytope affine_image(const Polytope& p, const Matrix& m, const Point& offset) {
  const std::size_t d = p.ambient_dim();
  if (m.size() != d || offset.size() != d) throw ValidityError("affine_image: dimension mismatch");
  for (const auto& row : m) {
    if (row.size() != d) throw ValidityError("affine_image: matrix is not square");
  }
  std::vector<Point> pts;
  pts.reserve(p.vertex_count());
  for (const auto& v : p.vertices()) {
    Point y(d);
    for (std::size_t r = 0; r < d; ++r) y[r] = dot(m[r], v) + offset[r];
    pts.push_back(std::move(y));
  }
  return hull(pts, d);
}

Polytope slice(const Polytope& p, const Rat& tau) {
  const std::size_t d = p.ambient_dim();
  if (d == 0) throw ValidityError("slice: ambient dimension 0");
  const auto& vs = p.vertices();
  std::vector<Rat> s(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) s[i] = vs[i][0] - tau;

  std::vector<Point> pts;
  auto drop_first = [](const Point& x) { return Point(x.begin() + 1, x.end()); };
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (s[i].is_zero()) pts.push_back(drop_first(vs[i]));
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (s[i].sign() >= 0) continue;
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (s[j].sign() <= 0) continue;
      pts.push_back(drop_first(divide_segment(vs[i], vs[j], s[i], s[j])));
    }
  }
  return hull(pts, d - 1);
}

Polytope clip(const Polytope& p, const Vec& normal, const Rat& offset) {
  const std::size_t d = p.ambient_dim();
  if (normal.size() != d) throw ValidityError("clip: normal dimension mismatch");
  const auto& vs = p.vertices();
  std::vector<Rat> s(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) s[i] = dot(normal, vs[i]) - offset;
  std::vector<Point> pts;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (s[i].sign() <= 0) pts.push_back(vs[i]);
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (s[i].sign() >= 0) continue;
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (s[j].sign() <= 0) continue;
      pts.push_back(divide_segment(vs[i], vs[j], s[i], s[j]));
    }
  }
  return hull(pts, d);
}

Polytope face(const Polytope& p, const Vec& normal, const Rat& offset) {
  if (normal.size() != p.ambient_dim()) throw ValidityError("face: normal dimension mismatch");
  std::vector<Point> pts;
  for (const auto& v : p.vertices()) {
    if (dot(normal, v) == offset) pts.push_back(v);
  }
  return hull(pts, p.ambient_dim());
}

bool is_subset(const Polytope& p, const Polytope& q) {
  require_same_dim(p, q, "is_subset");
  if (p.empty()) return true;
  if (q.empty()) return false;
  return std::all_of(p.vertices().begin(), p.vertices().end(),
                     [&](const Point& v) { return q.contains(v); });
}

std::pair<Rat, Rat> coordinate_range(const Polytope& p, std::size_t axis) {
  if (p.empty()) throw ValidityError("coordinate_range: empty polytope");
  if (axis >= p.ambient_dim()) throw ValidityError("coordinate_range: axis out of range");
  Rat lo = p.vertices().front()[axis];
  Rat hi = lo;
  for (const auto& v : p.vertices()) {
    lo = std::min(lo, v[axis]);
    hi = std::max(hi, v[axis]);
  }
  return {lo, hi};
}

Polytope standard_simplex(std::size_t d, const Rat& r) {
  std::vector<Point> pts{Point(d)};
  for (std::size_t i = 0; i < d; ++i) {
    Point e(d);
    e[i] = r;
    pts.push_back(std::move(e));
  }
  return hull(pts, d);
}

Polytope box(const std::vector<Rat>& lower, const std::vector<Rat>& upper) {
  const std::size_t d = lower.size();
  if (upper.size() != d) throw ValidityError("box: bound length mismatch");
  std::vector<Point> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    Point x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = (mask >> i & 1) ? upper[i] : lower[i];
    pts.push_back(std::move(x));
  }
  return hull(pts, d);
}

}  // namespace mixedbody::exactgeom
