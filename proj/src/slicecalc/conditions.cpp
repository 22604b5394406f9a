#include "mixedbody/slicecalc/conditions.hpp"

#include <algorithm>
#include <string>

#include "mixedbody/error.hpp"
#include "mixedbody/exactgeom/json_io.hpp"
#include "mixedbody/slicecalc/slice_profile.hpp"

namespace mixedbody::slicecalc {

using exactgeom::polytope_to_json;
using nlohmann::json;

namespace {

void require_positive(const Rat& r, const char* op) {
  if (r.sign() <= 0) throw ValidityError(std::string(op) + ": r must be positive, got " + r.str());
}

void require_orthant(const Polytope& k, const char* op) {
  if (k.empty()) throw ValidityError(std::string(op) + ": empty body");
  for (const auto& v : k.vertices()) {
    for (const auto& x : v) {
      if (x.sign() < 0) throw ValidityError(std::string(op) + ": body leaves the non-negative orthant");
    }
  }
}

std::vector<Rat> with_midpoints(std::vector<Rat> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Rat> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out.push_back(pts[i]);
    if (i + 1 < pts.size()) out.push_back((pts[i] + pts[i + 1]) / Rat(2));
  }
  return out;
}

std::vector<Rat> merged(std::vector<Rat> a, std::span<const Rat> b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

Polytope sum_or_empty(const Polytope& a, const Polytope& b) {
  if (a.empty() || b.empty()) return Polytope(a.ambient_dim());
  return exactgeom::minkowski_sum(a, b);
}

}  // namespace

std::vector<Rat> certificate_grid_a(const Polytope& k1, const Rat& r, std::span<const Rat> extra) {
  require_positive(r, "certificate_grid_a");
  std::vector<Rat> pts{Rat(0)};
  for (const auto& b : breakpoints(k1)) {
    if (b.sign() >= 0 && b < r) pts.push_back(b);
  }
  auto grid = with_midpoints(std::move(pts));
  grid.push_back((grid.back() + r) / Rat(2));
  std::vector<Rat> in_range;
  for (const auto& t : extra) {
    if (t.sign() >= 0 && t < r) in_range.push_back(t);
  }
  return merged(std::move(grid), in_range);
}

std::vector<Rat> certificate_grid_b(const Polytope& kj, std::span<const Rat> extra) {
  std::vector<Rat> pts{Rat(0)};
  for (const auto& b : breakpoints(kj)) {
    if (b.sign() >= 0) pts.push_back(b);
  }
  std::vector<Rat> in_range;
  for (const auto& t : extra) {
    if (t.sign() >= 0) in_range.push_back(t);
  }
  return merged(with_midpoints(std::move(pts)), in_range);
}

Report check_condition_a(const Polytope& k1, const Rat& r, std::span<const Rat> taus) {
  require_positive(r, "check_condition_a");
  require_orthant(k1, "check_condition_a");
  for (const auto& tau : taus) {
    if (tau.sign() < 0 || tau >= r) {
      throw ValidityError("check_condition_a: tau " + tau.str() + " outside [0, " + r.str() + ")");
    }
  }
  Report report("condition_a");
  const Polytope base = exactgeom::slice(k1, Rat(0));
  for (const auto& tau : taus) {
    Polytope actual = exactgeom::slice(k1, tau);
    Polytope expected = exactgeom::scale(base, Rat(1) - tau / r);
    Check c{"a@" + tau.str(), exactgeom::volume(actual), exactgeom::volume(expected),
            actual == expected, {}, std::nullopt};
    if (!c.pass) {
      c.note = "slice differs from the scaled base slice";
      c.witness = json{{"tau", tau.str()},
                       {"slice", polytope_to_json(actual)},
                       {"scaled_base", polytope_to_json(expected)}};
    }
    report.add(std::move(c));
  }
  return report;
}

Report check_condition_b(const Polytope& k1, const Polytope& kj, const Rat& r, std::span<const Rat> taus) {
  require_positive(r, "check_condition_b");
  if (k1.ambient_dim() != kj.ambient_dim()) throw ValidityError("check_condition_b: dimension mismatch");
  require_orthant(k1, "check_condition_b");
  require_orthant(kj, "check_condition_b");
  for (const auto& tau : taus) {
    if (tau.sign() < 0) throw ValidityError("check_condition_b: negative tau " + tau.str());
  }
  Report report("condition_b");
  const Polytope base1 = exactgeom::slice(k1, Rat(0));
  const Polytope basej = exactgeom::slice(kj, Rat(0));
  for (const auto& tau : taus) {
    Polytope sliced = exactgeom::slice(kj, tau);
    if (sliced.empty()) {
      report.note("b@" + tau.str() + ": vacuous, empty slice");
      continue;
    }
    Polytope lhs = sum_or_empty(exactgeom::scale(base1, tau / r), sliced);
    Check c{"b@" + tau.str(), exactgeom::volume(lhs), exactgeom::volume(basej),
            exactgeom::is_subset(lhs, basej), {}, std::nullopt};
    if (!c.pass) {
      c.note = "shifted slice not contained in the base slice";
      c.witness = json{{"tau", tau.str()}, {"lhs", polytope_to_json(lhs)}, {"base", polytope_to_json(basej)}};
    }
    report.add(std::move(c));
  }
  return report;
}

LemmaResult lemma31_both_sides(const BodyTuple& t, const Rat& r, const LemmaOptions& options) {
  require_positive(r, "lemma31_both_sides");
  const std::size_t d = t.dim();
  if (d < 2) throw ValidityError("lemma31_both_sides: needs d >= 2 (base slices would be zero-dimensional)");

  Report report("lemma31");
  report.merge(check_condition_a(t[0], r, certificate_grid_a(t[0], r, options.extra_taus)), "K1:");
  for (std::size_t j = 1; j < d; ++j) {
    report.merge(check_condition_b(t[0], t[j], r, certificate_grid_b(t[j], options.extra_taus)),
                 "K" + std::to_string(j + 1) + ":");
  }
  if (options.strict && !report.passed()) {
    const Check* bad = report.first_failure();
    throw ValidityError("lemma31_both_sides: hypothesis fails at " + bad->name +
                        (bad->witness ? " " + bad->witness->dump() : std::string()));
  }

  std::vector<Polytope> bases;
  for (std::size_t j = 1; j < d; ++j) {
    Polytope b = exactgeom::slice(t[j], Rat(0));
    if (b.empty()) {
      throw ValidityError("lemma31_both_sides: base slice of K" + std::to_string(j + 1) + " is empty");
    }
    bases.push_back(std::move(b));
  }
  Rat lhs = Rat(static_cast<long>(d)) / r * mixedvol::mixed_volume(t);
  Rat rhs = mixedvol::mixed_volume(BodyTuple(std::move(bases)));
  Check c{"identity", lhs, rhs, lhs == rhs, {}, std::nullopt};
  if (!c.pass) {
    c.note = "discrepancy " + (lhs - rhs).str();
    json w{{"r", r.str()}, {"bodies", json::array()}};
    for (const auto& k : t.bodies()) w["bodies"].push_back(polytope_to_json(k));
    c.witness = std::move(w);
  }
  report.add(std::move(c));
  return {std::move(lhs), std::move(rhs), std::move(report)};
}

Report check_monotone_slices(const BodyTuple& t, const Rat& r, std::span<const Rat> weights,
                             std::span<const std::pair<Rat, Rat>> tau_pairs) {
  require_positive(r, "check_monotone_slices");
  const std::size_t d = t.dim();
  if (d < 2) throw ValidityError("check_monotone_slices: needs d >= 2");
  if (weights.size() != d - 1) throw ValidityError("check_monotone_slices: need d-1 weights");
  for (const auto& [hi, lo] : tau_pairs) {
    if (lo.sign() < 0 || hi < lo) throw ValidityError("check_monotone_slices: need tau1 >= tau2 >= 0");
  }
  const Polytope base1 = exactgeom::slice(t[0], Rat(0));
  const Polytope rest = exactgeom::weighted_sum(t.bodies().subspan(1), weights);
  auto shifted = [&](const Rat& tau) {
    return sum_or_empty(exactgeom::scale(base1, tau / r), exactgeom::slice(rest, tau));
  };
  Report report("monotone_slices");
  for (const auto& [hi, lo] : tau_pairs) {
    Polytope inner = shifted(hi);
    Polytope outer = shifted(lo);
    Check c{"mono@" + hi.str() + ">=" + lo.str(), exactgeom::volume(inner), exactgeom::volume(outer),
            exactgeom::is_subset(inner, outer), {}, std::nullopt};
    if (!c.pass) {
      c.witness = json{{"inner", polytope_to_json(inner)}, {"outer", polytope_to_json(outer)}};
    }
    report.add(std::move(c));
  }
  return report;
}

}  // namespace mixedbody::slicecalc
