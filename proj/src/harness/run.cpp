#include "mixedbody/harness/run.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <map>
#include <sstream>
#include <thread>

#include "mixedbody/error.hpp"
#include "mixedbody/exactgeom/json_io.hpp"
#include "mixedbody/harness/generators.hpp"
#include "mixedbody/harness/io.hpp"
#include "mixedbody/mixedvol/mixed_volume.hpp"
#include "mixedbody/okounkov/toric.hpp"
#include "mixedbody/slicecalc/conditions.hpp"
#include "mixedbody/slicecalc/slice_profile.hpp"

namespace mixedbody::harness {

using exactgeom::Point;
using exactgeom::Polytope;
using exactgeom::Rat;
using mixedvol::BodyTuple;
using nlohmann::json;

namespace {

using Case = std::function<Report()>;

std::vector<Report> evaluate_cases(std::vector<Case> cases, unsigned threads) {
  const std::size_t n = cases.size();
  std::vector<Report> results(n);
  std::vector<std::exception_ptr> errors(n);
  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        results[i] = cases[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

json bodies_json(std::span<const Polytope> bodies) {
  json arr = json::array();
  for (const auto& b : bodies) arr.push_back(exactgeom::polytope_to_json(b));
  return arr;
}

// FNV-1a over the compact JSON serialization of a case's inputs.
std::string digest(const json& inputs) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : inputs.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Appends "input=<digest>" to every check note.
Report tag_inputs(const Report& r, const json& inputs) {
  const std::string tag = "input=" + digest(inputs);
  Report out(r.subject());
  for (auto c : r.checks()) {
    c.note = c.note.empty() ? tag : c.note + "; " + tag;
    out.add(std::move(c));
  }
  for (const auto& n : r.notes()) out.note(n);
  return out;
}

Check make_check(std::string name, Rat lhs, Rat rhs, bool pass, std::string note = {},
                 std::optional<json> witness = std::nullopt) {
  return Check{std::move(name), std::move(lhs), std::move(rhs), pass, std::move(note), std::move(witness)};
}

std::size_t body_points(std::size_t dim, Rng& rng) { return dim + 1 + static_cast<std::size_t>(rng.uniform(0, 3)); }

std::vector<Polytope> load_or_generate_bodies(const RunConfig& c, Rng& rng) {
  if (c.input_path) return tuple_from_json(read_json_file(*c.input_path)).bodies;
  std::vector<Polytope> out;
  for (std::size_t i = 0; i < c.count; ++i) out.push_back(random_lattice_polytope(c.dim, body_points(c.dim, rng), c.max_coord, rng));
  return out;
}

// ---- volume ---------------------------------------------------------------

Report run_volume(const RunConfig& c) {
  Rng rng(c.seed);
  const auto bodies = load_or_generate_bodies(c, rng);
  std::vector<Case> cases;
  for (const auto& p : bodies) {
    cases.push_back([p] {
      Report r;
      const Rat v = exactgeom::volume(p);
      const Rat f = p.ambient_dim() == 0 ? v : slicecalc::integrate_profile(slicecalc::slice_profile(p));
      r.add(make_check("volume", v, f, v == f, "volume=" + v.str(), v == f ? std::nullopt : std::optional<json>(exactgeom::polytope_to_json(p))));
      return tag_inputs(r, exactgeom::polytope_to_json(p));
    });
  }
  return run_cases("volume", std::move(cases), c.threads);
}

// ---- mixedvol -------------------------------------------------------------

Case mixedvol_case(std::vector<Polytope> bodies) {
  return [bodies = std::move(bodies)] {
    BodyTuple t(bodies);
    const auto ie = mixedvol::mixed_volume_report(t, mixedvol::Method::inclusion_exclusion);
    const auto pf = mixedvol::mixed_volume_report(t, mixedvol::Method::polynomial_fit);
    Report r;
    r.add(make_check("mixedvol", ie.value, pf.value, ie.value == pf.value, "value=" + ie.value.str(),
                     json{{"bodies", bodies_json(bodies)}}));
    return tag_inputs(r, bodies_json(bodies));
  };
}

Report run_mixedvol(const RunConfig& c) {
  std::vector<Case> cases;
  if (c.input_path) {
    cases.push_back(mixedvol_case(tuple_from_json(read_json_file(*c.input_path)).bodies));
  } else {
    Rng rng(c.seed);
    for (std::size_t i = 0; i < c.count; ++i) cases.push_back(mixedvol_case(random_tuple(c.dim, c.max_coord, rng)));
  }
  return run_cases("mixedvol", std::move(cases), c.threads);
}

// ---- slice ----------------------------------------------------------------

Report run_slice(const RunConfig& c) {
  Rng rng(c.seed);
  const auto bodies = load_or_generate_bodies(c, rng);
  std::vector<Case> cases;
  for (const auto& p : bodies) {
    cases.push_back([p, grid = c.tau_grid] {
      const auto profile = slicecalc::slice_profile(p);
      std::vector<Rat> taus = grid;
      if (taus.empty()) {
        const auto& b = profile.breakpoints();
        for (std::size_t i = 0; i < b.size(); ++i) {
          taus.push_back(b[i]);
          if (i + 1 < b.size()) taus.push_back((b[i] + b[i + 1]) / Rat(2));
        }
      }
      Report r;
      for (const auto& tau : taus) {
        const Polytope s = exactgeom::slice(p, tau);
        const Rat v = exactgeom::volume(s);
        const Rat w = profile.value_at(tau);
        r.add(make_check("slice@" + tau.str(), v, w, v == w, "slice=" + exactgeom::polytope_to_json(s)["vertices"].dump()));
      }
      return tag_inputs(r, exactgeom::polytope_to_json(p));
    });
  }
  return run_cases("slice", std::move(cases), c.threads);
}

// ---- lemma31 --------------------------------------------------------------

// Both slice conditions on the certificate grids.
bool slice_conditions_hold(std::span<const Polytope> bodies, const Rat& r) {
  for (const auto& b : bodies) {
    for (const auto& v : b.vertices()) {
      for (const auto& x : v) {
        if (x.sign() < 0) return false;
      }
    }
  }
  if (!slicecalc::check_condition_a(bodies[0], r, slicecalc::certificate_grid_a(bodies[0], r)).passed()) return false;
  for (std::size_t j = 1; j < bodies.size(); ++j) {
    const auto grid = slicecalc::certificate_grid_b(bodies[j]);
    if (!slicecalc::check_condition_b(bodies[0], bodies[j], r, grid).passed()) return false;
    if (exactgeom::slice(bodies[j], Rat(0)).empty()) return false;
  }
  return true;
}

Report run_lemma31(const RunConfig& c) {
  const slicecalc::LemmaOptions options{c.strict, c.tau_grid};
  if (c.input_path) {
    const TupleFile f = tuple_from_json(read_json_file(*c.input_path));
    if (f.bodies.empty()) throw ValidityError("lemma31: no bodies");
    const Rat r = f.r ? *f.r : exactgeom::coordinate_range(f.bodies[0], 0).second;
    auto res = slicecalc::lemma31_both_sides(BodyTuple(f.bodies), r, options);
    Report out("lemma31");
    out.merge(res.report);
    out.note("r=" + r.str() + " lhs=" + res.lhs.str() + " rhs=" + res.rhs.str());
    return out;
  }
  if (c.dim < 2) throw ValidityError("lemma31: --dim must be at least 2");
  Rng rng(c.seed);
  std::vector<SliceTuple> accepted;
  const std::size_t budget = 400 * c.count;
  std::size_t tried = 0;
  while (accepted.size() < c.count && tried < budget) {
    ++tried;
    SliceTuple cand = random_slice_candidate(c.dim, std::min<std::int64_t>(c.max_coord, 6), rng);
    if (slice_conditions_hold(cand.bodies, cand.r)) accepted.push_back(std::move(cand));
  }
  std::vector<Case> cases;
  for (auto& t : accepted) {
    cases.push_back([t, options] {
      auto res = slicecalc::lemma31_both_sides(BodyTuple(t.bodies), t.r, options);
      Report r;
      const Check& id = res.report.checks().back();
      r.add(make_check(id.name, id.lhs, id.rhs, id.pass, "r=" + t.r.str(), json{{"r", t.r.str()}, {"bodies", bodies_json(t.bodies)}}));
      return tag_inputs(r, json{{"r", t.r.str()}, {"bodies", bodies_json(t.bodies)}});
    });
  }
  Report out = run_cases("lemma31", std::move(cases), c.threads);
  out.note("accepted " + std::to_string(accepted.size()) + " of " + std::to_string(tried) + " candidates");
  if (accepted.size() < c.count) {
    out.add(make_check("sampling", Rat(static_cast<long>(accepted.size())), Rat(static_cast<long>(c.count)), false,
                       "rejection sampling budget exhausted"));
  }
  return out;
}

// ---- okounkov -------------------------------------------------------------

std::vector<okounkov::ToricBundle> random_bundles(std::size_t n, std::size_t dim, std::int64_t max_coord, Rng& rng) {
  std::vector<okounkov::ToricBundle> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.emplace_back(random_lattice_polytope(dim, body_points(dim, rng), max_coord, rng), "L" + std::to_string(i + 1));
  }
  return out;
}

Report body_case(const okounkov::ToricBundle& t, const okounkov::FlagValuation& nu, unsigned m_max) {
  Report r;
  const Polytope body = okounkov::okounkov_body(t, nu);
  const Rat vb = exactgeom::volume(body), vp = exactgeom::volume(t.polytope());
  r.add(make_check("volume", vb, vp, vb == vp));
  for (unsigned m = 1; m <= m_max; ++m) {
    const Polytope a = okounkov::approximant(t, nu, m);
    const bool ok = t.dim() == 2 ? a == body : exactgeom::is_subset(a, body);
    r.add(make_check("approximant@" + std::to_string(m), exactgeom::volume(a), vb, ok,
                     t.dim() == 2 ? "equality expected" : "inclusion expected",
                     json{{"approximant", exactgeom::polytope_to_json(a)}, {"body", exactgeom::polytope_to_json(body)}}));
  }
  r.note("body=" + exactgeom::polytope_to_json(body)["vertices"].dump());
  return tag_inputs(r, json{{"bundle", okounkov::bundle_to_json(t)}, {"flag", okounkov::flag_to_json(nu)}});
}

Report run_okounkov_body(const RunConfig& c) {
  std::vector<Case> cases;
  if (c.input_path) {
    const TheoremFile f = theorem_from_json(read_json_file(*c.input_path));
    if (f.bundles.empty()) throw ValidityError("okounkov_body: no bundles");
    const auto nu = f.flag ? *f.flag : okounkov::common_flags(f.bundles, 1).front();
    for (const auto& t : f.bundles) cases.push_back([t, nu, m = c.m_max] { return body_case(t, nu, m); });
  } else {
    Rng rng(c.seed);
    for (auto& t : random_bundles(c.count, c.dim, c.max_coord, rng)) {
      const okounkov::ToricBundle one[] = {t};
      const auto nu = okounkov::common_flags(one, 1).front();
      cases.push_back([t, nu, m = c.m_max] { return body_case(t, nu, m); });
    }
  }
  return run_cases("okounkov_body", std::move(cases), c.threads);
}

Report theorem_case(const std::vector<okounkov::ToricBundle>& ts, const std::vector<okounkov::FlagValuation>& flags) {
  Report r;
  for (std::size_t k = 0; k < flags.size(); ++k) r.merge(okounkov::theorem_check(ts, flags[k]), "flag[" + std::to_string(k) + "]:");
  json inputs = json::array();
  for (const auto& t : ts) inputs.push_back(okounkov::bundle_to_json(t));
  return tag_inputs(r, inputs);
}

Report run_theorem_check(const RunConfig& c) {
  std::vector<Case> cases;
  if (c.input_path) {
    const TheoremFile f = theorem_from_json(read_json_file(*c.input_path));
    if (f.bundles.empty()) throw ValidityError("theorem_check: no bundles");
    const auto flags = f.flag ? std::vector<okounkov::FlagValuation>{*f.flag} : okounkov::common_flags(f.bundles, 5);
    cases.push_back([ts = f.bundles, flags] { return theorem_case(ts, flags); });
  } else {
    Rng rng(c.seed);
    for (std::size_t i = 0; i < c.count; ++i) {
      auto ts = random_bundles(c.dim, c.dim, c.max_coord, rng);
      auto flags = okounkov::common_flags(ts, 5);
      cases.push_back([ts = std::move(ts), flags = std::move(flags)] { return theorem_case(ts, flags); });
    }
  }
  return run_cases("theorem_check", std::move(cases), c.threads);
}

// ---- property suites ------------------------------------------------------

Rat mv(std::vector<Polytope> bodies) { return mixedvol::mixed_volume(BodyTuple(std::move(bodies))); }

Report property_check(const std::string& name, const Rat& lhs, const Rat& rhs, bool pass, const json& inputs) {
  Report r;
  r.add(make_check(name, lhs, rhs, pass, {}, json{{"lhs", lhs.str()}, {"rhs", rhs.str()}, {"inputs", inputs}}));
  return tag_inputs(r, inputs);
}

Point random_shift(std::size_t d, std::int64_t max_coord, Rng& rng) {
  Point t;
  for (std::size_t i = 0; i < d; ++i) t.emplace_back(static_cast<long>(rng.uniform(-max_coord, max_coord)));
  return t;
}

}  // namespace

Report run_cases(const std::string& label, std::vector<Case> cases, unsigned threads) {
  std::vector<Report> results = evaluate_cases(std::move(cases), threads);
  Report out(label);
  for (std::size_t i = 0; i < results.size(); ++i) out.merge(results[i], label + "[" + std::to_string(i) + "]:");
  return out;
}

Report fuzz_ssz(const RunConfig& c) {
  Rng rng(c.seed);
  std::vector<Case> cases;
  for (std::size_t i = 0; i < c.count; ++i) {
    auto bodies = random_tuple(c.dim, c.max_coord, rng);
    Polytope k = random_lattice_polytope(c.dim, body_points(c.dim, rng), c.max_coord, rng);
    cases.push_back([bodies = std::move(bodies), k = std::move(k)] {
      json inputs{{"K", exactgeom::polytope_to_json(k)}, {"bodies", bodies_json(bodies)}};
      return tag_inputs(mixedvol::ssz_check(k, BodyTuple(bodies)), inputs);
    });
  }
  return run_cases("ssz", std::move(cases), c.threads);
}

Report fuzz_properties(const RunConfig& c) {
  Rng rng(c.seed);
  const std::size_t d = c.dim;
  const std::int64_t mc = c.max_coord;
  std::vector<Case> cases;
  std::vector<std::string> labels;
  auto add = [&](std::string name, Case fn) {
    labels.push_back(std::move(name));
    cases.push_back(std::move(fn));
  };

  for (std::size_t i = 0; i < c.count; ++i) {
    auto t = random_tuple(d, mc, rng);
    std::vector<std::size_t> perm(d);
    for (std::size_t k = 0; k < d; ++k) perm[k] = k;
    for (std::size_t k = d; k > 1; --k) std::swap(perm[k - 1], perm[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(k) - 1))]);
    add("symmetry", [t, perm] {
      std::vector<Polytope> s;
      for (auto k : perm) s.push_back(t[k]);
      const Rat a = mv(t), b = mv(s);
      return property_check("symmetry", a, b, a == b, json{{"bodies", bodies_json(t)}, {"perm", perm}});
    });
  }
  for (std::size_t i = 0; i < c.count; ++i) {
    auto t = random_tuple(d, mc, rng);
    Polytope k2 = random_lattice_polytope(d, body_points(d, rng), mc, rng);
    const Rat lambda(static_cast<long>(rng.uniform(1, 5)), static_cast<long>(rng.uniform(1, 3)));
    add("multilinearity", [t, k2, lambda] {
      auto sum = t;
      sum[0] = exactgeom::minkowski_sum(exactgeom::scale(t[0], lambda), k2);
      auto other = t;
      other[0] = k2;
      const Rat a = mv(sum), b = lambda * mv(t) + mv(other);
      return property_check("multilinearity", a, b, a == b,
                            json{{"bodies", bodies_json(t)}, {"extra", exactgeom::polytope_to_json(k2)}, {"lambda", lambda.str()}});
    });
  }
  for (std::size_t i = 0; i < c.count; ++i) {
    auto t = random_tuple(d, mc, rng);
    std::vector<Point> shifts;
    for (std::size_t k = 0; k < d; ++k) shifts.push_back(random_shift(d, mc, rng));
    add("translation", [t, shifts] {
      auto moved = t;
      for (std::size_t k = 0; k < t.size(); ++k) moved[k] = exactgeom::translate(t[k], shifts[k]);
      const Rat a = mv(t), b = mv(moved);
      return property_check("translation", a, b, a == b, json{{"bodies", bodies_json(t)}});
    });
  }
  for (std::size_t i = 0; i < c.count; ++i) {
    auto t = random_tuple(d, mc, rng);
    std::vector<Point> extra{t[0].vertices().begin(), t[0].vertices().end()};
    for (int k = 0; k < 2; ++k) {
      Point x;
      for (std::size_t j = 0; j < d; ++j) x.emplace_back(static_cast<long>(rng.uniform(0, mc)));
      extra.push_back(std::move(x));
    }
    Polytope bigger = exactgeom::hull(extra, d);
    add("monotonicity", [t, bigger] {
      auto grown = t;
      grown[0] = bigger;
      const Rat a = mv(t), b = mv(grown);
      return property_check("monotonicity", a, b, a <= b && exactgeom::is_subset(t[0], bigger),
                            json{{"bodies", bodies_json(t)}, {"bigger", exactgeom::polytope_to_json(bigger)}});
    });
  }
  for (std::size_t i = 0; i < c.count; ++i) {
    // Lower-dimensional bodies included: segments make V = 0 reachable.
    std::vector<Polytope> t;
    for (std::size_t k = 0; k < d; ++k) {
      const auto n = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(d) + 2));
      std::vector<Point> pts;
      for (std::size_t p = 0; p < n; ++p) {
        Point x;
        for (std::size_t j = 0; j < d; ++j) x.emplace_back(static_cast<long>(rng.uniform(0, mc)));
        pts.push_back(std::move(x));
      }
      t.push_back(exactgeom::hull(pts, d));
    }
    add("nonnegativity", [t] {
      const Rat a = mv(t);
      return property_check("nonnegativity", a, Rat(0), a >= Rat(0), json{{"bodies", bodies_json(t)}});
    });
  }
  for (std::size_t i = 0; i < c.count; ++i) {
    Polytope k = random_lattice_polytope(d, body_points(d, rng), mc, rng);
    add("diagonal", [k, d] {
      const Rat a = mv(std::vector<Polytope>(d, k)), b = exactgeom::volume(k);
      return property_check("diagonal", a, b, a == b, exactgeom::polytope_to_json(k));
    });
  }
  for (std::size_t i = 0; i < c.count; ++i) {
    Polytope k = random_lattice_polytope(d, body_points(d, rng), mc, rng);
    add("fubini", [k] {
      const Rat a = slicecalc::integrate_profile(slicecalc::slice_profile(k)), b = exactgeom::volume(k);
      return property_check("fubini", a, b, a == b, exactgeom::polytope_to_json(k));
    });
  }
  if (d >= 1) {
    const std::int64_t small = std::min<std::int64_t>(mc, d <= 2 ? 6 : 3);
    for (std::size_t i = 0; i < c.count; ++i) {
      auto ts = random_bundles(2, d, small, rng);
      add("subadditivity", [ts] {
        const auto nu = okounkov::common_flags(ts, 1).front();
        json inputs{{"bundles", json::array({okounkov::bundle_to_json(ts[0]), okounkov::bundle_to_json(ts[1])})},
                    {"flag", okounkov::flag_to_json(nu)}};
        return tag_inputs(okounkov::subadditivity_check(ts[0], ts[1], nu, 1), inputs);
      });
    }
  }

  std::vector<Report> results = evaluate_cases(std::move(cases), c.threads);
  Report out("properties");
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const std::size_t k = seen[labels[i]]++;
    out.merge(results[i], labels[i] + "[" + std::to_string(k) + "]:");
  }
  return out;
}

RunOutput run(const RunConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  RunOutput out{config, Report(command_name(config.command)), {}};
  switch (config.command) {
    case Command::volume: out.report = run_volume(config); break;
    case Command::mixedvol: out.report = run_mixedvol(config); break;
    case Command::slice: out.report = run_slice(config); break;
    case Command::lemma31: out.report = run_lemma31(config); break;
    case Command::okounkov_body: out.report = run_okounkov_body(config); break;
    case Command::theorem_check: out.report = run_theorem_check(config); break;
    case Command::fuzz_ssz: out.report = fuzz_ssz(config); break;
    case Command::fuzz_properties: out.report = fuzz_properties(config); break;
  }
  out.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return out;
}

json report_to_json(const RunOutput& out) {
  json cases = json::array();
  for (const auto& ch : out.report.checks()) {
    json rec{{"name", ch.name}, {"lhs", ch.lhs.str()}, {"rhs", ch.rhs.str()}, {"pass", ch.pass}};
    if (!ch.note.empty()) rec["note"] = ch.note;
    if (ch.witness) rec["witness"] = *ch.witness;
    cases.push_back(std::move(rec));
  }
  const auto& r = out.report;
  return json{{"command", command_name(out.config.command)},
              {"config", out.config.to_json()},
              {"cases", std::move(cases)},
              {"notes", r.notes()},
              {"summary", {{"cases", r.cases()}, {"passes", r.passes()}, {"failures", r.failures()}}},
              {"timing", {{"elapsed_ms", static_cast<double>(out.elapsed.count()) / 1e6}}}};
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

}  // namespace

std::string render(const RunOutput& out, OutputFormat format) {
  std::ostringstream os;
  const auto& r = out.report;
  switch (format) {
    case OutputFormat::json:
      os << report_to_json(out).dump(2) << "\n";
      break;
    case OutputFormat::csv:
      os << "name,lhs,rhs,pass,note\n";
      for (const auto& ch : r.checks()) {
        os << csv_field(ch.name) << ',' << ch.lhs.str() << ',' << ch.rhs.str() << ',' << (ch.pass ? "true" : "false")
           << ',' << csv_field(ch.note) << "\n";
      }
      break;
    case OutputFormat::text:
      os << "command: " << command_name(out.config.command) << "\n";
      for (const auto& ch : r.checks()) {
        os << (ch.pass ? "PASS " : "FAIL ") << ch.name << "  lhs=" << ch.lhs << " rhs=" << ch.rhs;
        if (!ch.note.empty()) os << "  (" << ch.note << ")";
        os << "\n";
        if (ch.witness) os << "  witness: " << ch.witness->dump() << "\n";
      }
      for (const auto& n : r.notes()) os << "note: " << n << "\n";
      os << "summary: cases=" << r.cases() << " passes=" << r.passes() << " failures=" << r.failures() << "\n";
      os << "elapsed: " << static_cast<double>(out.elapsed.count()) / 1e6 << " ms\n";
      break;
  }
  return os.str();
}

}  // namespace mixedbody::harness
