#include "mixedbody/slicecalc/slice_profile.hpp"

#include <algorithm>

#include "mixedbody/error.hpp"

namespace mixedbody::slicecalc {

using exactgeom::Matrix;
using exactgeom::Vec;

Rat Polynomial::operator()(const Rat& x) const {
  Rat r(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
  return r;
}

Rat Polynomial::integral(const Rat& a, const Rat& b) const {
  Rat r(0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const auto e = static_cast<unsigned>(k + 1);
    r += coeffs[k] * (exactgeom::pow(b, e) - exactgeom::pow(a, e)) / Rat(static_cast<long>(e));
  }
  return r;
}

Rat SliceProfile::value_at(const Rat& tau) const {
  if (breakpoints_.empty() || tau < breakpoints_.front() || tau > breakpoints_.back()) return Rat(0);
  if (pieces_.empty()) return exactgeom::volume(exactgeom::slice(polytope_, tau));
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), tau);
  std::size_t piece = it == breakpoints_.begin() ? 0 : static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  return pieces_[piece](tau);
}

bool SliceProfile::continuous() const {
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    if (pieces_[i - 1](breakpoints_[i]) != pieces_[i](breakpoints_[i])) return false;
  }
  return true;
}

std::vector<Rat> breakpoints(const Polytope& p) {
  std::vector<Rat> xs;
  for (const auto& v : p.vertices()) xs.push_back(v[0]);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

SliceProfile slice_profile(const Polytope& p) {
  const std::size_t d = p.ambient_dim();
  if (d == 0) throw ValidityError("slice_profile: ambient dimension 0");
  if (p.empty()) throw ValidityError("slice_profile: empty polytope");
  std::vector<Rat> bps = breakpoints(p);
  std::vector<Polynomial> pieces;
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    const Rat step = (bps[i + 1] - bps[i]) / Rat(static_cast<long>(d + 1));
    Matrix vander;
    Vec values;
    for (std::size_t j = 1; j <= d; ++j) {
      const Rat tau = bps[i] + Rat(static_cast<long>(j)) * step;
      Vec row(d);
      Rat power(1);
      for (std::size_t k = 0; k < d; ++k) {
        row[k] = power;
        power *= tau;
      }
      vander.push_back(std::move(row));
      values.push_back(exactgeom::volume(exactgeom::slice(p, tau)));
    }
    auto coeffs = exactgeom::solve(std::move(vander), std::move(values));
    if (!coeffs) throw InternalError("slice_profile: singular Vandermonde system");
    pieces.push_back({std::move(*coeffs)});
  }
  return SliceProfile(p, std::move(bps), std::move(pieces));
}

Rat integrate_profile(const SliceProfile& s) {
  Rat total(0);
  const auto& bps = s.breakpoints();
  for (std::size_t i = 0; i < s.pieces().size(); ++i) total += s.pieces()[i].integral(bps[i], bps[i + 1]);
  return total;
}

}  // namespace mixedbody::slicecalc
