#pragma once

#include "json.hpp"
#include "mixedbody/exactgeom/polytope.hpp"
#include "mixedbody/exactgeom/rat.hpp"

namespace mixedbody::exactgeom {

// Rationals travel as bare JSON integers or as strings "p" / "p/q".
// Integers outside the int64 range are written as strings.
nlohmann::json rat_to_json(const Rat& x);
Rat rat_from_json(const nlohmann::json& j);

nlohmann::json point_to_json(const Point& x);
Point point_from_json(const nlohmann::json& j, std::size_t dim);

// {"dim": d, "vertices": [[...], ...]}. Input vertices need not be
// irredundant; the result is their canonical hull. Ragged rows and
// malformed rationals raise ParseError.
nlohmann::json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const nlohmann::json& j);

}  // namespace mixedbody::exactgeom
