#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mixedbody/exactgeom/polytope.hpp"
#include "mixedbody/okounkov/toric.hpp"

namespace mixedbody::harness {

// Reads and parses a JSON document; ParseError on I/O or syntax errors.
nlohmann::json read_json_file(const std::string& path);

// {"bodies": [<Polytope>, ...], "r": optional rational}. A bare polytope
// object is accepted as a one-body file.
struct TupleFile {
  std::vector<exactgeom::Polytope> bodies;
  std::optional<exactgeom::Rat> r;
};
TupleFile tuple_from_json(const nlohmann::json& j);

// {"bundles": [<ToricBundle>, ...], "flag": optional <FlagValuation>}.
struct TheoremFile {
  std::vector<okounkov::ToricBundle> bundles;
  std::optional<okounkov::FlagValuation> flag;
};
TheoremFile theorem_from_json(const nlohmann::json& j);

}  // namespace mixedbody::harness
