#include "mixedbody/exactgeom/json_io.hpp"

#include <string>

#include "mixedbody/error.hpp"

namespace mixedbody::exactgeom {

using nlohmann::json;

json rat_to_json(const Rat& x) {
  if (x.is_integer() && x.num().fits_slong_p()) return json(x.num().get_si());
  return json(x.str());
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rat::parse(std::to_string(j.get<std::uint64_t>()));
    return Rat(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  throw ParseError("expected an integer or a \"p/q\" string, got " + j.dump());
}

json point_to_json(const Point& x) {
  json row = json::array();
  for (const auto& c : x) row.push_back(rat_to_json(c));
  return row;
}

Point point_from_json(const json& j, std::size_t dim) {
  if (!j.is_array()) throw ParseError("point must be an array, got " + j.dump());
  if (j.size() != dim) {
    throw ParseError("point " + j.dump() + " has " + std::to_string(j.size()) +
                     " coordinates, expected " + std::to_string(dim));
  }
  Point x;
  x.reserve(dim);
  for (const auto& c : j) x.push_back(rat_from_json(c));
  return x;
}

json polytope_to_json(const Polytope& p) {
  json vertices = json::array();
  for (const auto& v : p.vertices()) vertices.push_back(point_to_json(v));
  return json{{"dim", p.ambient_dim()}, {"vertices", std::move(vertices)}};
}

Polytope polytope_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("polytope must be an object");
  if (!j.contains("dim") || !j.at("dim").is_number_integer() || j.at("dim").get<long>() < 0) {
    throw ParseError("polytope needs a non-negative integer \"dim\"");
  }
  if (!j.contains("vertices") || !j.at("vertices").is_array()) {
    throw ParseError("polytope needs a \"vertices\" array");
  }
  const auto dim = j.at("dim").get<std::size_t>();
  std::vector<Point> pts;
  for (const auto& row : j.at("vertices")) pts.push_back(point_from_json(row, dim));
  return hull(pts, dim);
}

}  // namespace mixedbody::exactgeom
