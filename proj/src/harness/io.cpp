#include "mixedbody/harness/io.hpp"

#include <fstream>
#include <sstream>

#include "mixedbody/error.hpp"
#include "mixedbody/exactgeom/json_io.hpp"

namespace mixedbody::harness {

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

TupleFile tuple_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("tuple file: expected a JSON object");
  TupleFile out;
  if (j.contains("vertices")) {
    out.bodies.push_back(exactgeom::polytope_from_json(j));
    return out;
  }
  if (!j.contains("bodies") || !j.at("bodies").is_array()) {
    throw ParseError("tuple file: expected \"bodies\": [<polytope>, ...]");
  }
  for (const auto& b : j.at("bodies")) out.bodies.push_back(exactgeom::polytope_from_json(b));
  if (j.contains("r")) out.r = exactgeom::rat_from_json(j.at("r"));
  return out;
}

TheoremFile theorem_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("bundles") || !j.at("bundles").is_array()) {
    throw ParseError("theorem file: expected \"bundles\": [<bundle>, ...]");
  }
  TheoremFile out;
  for (const auto& b : j.at("bundles")) out.bundles.push_back(okounkov::bundle_from_json(b));
  if (j.contains("flag")) out.flag = okounkov::flag_from_json(j.at("flag"));
  return out;
}

}  // namespace mixedbody::harness
