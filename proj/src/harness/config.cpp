#include "mixedbody/harness/config.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "mixedbody/error.hpp"
#include "mixedbody/exactgeom/json_io.hpp"

namespace mixedbody::harness {

namespace {

constexpr std::array<std::pair<Command, const char*>, 8> kCommands{{
    {Command::volume, "volume"},
    {Command::mixedvol, "mixedvol"},
    {Command::slice, "slice"},
    {Command::lemma31, "lemma31"},
    {Command::okounkov_body, "okounkov_body"},
    {Command::theorem_check, "theorem_check"},
    {Command::fuzz_ssz, "fuzz_ssz"},
    {Command::fuzz_properties, "fuzz_properties"},
}};

const char* format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::text: return "text";
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
  }
  return "text";
}

}  // namespace

std::string command_name(Command c) {
  for (const auto& [cmd, name] : kCommands) {
    if (cmd == c) return name;
  }
  throw InternalError("unknown command");
}

std::optional<Command> parse_command(std::string name) {
  std::replace(name.begin(), name.end(), '-', '_');
  for (const auto& [cmd, n] : kCommands) {
    if (name == n) return cmd;
  }
  return std::nullopt;
}

std::vector<exactgeom::Rat> parse_tau_grid(const std::string& text) {
  std::vector<exactgeom::Rat> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    out.push_back(exactgeom::Rat::parse(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void RunConfig::validate() const {
  if (dim < 1 || dim > kMaxDim) {
    throw ValidityError("--dim must be in [1, " + std::to_string(kMaxDim) + "], got " + std::to_string(dim));
  }
  if (count < 1) throw ValidityError("--count must be at least 1");
  if (max_coord < 1 || max_coord > kMaxCoord) {
    throw ValidityError("--max-coord must be in [1, " + std::to_string(kMaxCoord) + "], got " +
                        std::to_string(max_coord));
  }
  if (m_max < 1) throw ValidityError("--m-max must be at least 1");
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json taus = nlohmann::json::array();
  for (const auto& t : tau_grid) taus.push_back(t.str());
  nlohmann::json j{{"command", command_name(command)},
                   {"seed", seed},
                   {"dim", dim},
                   {"count", count},
                   {"max_coord", max_coord},
                   {"format", format_name(output_format)},
                   {"strict", strict},
                   {"tau_grid", std::move(taus)},
                   {"m_max", m_max}};
  j["input"] = input_path ? nlohmann::json(*input_path) : nlohmann::json(nullptr);
  return j;
}

}  // namespace mixedbody::harness
