#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mixedbody/exactgeom/rat.hpp"

namespace mixedbody::harness {

enum class Command { volume, mixedvol, slice, lemma31, okounkov_body, theorem_check, fuzz_ssz, fuzz_properties };
enum class OutputFormat { text, json, csv };

inline constexpr std::size_t kMaxDim = 6;
inline constexpr std::int64_t kMaxCoord = 20;

struct RunConfig {
  Command command = Command::volume;
  std::optional<std::string> input_path;
  std::uint64_t seed = 0;
  std::size_t dim = 2;
  std::size_t count = 100;
  std::int64_t max_coord = 10;
  OutputFormat output_format = OutputFormat::text;
  bool strict = false;
  std::vector<exactgeom::Rat> tau_grid;
  unsigned m_max = 3;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;

  // ValidityError unless 1 <= dim <= kMaxDim, count >= 1,
  // 1 <= max_coord <= kMaxCoord and m_max >= 1.
  void validate() const;
  nlohmann::json to_json() const;
};

// Underscore names; parse_command also accepts hyphens.
std::string command_name(Command c);
std::optional<Command> parse_command(std::string name);

// "a,b,c" of rationals; ParseError on malformed entries.
std::vector<exactgeom::Rat> parse_tau_grid(const std::string& text);

}  // namespace mixedbody::harness
