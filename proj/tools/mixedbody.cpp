// Command-line front end. Exit codes: 0 all checks pass, 1 some check
// fails, 2 parse error, 3 validity error, 4 internal error.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "mixedbody/error.hpp"
#include "mixedbody/harness/run.hpp"

namespace {

using mixedbody::harness::Command;
using mixedbody::harness::OutputFormat;
using mixedbody::harness::RunConfig;

struct CommandInfo {
  Command command;
  const char* name;
  const char* help;
};

constexpr CommandInfo kCommands[] = {
    {Command::volume, "volume", "Volumes, cross-checked against the slice integral"},
    {Command::mixedvol, "mixedvol", "Mixed volume by inclusion-exclusion, cross-checked by polynomial fit"},
    {Command::slice, "slice", "Slices x_1 = tau and their volumes against the slice profile"},
    {Command::lemma31, "lemma31", "Both sides of the slice identity (d/r) V(K) = V(K_{2,0}, ...)"},
    {Command::okounkov_body, "okounkov_body", "Newton-Okounkov bodies of toric bundles with approximant checks"},
    {Command::theorem_check, "theorem_check", "Intersection number against d! V of the Newton-Okounkov bodies"},
    {Command::fuzz_ssz, "fuzz_ssz", "Random instances of the mixed-volume product inequality"},
    {Command::fuzz_properties, "fuzz_properties", "Mixed-volume invariant suite on random instances"},
};

void add_options(CLI::App& sub, RunConfig& c, std::string& tau_text, std::string& format) {
  sub.add_option("--input", c.input_path, "Input JSON file (tuple or theorem schema)")->check(CLI::ExistingFile);
  sub.add_option("--seed", c.seed, "PRNG seed")->capture_default_str();
  sub.add_option("--dim", c.dim, "Dimension of generated instances")->capture_default_str();
  sub.add_option("--count", c.count, "Number of generated cases")->capture_default_str();
  sub.add_option("--max-coord", c.max_coord, "Lattice coordinates are drawn from [0, max-coord]")->capture_default_str();
  sub.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
  sub.add_flag("--strict", c.strict, "Refuse to evaluate the slice identity when a condition fails");
  sub.add_option("--tau-grid", tau_text, "Comma-separated rationals, e.g. \"0,1/2,1\"");
  sub.add_option("--m-max", c.m_max, "Largest approximant level")->capture_default_str();
  sub.add_option("--threads", c.threads, "Worker threads (0 = hardware concurrency)")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact mixed volumes, slice identities and toric Newton-Okounkov bodies"};
  app.require_subcommand(1);
  RunConfig config;
  std::string tau_text;
  std::string format = "text";
  for (const auto& info : kCommands) {
    CLI::App* sub = app.add_subcommand(info.name, info.help);
    std::string hyphen = info.name;
    std::replace(hyphen.begin(), hyphen.end(), '_', '-');
    if (hyphen != info.name) sub->alias(hyphen);
    add_options(*sub, config, tau_text, format);
    sub->callback([&config, cmd = info.command] { config.command = cmd; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    config.tau_grid = mixedbody::harness::parse_tau_grid(tau_text);
    config.output_format = format == "json" ? OutputFormat::json : format == "csv" ? OutputFormat::csv : OutputFormat::text;
    const auto out = mixedbody::harness::run(config);
    std::cout << mixedbody::harness::render(out, config.output_format);
    return out.exit_code();
  } catch (const mixedbody::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const mixedbody::ValidityError& e) {
    std::cerr << "validity error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
