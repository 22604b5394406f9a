#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "mixedbody/error.hpp"
#include "mixedbody/harness/config.hpp"
#include "mixedbody/harness/generators.hpp"
#include "mixedbody/harness/run.hpp"

namespace {

using mixedbody::ParseError;
using mixedbody::Report;
using mixedbody::ValidityError;
using namespace mixedbody::harness;
using mixedbody::exactgeom::Rat;

TEST(Rng, DocumentedSequence) {
  Rng rng(42);
  std::mt19937_64 ref(42);
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t x = ref();
    EXPECT_EQ(rng.uniform(-3, 7), -3 + static_cast<std::int64_t>(x % 11));
  }
}

TEST(Generators, DeterministicAndFullDimensional) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    Rng a(seed), b(seed);
    const auto p = random_lattice_polytope(2, 3, 1, a);
    EXPECT_EQ(p, random_lattice_polytope(2, 3, 1, b));
    EXPECT_GT(volume(p), Rat(0));
  }
  Rng rng(9);
  for (std::size_t d = 1; d <= 4; ++d) {
    for (int i = 0; i < 10; ++i) EXPECT_TRUE(random_lattice_polytope(d, d + 1, 3, rng).full_dimensional());
  }
  EXPECT_THROW(random_lattice_polytope(3, 3, 5, rng), ValidityError);
}

TEST(Generators, SliceCandidatesSatisfyConditionA) {
  Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    auto t = random_slice_candidate(3, 6, rng);
    ASSERT_EQ(t.bodies.size(), 3u);
    const auto base = slice(t.bodies[0], Rat(0));
    EXPECT_EQ(slice(t.bodies[0], t.r / Rat(2)), scale(base, Rat(1, 2)));
  }
}

TEST(Config, CommandNames) {
  EXPECT_EQ(parse_command("theorem-check"), Command::theorem_check);
  EXPECT_EQ(parse_command("theorem_check"), Command::theorem_check);
  EXPECT_EQ(parse_command("fuzz-properties"), Command::fuzz_properties);
  EXPECT_FALSE(parse_command("nope").has_value());
  EXPECT_EQ(command_name(Command::okounkov_body), "okounkov_body");
}

TEST(Config, TauGrid) {
  EXPECT_EQ(parse_tau_grid("0, 1/2,3"), (std::vector<Rat>{Rat(0), Rat(1, 2), Rat(3)}));
  EXPECT_TRUE(parse_tau_grid("").empty());
  EXPECT_THROW(parse_tau_grid("1,,2"), ParseError);
  EXPECT_THROW(parse_tau_grid("0.5"), ParseError);
}

TEST(Config, Validation) {
  RunConfig c;
  EXPECT_NO_THROW(c.validate());
  c.dim = 7;
  EXPECT_THROW(c.validate(), ValidityError);
  c.dim = 2;
  c.count = 0;
  EXPECT_THROW(c.validate(), ValidityError);
  c.count = 1;
  c.max_coord = 21;
  EXPECT_THROW(c.validate(), ValidityError);
}

TEST(RunCases, IndexOrderedMergeUnderThreads) {
  std::vector<std::function<Report()>> cases;
  for (int i = 0; i < 40; ++i) {
    cases.push_back([i] {
      Report r;
      r.add({"c", Rat(i), Rat(i), true, {}, std::nullopt});
      return r;
    });
  }
  Report out = run_cases("x", std::move(cases), 4);
  ASSERT_EQ(out.cases(), 40u);
  for (int i = 0; i < 40; ++i) {
    EXPECT_EQ(out.checks()[i].name, "x[" + std::to_string(i) + "]:c");
    EXPECT_EQ(out.checks()[i].lhs, Rat(i));
  }
}

TEST(RunCases, FirstErrorInIndexOrderIsRethrown) {
  std::vector<std::function<Report()>> cases;
  cases.push_back([]() -> Report { return Report(); });
  cases.push_back([]() -> Report { throw ValidityError("first"); });
  cases.push_back([]() -> Report { throw std::logic_error("second"); });
  try {
    run_cases("x", std::move(cases), 3);
    FAIL();
  } catch (const ValidityError& e) {
    EXPECT_STREQ(e.what(), "first");
  }
}

TEST(Run, DeterministicJsonAcrossThreadCounts) {
  RunConfig c;
  c.command = Command::fuzz_properties;
  c.count = 5;
  c.seed = 77;
  c.threads = 1;
  auto a = report_to_json(run(c));
  c.threads = 3;
  auto b = report_to_json(run(c));
  a.erase("timing");
  b.erase("timing");
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a["summary"]["failures"], 0);
}

TEST(Run, WitnessExactlyOnFailures) {
  RunConfig c;
  c.command = Command::fuzz_ssz;
  c.count = 20;
  auto out = run(c);
  EXPECT_EQ(out.exit_code(), 0);
  auto j = report_to_json(out);
  for (const auto& rec : j["cases"]) EXPECT_EQ(rec.contains("witness"), !rec["pass"].get<bool>());
  EXPECT_EQ(j["summary"]["cases"].get<std::size_t>() - j["summary"]["passes"].get<std::size_t>(),
            j["summary"]["failures"].get<std::size_t>());
}

TEST(Run, EveryGeneratedCommandPasses) {
  for (Command cmd : {Command::volume, Command::mixedvol, Command::slice, Command::lemma31, Command::okounkov_body,
                      Command::theorem_check}) {
    RunConfig c;
    c.command = cmd;
    c.count = 3;
    c.seed = 5;
    c.max_coord = 6;
    auto out = run(c);
    EXPECT_EQ(out.exit_code(), 0) << command_name(cmd) << "\n" << render(out, OutputFormat::text);
    EXPECT_GT(out.report.cases(), 0u);
  }
}

TEST(Render, CsvQuotesFields) {
  RunOutput out{RunConfig{}, Report("t"), {}};
  out.report.add({"a,b", Rat(1), Rat(1), true, "say \"hi\"", std::nullopt});
  EXPECT_EQ(render(out, OutputFormat::csv), "name,lhs,rhs,pass,note\n\"a,b\",1,1,true,\"say \"\"hi\"\"\"\n");
}

}  // namespace
