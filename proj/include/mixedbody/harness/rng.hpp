#pragma once

#include <cstdint>
#include <random>

namespace mixedbody::harness {

/**
 * Seeded generator with a fully specified output sequence, so runs can be
 * reproduced by other implementations.
 *
 * Engine: std::mt19937_64 (MT19937-64, default parameters), seeded with
 * the 64-bit seed directly. uniform(lo, hi) draws one engine output x and
 * returns lo + x mod (hi - lo + 1). The modulo bias is below 2^-50 for
 * the ranges used here. std::uniform_int_distribution is avoided because
 * its algorithm is implementation-defined.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mixedbody::harness
