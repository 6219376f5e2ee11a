#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "rreduct/decision_table.hpp"

namespace rreduct {

/// Name of the PRNG behind gen_table, recorded in comparison reports so
/// golden values stay reproducible across implementations.
inline constexpr std::string_view kGeneratorPrng = "splitmix64";

// Vigna's splitmix64; every generator draw is one next() call, so the whole
// table is a portable function of the seed.
struct SplitMix64 {
  std::uint64_t state = 0;

  constexpr std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

enum class GenMode {
  force_consistent,  // decision drawn once per distinct feature vector; output merged
  raw,               // decision drawn per row; output left as drawn
};

struct GenParams {
  std::uint32_t rows = 10;
  int features = 4;
  int values_per_feature = 2;  // >= 2
  int decision_classes = 2;    // >= 2
  std::uint64_t seed = 0;
  GenMode mode = GenMode::force_consistent;
};

/// The raw generated CSV before any merging: header F1..Fm,d; feature cells
/// drawn row-major as next() % v, then decisions (one per distinct vector in
/// first-occurrence order, or one per row in raw mode) as next() % c.
std::string gen_csv(const GenParams& params);

/// Deterministic synthetic table: byte-identical for equal params. In
/// force_consistent mode the result is merged and guaranteed conflict-free;
/// raw mode returns the rows exactly as drawn (duplicates and conflicts
/// possible, which is the point). Throws std::invalid_argument on bad params.
DecisionTable gen_table(const GenParams& params);

}  // namespace rreduct
