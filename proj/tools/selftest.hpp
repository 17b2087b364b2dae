#pragma once

#include <cstdint>
#include <ostream>

namespace wordrep::cli {

struct SelftestConfig {
  std::uint64_t seed = 1;
  std::size_t iterations = 200;
  std::size_t max_cube = 6;
};

/// Seeded randomized replay of the construction properties: product words
/// against Cartesian products, the projection-concatenation rule, the
/// diagonal alternation shape, and the cube words. Writes one line per
/// property and returns true when all hold.
bool run_selftest(const SelftestConfig& config, std::ostream& out);

}  // namespace wordrep::cli
