#pragma once

#include <cstddef>
#include <cstdint>

#include "burling/burling_set.hpp"

namespace burling {

struct GeneratorConfig {
  std::uint64_t seed = 0;
  std::size_t target_size = 1;
  // Chance of attaching a fresh probe on each growth step.
  double probe_bias = 0.4;
  // Chance of a join among the remaining steps.
  double join_mix = 0.5;
};

/// Random Burling set with exactly `target_size` elements named
/// "0".."n-1". Grows from a singleton by attaching probes to exposed
/// elements, adding isolated elements, and outer/inner joins with smaller
/// generated sets. Randomness comes from std::mt19937_64 seeded with
/// `cfg.seed`, so the output is reproducible across platforms.
/// Throws InputError on an invalid config.
BurlingSet gen_burling(const GeneratorConfig& cfg);

}  // namespace burling
