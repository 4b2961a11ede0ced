#pragma once

#include <optional>
#include <span>

#include "burling/burling_set.hpp"
#include "burling/graph.hpp"
#include "burling/mis.hpp"

namespace burling {

inline constexpr std::size_t kBruteForceMwisLimit = 24;
inline constexpr std::size_t kExhaustiveRecognizeLimit = 6;

/// Exact optimum by branching over vertices with independence pruning.
/// Throws InputError above kBruteForceMwisLimit vertices.
IndependentSet brute_force_mwis(const Graph& g, std::span<const Weight> w);

/// Searches every relation pair assignment (two ⊣ orientations per edge;
/// unrelated, x ≺ y or y ≺ x per non-edge) in lexicographic pair order and
/// returns the first candidate that is a Burling set with adjacency graph `g`.
/// Throws InputError above kExhaustiveRecognizeLimit vertices.
std::optional<BurlingSet> exhaustive_recognize(const Graph& g);

}  // namespace burling
