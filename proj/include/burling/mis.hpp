#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "burling/burling_set.hpp"
#include "burling/graph.hpp"

namespace burling {

// Exact, non-negative.
using Weight = std::int64_t;

struct IndependentSet {
  std::vector<std::uint32_t> members;  // sorted ascending
  Weight weight = 0;
};

/// R = ≺ ∪ ⊣ as a pair list, after checking that it is chordal: acyclic, and
/// any two R-successors of a common element are R-related. Throws
/// ContractError otherwise (impossible for a valid Burling set).
std::vector<ElementPair> chordal_relation(const BurlingSet& b);

/// Maximum-weight independent set of the graph underlying a chordal
/// relation on 0..n-1.
///
/// Elements are processed in a perfect elimination order (every element
/// before its R-successors, smallest index first among the ready ones). A
/// forward pass marks elements whose residual weight is still positive and
/// charges that residual to their later closed neighbourhood; a backward pass
/// keeps each marked element that has no neighbour already kept.
///
/// Throws InputError on negative weights or a size mismatch, ContractError if
/// the relation is not chordal.
IndependentSet mwis_chordal(std::size_t n, std::span<const ElementPair> relation, std::span<const Weight> w);

/// Maximum-weight independent set of the adjacency graph of a valid Burling
/// set, by dynamic programming over the down-sets V_u = {x : x ≺ u}.
IndependentSet solve_indep(const BurlingSet& b, std::span<const Weight> w);

/// Recognises `g` first; nothing if it is not a Burling graph.
std::optional<IndependentSet> max_weight_independent_set(const Graph& g, std::span<const Weight> w);

}  // namespace burling
