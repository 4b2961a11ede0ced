#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "burling/burling_set.hpp"
#include "burling/graph.hpp"

namespace burling {

using Coord = std::int64_t;

/// Boundary of the axis-parallel rectangle [l, r] × [b, t].
struct Frame {
  std::string id;
  Coord l = 0, r = 0, b = 0, t = 0;

  friend bool operator==(const Frame&, const Frame&) = default;
};

// Ids must be distinct and every frame must have l < r and b < t.
using FrameFamily = std::vector<Frame>;

// Throws InputError when a family breaks the invariants above.
void check_frame_family(const FrameFamily& f);

/// Values 1..2|S| for the left and right sides, plus the number of
/// "strictly less" constraints that produced them.
struct HorizontalOrder {
  std::vector<Coord> left;
  std::vector<Coord> right;
  std::size_t constraints = 0;
};

/// Topologically sorts the symbols l_x, r_x under
///   (1)  l_x < r_x;
///   (2)  l_x < l_y       when y R x;
///   (2') l_y < r_x       when y R x;
///   (3)  r_x < r_y       when x ≺ y or y ⊣ x;
///   (4)  r_x < l_y       when y R z ⊣ x for some z,
/// where R = ≺ ∪ ⊣. In linear mode (4) is only emitted for the ≺-maximal
/// x among the ⊣-successors of each z, keeping the system at O(|S| + |R|)
/// constraints. Ties are broken by the smallest symbol (l_x = 2x, r_x = 2x+1).
/// Throws ContractError if the constraints are cyclic.
HorizontalOrder horizontal_order(const BurlingSet& b, bool linear);

struct VerticalOrder {
  std::vector<Coord> bottom;
  std::vector<Coord> top;
};

/// DFS enter/exit times over the forest where each non-root element hangs
/// below its unique R-parent. Roots and children are visited in ascending
/// element order.
VerticalOrder vertical_order(const BurlingSet& b);

/// Strict frame representation of a valid Burling set; frame i represents
/// element i and is named after it.
FrameFamily build_frames(const BurlingSet& b, bool linear);

struct StrictViolation {
  // "corner", "pair" or "triple".
  std::string kind;
  std::vector<std::size_t> frames;
};

struct StrictReport {
  std::vector<StrictViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
  std::string describe(const FrameFamily& f) const;
};

/// Checks that no corner lies on another frame, that every intersecting pair
/// crosses as l_i < l_j < r_i < r_j, b_i < b_j < t_j < t_i (in some
/// orientation), and that no triple escalates that crossing.
StrictReport verify_strict(const FrameFamily& f);

/// Reads x ≺ y off full nesting and x ⊣ y off the crossing pattern
/// l_y < l_x < r_y < r_x, b_y < b_x < t_x < t_y. Throws InputError unless the
/// family is strict.
BurlingSet extract_burling(const FrameFamily& f);

bool frames_intersect(const Frame& a, const Frame& b);

/// Edge uv iff the boundaries of frames u and v meet.
Graph intersection_graph(const FrameFamily& f);

}  // namespace burling
