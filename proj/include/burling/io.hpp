#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "burling/burling_set.hpp"
#include "burling/frames.hpp"
#include "burling/graph.hpp"
#include "burling/mis.hpp"

namespace burling {

// All parsers throw InputError with a line or field reference on bad input.

/// Whole file as text.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

/// Graph text: `#` comment lines and blank lines are ignored, the first data
/// line is n >= 1, every further data line is an edge `u v` with
/// 0 <= u < v < n. Duplicate edges are rejected.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

/// {"elements":[names...],"prec":[[x,y],...],"adj":[[x,y],...]} where [x,y]
/// reads x ≺ y or x ⊣ y. Pairs are written in element index order.
BurlingSet parse_burling_set(std::string_view json);
std::string burling_set_to_json(const BurlingSet& b);

/// [{"id":name,"l":int,"r":int,"b":int,"t":int}, ...]
FrameFamily parse_frames(std::string_view json);
std::string frames_to_json(const FrameFamily& f);

/// One `name weight` line per element of `names` (non-negative decimal
/// integers; `#` comments allowed). Returns weights in the order of `names`.
/// Missing, unknown or repeated names are errors.
std::vector<Weight> parse_weights(std::string_view text, const std::vector<std::string>& names);

}  // namespace burling
