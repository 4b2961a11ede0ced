#pragma once

#include <string>

#include "burling/frames.hpp"

namespace burling {

/// SVG 1.1 drawing of a frame family: one unfilled rectangle per frame at
/// 10 px per unit, y pointing up, each id written at its frame's left side.
std::string render_svg(const FrameFamily& f);

}  // namespace burling
