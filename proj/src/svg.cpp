#include "burling/svg.hpp"

#include <algorithm>
#include <sstream>

namespace burling {

namespace {

constexpr Coord kScale = 10;
constexpr Coord kMargin = 10;
constexpr Coord kLabelMargin = 60;

std::string escape_xml(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const FrameFamily& f) {
  check_frame_family(f);
  Coord min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  if (!f.empty()) {
    min_x = f[0].l, max_x = f[0].r, min_y = f[0].b, max_y = f[0].t;
    for (const auto& frame : f) {
      min_x = std::min(min_x, frame.l);
      max_x = std::max(max_x, frame.r);
      min_y = std::min(min_y, frame.b);
      max_y = std::max(max_y, frame.t);
    }
  }
  const Coord width = (max_x - min_x) * kScale + kLabelMargin + kMargin;
  const Coord height = (max_y - min_y) * kScale + 2 * kMargin;
  auto px = [&](Coord x) { return (x - min_x) * kScale + kLabelMargin; };
  auto py = [&](Coord y) { return (max_y - y) * kScale + kMargin; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  for (const auto& frame : f) {
    out << "  <rect x=\"" << px(frame.l) << "\" y=\"" << py(frame.t) << "\" width=\""
        << (frame.r - frame.l) * kScale << "\" height=\"" << (frame.t - frame.b) * kScale
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
  for (const auto& frame : f) {
    const Coord mid = (py(frame.b) + py(frame.t)) / 2;
    out << "  <text x=\"" << px(frame.l) - 3 << "\" y=\"" << mid
        << "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"end\" dominant-baseline=\"middle\">"
        << escape_xml(frame.id) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace burling
