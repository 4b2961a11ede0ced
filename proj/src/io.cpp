#include "burling/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "burling/errors.hpp"

namespace burling {

namespace {

using nlohmann::json;

struct Line {
  std::size_t number;
  std::vector<std::string_view> fields;
};

// Non-blank, non-comment lines split on whitespace.
std::vector<Line> data_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);

    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) fields.push_back(line.substr(start, i - start));
    }
    if (fields.empty() || fields[0].front() == '#') continue;
    lines.push_back({number, std::move(fields)});
  }
  return lines;
}

[[noreturn]] void fail_at(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

template <typename Int>
Int parse_int(std::string_view field, std::size_t line, const char* what) {
  Int value{};
  auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || end != field.data() + field.size()) {
    fail_at(line, std::string("expected ") + what + ", got '" + std::string(field) + "'");
  }
  return value;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

const json& member(const json& object, const char* key) {
  auto it = object.find(key);
  if (it == object.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

std::string quoted(const std::string& s) { return json(s).dump(); }

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("cannot write '" + path + "'");
}

Graph parse_graph(std::string_view text) {
  auto lines = data_lines(text);
  if (lines.empty()) throw InputError("graph file has no vertex count");
  const Line& head = lines.front();
  if (head.fields.size() != 1) fail_at(head.number, "expected the vertex count alone");
  const auto n = parse_int<std::uint32_t>(head.fields[0], head.number, "a vertex count");
  if (n < 1) fail_at(head.number, "the vertex count must be at least 1");

  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.fields.size() != 2) fail_at(line.number, "expected an edge 'u v'");
    auto u = parse_int<Vertex>(line.fields[0], line.number, "a vertex");
    auto v = parse_int<Vertex>(line.fields[1], line.number, "a vertex");
    if (!(u < v)) fail_at(line.number, "edges are written 'u v' with u < v");
    if (v >= n) fail_at(line.number, "vertex " + std::to_string(v) + " is out of range");
    if (!seen.emplace(u, v).second) fail_at(line.number, "duplicate edge");
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

BurlingSet parse_burling_set(std::string_view text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw InputError("a Burling set file holds a JSON object");
  const json& elements = member(doc, "elements");
  if (!elements.is_array()) throw InputError("'elements' must be an array");
  std::vector<std::string> names;
  std::unordered_map<std::string, Element> index;
  for (const auto& e : elements) {
    if (!e.is_string()) throw InputError("element names must be strings");
    index.emplace(e.get<std::string>(), static_cast<Element>(names.size()));
    names.push_back(e.get<std::string>());
  }

  auto pairs = [&](const char* key) {
    const json& list = member(doc, key);
    if (!list.is_array()) throw InputError(std::string("'") + key + "' must be an array");
    std::vector<ElementPair> out;
    for (const auto& p : list) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
        throw InputError(std::string("entries of '") + key + "' must be pairs of names");
      }
      auto x = index.find(p[0].get<std::string>());
      auto y = index.find(p[1].get<std::string>());
      if (x == index.end() || y == index.end()) {
        throw InputError(std::string("'") + key + "' names an unknown element in " + p.dump());
      }
      out.emplace_back(x->second, y->second);
    }
    return out;
  };
  auto prec = pairs("prec");
  auto adj = pairs("adj");
  return BurlingSet(std::move(names), std::move(prec), std::move(adj));
}

std::string burling_set_to_json(const BurlingSet& b) {
  std::ostringstream out;
  out << "{\n  \"elements\": [";
  for (Element x = 0; x < b.size(); ++x) out << (x ? ", " : "") << quoted(b.name(x));
  auto write_pairs = [&](const std::vector<ElementPair>& pairs) {
    out << '[';
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      out << (i ? ", " : "") << '[' << quoted(b.name(pairs[i].first)) << ", " << quoted(b.name(pairs[i].second))
          << ']';
    }
    out << ']';
  };
  out << "],\n  \"prec\": ";
  write_pairs(b.prec_pairs());
  out << ",\n  \"adj\": ";
  write_pairs(b.adj_pairs());
  out << "\n}\n";
  return out.str();
}

FrameFamily parse_frames(std::string_view text) {
  json doc = parse_json(text);
  if (!doc.is_array()) throw InputError("a frames file holds a JSON array");
  FrameFamily f;
  for (const auto& entry : doc) {
    if (!entry.is_object()) throw InputError("each frame must be a JSON object");
    const json& id = member(entry, "id");
    if (!id.is_string()) throw InputError("frame 'id' must be a string");
    Frame frame;
    frame.id = id.get<std::string>();
    auto coord = [&](const char* key) {
      const json& v = member(entry, key);
      if (!v.is_number_integer()) throw InputError("frame '" + frame.id + "': '" + key + "' must be an integer");
      return v.get<Coord>();
    };
    frame.l = coord("l");
    frame.r = coord("r");
    frame.b = coord("b");
    frame.t = coord("t");
    f.push_back(std::move(frame));
  }
  check_frame_family(f);
  return f;
}

std::string frames_to_json(const FrameFamily& f) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Frame& frame = f[i];
    out << (i ? ",\n " : "\n ") << "{\"id\": " << quoted(frame.id) << ", \"l\": " << frame.l
        << ", \"r\": " << frame.r << ", \"b\": " << frame.b << ", \"t\": " << frame.t << '}';
  }
  out << (f.empty() ? "]\n" : "\n]\n");
  return out.str();
}

std::vector<Weight> parse_weights(std::string_view text, const std::vector<std::string>& names) {
  std::unordered_map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], i);
  std::vector<Weight> w(names.size(), 0);
  std::vector<bool> given(names.size(), false);
  for (const Line& line : data_lines(text)) {
    if (line.fields.size() != 2) fail_at(line.number, "expected 'name weight'");
    auto it = index.find(line.fields[0]);
    if (it == index.end()) fail_at(line.number, "unknown element '" + std::string(line.fields[0]) + "'");
    if (given[it->second]) fail_at(line.number, "repeated element '" + std::string(line.fields[0]) + "'");
    if (line.fields[1].front() == '-') fail_at(line.number, "weights must be non-negative");
    w[it->second] = parse_int<Weight>(line.fields[1], line.number, "a non-negative integer weight");
    given[it->second] = true;
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!given[i]) throw InputError("no weight for element '" + names[i] + "'");
  }
  return w;
}

}  // namespace burling
